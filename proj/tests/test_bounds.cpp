#include <doctest.h>

#include <cmath>

#include "hamex/bounds.hpp"
#include "hamex/errors.hpp"
#include "hamex/graph.hpp"
#include "hamex/oracles.hpp"

using namespace hamex;

namespace {

// exact C(n,k) in double (grid stays far below 2^53)
double choose(long long n, long long k) {
  if (k < 0 || k > n) return 0.0;
  double c = 1.0;
  for (long long i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Pr(X < t) and Pr(X > t) for X ~ Bin(n,p) with the strict-inequality edge
// handled at integer t.
double lower_tail_strict(long long n, double p, double t) {
  long long k = static_cast<long long>(std::ceil(t));
  if (std::floor(t) == t) k = static_cast<long long>(t);
  return 1.0 - binomial_tail_exact(n, p, k);
}
double upper_tail_strict(long long n, double p, double t) {
  long long k = static_cast<long long>(std::floor(t)) + 1;
  return binomial_tail_exact(n, p, k);
}

}  // namespace

TEST_CASE("binom_coeff_bounds on pinned examples") {
  auto b = binom_coeff_bounds(10, 3, 1);
  CHECK(choose(10, 3) == 120.0);
  CHECK(b.upper_on_coeff >= 120.0);
  CHECK(b.upper_on_coeff == doctest::Approx(std::pow(10.0 * std::exp(1.0) / 3.0, 3)));

  auto r = binom_coeff_bounds(10, 2, 2);
  double exact_ratio = choose(8, 2) / choose(10, 2);
  CHECK(exact_ratio == doctest::Approx(28.0 / 45.0));
  CHECK(r.upper_on_ratio == doctest::Approx(std::exp(-0.4)));
  CHECK(r.upper_on_ratio >= exact_ratio);

  auto nn = binom_coeff_bounds(7, 7, 1);
  CHECK(nn.upper_on_coeff >= 1.0);

  CHECK_THROWS_AS(binom_coeff_bounds(5, 6, 1), input_error);
  CHECK_THROWS_AS(binom_coeff_bounds(5, 3, 4), input_error);
  CHECK_THROWS_AS(binom_coeff_bounds(5, 3, 0), input_error);
}

TEST_CASE("binom_tail_bounds dominates exact tails (pinned examples)") {
  auto b = binom_tail_bounds(20, 0.5, 15);
  CHECK(b.tail_upper == doctest::Approx(std::pow(20 * std::exp(1.0) * 0.5 / 15.0, 15)));
  double exact = binomial_tail_exact(20, 0.5, 15);
  CHECK(exact == doctest::Approx(0.02069473).epsilon(1e-4));
  CHECK(b.tail_upper >= exact);

  auto b2 = binom_tail_bounds(100, 0.01, 10);
  CHECK(b2.tail_upper == doctest::Approx(std::pow(std::exp(1.0) / 10.0, 10)));
  CHECK(b2.tail_upper >= binomial_tail_exact(100, 0.01, 10));

  // k = n: Pr(X = n) = p^n
  auto b3 = binom_tail_bounds(5, 0.1, 5);
  CHECK(b3.point_upper >= std::pow(0.1, 5));

  CHECK_THROWS_AS(binom_tail_bounds(10, 0.0, 2), input_error);
  CHECK_THROWS_AS(binom_tail_bounds(10, 1.0, 2), input_error);
}

TEST_CASE("chernoff variants on pinned examples") {
  CHECK(chernoff(100, 0.5, 0.2, 1) == doctest::Approx(std::exp(-1.0)));
  double exact_low = lower_tail_strict(100, 0.5, 40.0);  // Pr(X < 40)
  CHECK(exact_low == doctest::Approx(0.0176001).epsilon(1e-3));
  CHECK(chernoff(100, 0.5, 0.2, 1) >= exact_low);

  CHECK(chernoff(100, 0.5, 0.2, 2) == doctest::Approx(std::exp(-2.0 / 3.0)));
  CHECK(chernoff(100, 0.5, 0.2, 2) >= upper_tail_strict(100, 0.5, 60.0));

  CHECK(chernoff(100, 0.5, 1e-9, 1) == doctest::Approx(1.0));

  CHECK_THROWS_AS(chernoff(100, 0.5, 1.0, 2), input_error);
  CHECK_THROWS_AS(chernoff(100, 0.5, -0.1, 1), input_error);
  CHECK_THROWS_AS(chernoff(100, 0.5, 0.2, 4), input_error);
}

TEST_CASE("grid domination of all bound evaluators") {
  for (long long n = 2; n <= 30; ++n) {
    for (double p : {0.1, 0.3, 0.5, 0.9}) {
      for (long long k = 1; k <= n; ++k) {
        auto tb = binom_tail_bounds(n, p, k);
        double tail = binomial_tail_exact(n, p, k);
        double point = tail - binomial_tail_exact(n, p, k + 1);
        CHECK(tb.tail_upper >= tail - 1e-12);
        CHECK(tb.point_upper >= point - 1e-12);
        for (long long l = 1; l <= k; ++l) {
          auto cb = binom_coeff_bounds(n, k, l);
          CHECK(cb.upper_on_coeff >= choose(n, k) * (1 - 1e-12));
          CHECK(cb.upper_on_ratio >=
                choose(n - l, k) / choose(n, k) - 1e-12);
        }
      }
      for (double delta : {0.1, 0.5, 1.0}) {
        double np = static_cast<double>(n) * p;
        CHECK(chernoff(n, p, delta, 1) >=
              lower_tail_strict(n, p, (1 - delta) * np) - 1e-12);
        CHECK(chernoff(n, p, delta, 3) >=
              upper_tail_strict(n, p, (1 + delta) * np) - 1e-12);
        if (delta < 1.0)
          CHECK(chernoff(n, p, delta, 2) >=
                upper_tail_strict(n, p, (1 + delta) * np) - 1e-12);
      }
    }
  }
}

TEST_CASE("min degree sandwich at n=3 is exact-tight") {
  // only K_3 has delta >= 2, so Pr(delta < 2) = 1 - p^3
  for (double p : {0.2, 0.5, 0.8}) {
    double exact = 1.0 - p * p * p;
    ProbabilitySandwich s = min_degree_prob_sandwich(3, p, 2);
    CHECK(s.lower <= exact + 1e-12);
    CHECK(s.upper >= exact - 1e-12);
  }
}

TEST_CASE("sandwich brackets the exact value at tiny n") {
  for (int threshold : {1, 2}) {
    for (int n = 3; n <= 5; ++n) {
      auto profile = exact_gnp_profile(n, [threshold](const Graph& g) {
        return degree_profile(g).min < threshold;
      });
      for (double p : {0.2, 0.5, 0.8}) {
        double exact = exact_gnp_probability(p, n, profile);
        ProbabilitySandwich s = min_degree_prob_sandwich(n, p, threshold);
        CHECK(s.lower <= exact + 1e-12);
        CHECK(s.upper >= exact - 1e-12);
      }
    }
  }
}

TEST_CASE("sandwich brackets a near-one p") {
  auto profile = exact_gnp_profile(
      5, [](const Graph& g) { return degree_profile(g).min < 2; });
  double p = 0.9999;
  double exact = exact_gnp_probability(p, 5, profile);
  ProbabilitySandwich s = min_degree_prob_sandwich(5, p, 2);
  CHECK(exact <= 1e-10);
  CHECK(s.lower <= exact);
  CHECK(s.upper >= exact);
}

TEST_CASE("sandwich upper is nonincreasing in p") {
  for (int n : {10, 100, 1000}) {
    double prev = 2.0;
    for (double p = 0.05; p < 1.0; p += 0.05) {
      ProbabilitySandwich s = min_degree_prob_sandwich(n, p, 2);
      CHECK(s.upper <= prev + 1e-12);
      prev = s.upper;
    }
  }
}

TEST_CASE("sandwich stays finite in log space at large n") {
  ProbabilitySandwich s = min_degree_prob_sandwich(1000000, 2e-5, 2);
  CHECK(s.upper >= 0.0);
  CHECK(s.lower >= 0.0);
  CHECK(s.lower <= s.upper);
  CHECK(std::isfinite(s.log_upper));
}

TEST_CASE("wilson interval basics") {
  Interval i = wilson_interval(0, 100);
  CHECK(i.lo == 0.0);
  CHECK(i.hi > 0.0);
  Interval j = wilson_interval(100, 100);
  CHECK(j.hi == 1.0);
  CHECK(j.lo < 1.0);
  Interval k = wilson_interval(50, 100);
  CHECK(k.lo < 0.5);
  CHECK(k.hi > 0.5);
  CHECK_THROWS_AS(wilson_interval(5, 4), input_error);
}
