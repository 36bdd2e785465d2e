#include "hamex/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hamex/errors.hpp"

namespace hamex {

namespace {

double clamp01(long double x) {
  if (x < 0.0L) return 0.0;
  if (x > 1.0L) return 1.0;
  return static_cast<double>(x);
}

}  // namespace

CoeffBounds binom_coeff_bounds(long long n, long long k, long long l) {
  if (!(1 <= l && l <= k && k <= n))
    throw input_error("binom_coeff_bounds: need 1 <= l <= k <= n");
  long double log_coeff =
      k * (1.0L + std::log(static_cast<long double>(n)) -
           std::log(static_cast<long double>(k)));
  long double log_ratio = -static_cast<long double>(l) * k / n;
  return {static_cast<double>(std::exp(log_coeff)),
          static_cast<double>(std::exp(log_ratio))};
}

TailBounds binom_tail_bounds(long long n, double p, long long k) {
  if (!(1 <= k && k <= n))
    throw input_error("binom_tail_bounds: need 1 <= k <= n");
  if (!(p > 0.0 && p < 1.0))
    throw input_error("binom_tail_bounds: p must be strictly inside (0,1)");
  long double np = static_cast<long double>(n) * p;
  long double log_tail =
      k * (1.0L + std::log(np) - std::log(static_cast<long double>(k)));
  long double log_point =
      k * (1.0L + std::log(np) - std::log(static_cast<long double>(k)) -
           std::log1p(static_cast<long double>(-p))) -
      np;
  return {static_cast<double>(std::exp(log_tail)),
          static_cast<double>(std::exp(log_point))};
}

double chernoff(long long n, double p, double delta, int variant) {
  if (n < 1 || !(p >= 0.0 && p <= 1.0))
    throw input_error("chernoff: bad n or p");
  long double np = static_cast<long double>(n) * p;
  switch (variant) {
    case 1:
      if (!(delta > 0.0)) throw input_error("chernoff variant 1: need delta > 0");
      return static_cast<double>(std::exp(-delta * delta * np / 2.0L));
    case 2:
      if (!(delta > 0.0 && delta < 1.0))
        throw input_error("chernoff variant 2: need 0 < delta < 1");
      return static_cast<double>(std::exp(-delta * delta * np / 3.0L));
    case 3:
      if (!(delta > 0.0)) throw input_error("chernoff variant 3: need delta > 0");
      return static_cast<double>(std::exp(-delta * np / 3.0L));
    default:
      throw input_error("chernoff: variant must be 1, 2 or 3");
  }
}

ProbabilitySandwich min_degree_prob_sandwich(long long n, double p,
                                             int threshold) {
  if (n < 3) throw input_error("min_degree_prob_sandwich: need n >= 3");
  if (!(p > 0.0 && p < 1.0))
    throw input_error("min_degree_prob_sandwich: need 0 < p < 1");
  if (threshold != 1 && threshold != 2)
    throw input_error("min_degree_prob_sandwich: threshold must be 1 or 2");

  const long double lq = std::log1p(static_cast<long double>(-p));  // ln(1-p)
  const long double lp = std::log(static_cast<long double>(p));
  long double log_pav;        // ln Pr(A_v)
  long double log_pair_term;  // ln Pr(A_u and A_v) upper bound

  if (threshold == 2) {
    // Pr(A_v) = (1-p)^{n-1} + (n-1) p (1-p)^{n-2}
    long double t0 = (n - 1) * lq;
    long double t1 = std::log(static_cast<long double>(n - 1)) + lp +
                     (n - 2) * lq;
    long double mx = std::max(t0, t1);
    log_pav = mx + std::log(std::exp(t0 - mx) + std::exp(t1 - mx));
    // (1-p)^{2n-6} [ (1-p)^2 + (2n-4)p(1-p) + C(2n-4,2)p^2 ]
    long double m = static_cast<long double>(2 * n - 4);
    long double s0 = 2 * lq;
    long double s1 = std::log(m) + lp + lq;
    long double s2 = std::log(m * (m - 1) / 2) + 2 * lp;
    long double smx = std::max({s0, s1, s2});
    long double bracket = smx + std::log(std::exp(s0 - smx) +
                                         std::exp(s1 - smx) +
                                         std::exp(s2 - smx));
    log_pair_term = (2 * n - 6) * lq + bracket;
  } else {
    log_pav = (n - 1) * lq;
    log_pair_term = (2 * n - 3) * lq;
  }

  const long double log_n = std::log(static_cast<long double>(n));
  const long double log_pairs =
      std::log(static_cast<long double>(n) * (n - 1) / 2);

  long double log_union = log_n + log_pav;            // n * Pr(A_v)
  long double correction = log_pairs + log_pair_term; // C(n,2) * pair bound

  ProbabilitySandwich s;
  s.log_upper = static_cast<double>(log_union);
  s.log_pair_term = static_cast<double>(log_pair_term);
  s.upper = clamp01(std::exp(log_union));
  s.lower = clamp01(std::exp(log_union) - std::exp(correction));
  return s;
}

Interval wilson_interval(long long successes, long long trials, double z) {
  if (trials <= 0) return {0.0, 1.0};
  if (successes < 0 || successes > trials)
    throw input_error("wilson_interval: successes outside [0, trials]");
  double nt = static_cast<double>(trials);
  double phat = static_cast<double>(successes) / nt;
  double z2 = z * z;
  double denom = 1.0 + z2 / nt;
  double center = (phat + z2 / (2.0 * nt)) / denom;
  double half =
      z * std::sqrt(phat * (1.0 - phat) / nt + z2 / (4.0 * nt * nt)) / denom;
  Interval out{std::max(0.0, center - half), std::min(1.0, center + half)};
  if (successes == 0) out.lo = 0.0;
  if (successes == trials) out.hi = 1.0;
  return out;
}

}  // namespace hamex
