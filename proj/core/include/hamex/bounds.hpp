#ifndef HAMEX_BOUNDS_HPP
#define HAMEX_BOUNDS_HPP

#include <optional>

namespace hamex {

// All bounds are evaluated in log space internally (natural base) so they
// stay meaningful where the straight probability underflows; each function
// returns the clamped probability-scale value, and the sandwich carries the
// log-scale value of its unclamped upper term as well.

struct CoeffBounds {
  double upper_on_coeff;  // (en/k)^k       >= C(n,k)
  double upper_on_ratio;  // e^{-l*k/n}     >= C(n-l,k)/C(n,k)
};

// Requires 1 <= l <= k <= n.
CoeffBounds binom_coeff_bounds(long long n, long long k, long long l);

struct TailBounds {
  double tail_upper;   // (enp/k)^k             >= Pr(X >= k)
  double point_upper;  // (enp/(k(1-p)))^k e^{-np} >= Pr(X = k)
};

// X ~ Bin(n,p). Requires 1 <= k <= n and 0 < p < 1 (formula pole at 0/1).
TailBounds binom_tail_bounds(long long n, double p, long long k);

// Chernoff bounds for X ~ Bin(n,p):
//   variant 1: Pr(X < (1-d)np) <= exp(-d^2 np / 2),  d > 0
//   variant 2: Pr(X > (1+d)np) <= exp(-d^2 np / 3),  0 < d < 1
//   variant 3: Pr(X > (1+d)np) <= exp(-d np / 3),    d > 0
double chernoff(long long n, double p, double delta, int variant);

// Bonferroni/union-bound sandwich on Pr(delta(G) < threshold) for
// G ~ G(n,p). lower is clamped at 0, upper at 1; a vacuous lower bound is
// still a valid sandwich.
struct ProbabilitySandwich {
  double lower = 0.0;
  double upper = 1.0;
  std::optional<double> exact;  // filled by callers that know it
  double log_upper = 0.0;       // ln of the unclamped union-bound term
  double log_pair_term = 0.0;   // ln of the subtracted Bonferroni term
};

// threshold 2: Pr(A_v) = (1-p)^{n-1} + (n-1)p(1-p)^{n-2},
//   pair term (1-p)^{2n-6} [ (1-p)^2 + (2n-4)p(1-p) + C(2n-4,2)p^2 ].
// threshold 1: Pr(A_v) = (1-p)^{n-1}, pair term (1-p)^{2n-3}.
// Requires n >= 3 and 0 < p < 1.
ProbabilitySandwich min_degree_prob_sandwich(long long n, double p,
                                             int threshold);

// Wilson score interval for a binomial proportion (robust at small counts).
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};
Interval wilson_interval(long long successes, long long trials,
                         double z = 1.959963984540054);

}  // namespace hamex

#endif
