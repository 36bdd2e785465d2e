#ifndef HAMEX_REGIME_HPP
#define HAMEX_REGIME_HPP

#include <optional>
#include <string>

namespace hamex {

enum class Regime { very_sparse, sparse, dense, very_dense };
std::string to_string(Regime r);

struct RegimeOverrides {
  std::optional<double> omega_min;          // default 1.0
  std::optional<bool> paper_mode;           // default false
  std::optional<int> skeleton_out_degree;   // default max(3, ceil(0.3 ln n))
  std::optional<double> c_small;            // d0 = c_small * ln n (default 0.001)
  std::optional<double> c_dense;            // t0 = c_dense * n p  (default 0.002)
};

// Density regime plus every constant the checkers and builders consume.
//
// Paper mode keeps the literal constants (d0 = 0.001 ln n is below 1 for any
// feasible n, so SMALL degenerates to isolated vertices); practical mode
// (default) sizes the skeleton at max(3, ceil(0.3 ln n)) out-edges and sets
// the SMALL threshold to that out-degree, preserving the construction's
// structure at desk scale.
struct RegimeParams {
  int n = 0;
  double p = 0.0;
  double omega = 0.0;  // n p - ln n - ln ln n
  Regime regime = Regime::very_sparse;

  double d0 = 0.0;  // sparse SMALL threshold, c_small * ln n
  double t0 = 0.0;  // dense SMALL threshold, c_dense * n p

  bool paper_mode = false;
  double omega_min = 1.0;
  int skeleton_out_degree = 3;
  double skeleton_small_threshold = 3.0;

  double max_degree_bound = 0.0;  // 800 ln n (sparse) / 7 n p (dense)
  double small_cap = 0.0;         // n^{0.3} (sparse) / 1 (dense)

  // Property-suite size parameters derived from (n, p); floor-rounded where
  // used, with empty ranges reported as vacuous holds.
  double subset_size_p46() const;   // n / sqrt(ln n)       (P4, P5, P6)
  double small_pair_size_q() const; // 1e-13 * n            (Q3, Q4)
  double cross_size_r2() const;     // n p / 30             (R2)
  double indep_cap_r3() const;      // n p / 40             (R3)
  double low_degree_r1() const;     // n p / 10             (R1)
};

// Computes omega, assigns the regime, and fills in the constants.
// Boundary precedence at desk-scale n (where the paper's asymptotically
// disjoint ranges can overlap): very_sparse, then very_dense (p > 0.01),
// then sparse (p <= 100 ln n / n), then dense.
RegimeParams regime_params(int n, double p,
                           const RegimeOverrides& overrides = {});

// p placed relative to the Hamiltonicity threshold:
// p = (ln n + ln ln n + c) / n, clamped to [0,1].
double threshold_offset_p(int n, double c);

std::string to_json(const RegimeParams& params);

}  // namespace hamex

#endif
