#include "hamex/regime.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "hamex/errors.hpp"

namespace hamex {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::very_sparse: return "very_sparse";
    case Regime::sparse: return "sparse";
    case Regime::dense: return "dense";
    case Regime::very_dense: return "very_dense";
  }
  return "?";
}

double RegimeParams::subset_size_p46() const {
  return n / std::sqrt(std::log(static_cast<double>(n)));
}
double RegimeParams::small_pair_size_q() const { return 1e-13 * n; }
double RegimeParams::cross_size_r2() const { return n * p / 30.0; }
double RegimeParams::indep_cap_r3() const { return n * p / 40.0; }
double RegimeParams::low_degree_r1() const { return n * p / 10.0; }

RegimeParams regime_params(int n, double p, const RegimeOverrides& overrides) {
  if (n < 3) throw input_error("regime_params: need n >= 3");
  if (!(p >= 0.0 && p <= 1.0))
    throw input_error("regime_params: p outside [0,1]");

  RegimeParams rp;
  rp.n = n;
  rp.p = p;
  const double ln_n = std::log(static_cast<double>(n));
  rp.omega = n * p - ln_n - std::log(ln_n);
  rp.omega_min = overrides.omega_min.value_or(1.0);
  rp.paper_mode = overrides.paper_mode.value_or(false);

  const double sparse_limit = 100.0 * ln_n / n;
  if (rp.omega < rp.omega_min)
    rp.regime = Regime::very_sparse;
  else if (p > 0.01)
    rp.regime = Regime::very_dense;
  else if (p <= sparse_limit)
    rp.regime = Regime::sparse;
  else
    rp.regime = Regime::dense;

  rp.d0 = overrides.c_small.value_or(0.001) * ln_n;
  rp.t0 = overrides.c_dense.value_or(0.002) * n * p;

  const bool dense_family =
      rp.regime == Regime::dense || rp.regime == Regime::very_dense;
  rp.max_degree_bound = dense_family ? 7.0 * n * p : 800.0 * ln_n;
  rp.small_cap = dense_family ? 1.0 : std::pow(static_cast<double>(n), 0.3);

  if (rp.paper_mode) {
    double literal = dense_family ? rp.t0 : rp.d0;
    rp.skeleton_out_degree = std::max(2, static_cast<int>(std::lround(literal)));
    rp.skeleton_small_threshold = literal;
  } else {
    rp.skeleton_out_degree = std::max(3, static_cast<int>(std::ceil(0.3 * ln_n)));
    rp.skeleton_small_threshold = rp.skeleton_out_degree;
  }
  if (overrides.skeleton_out_degree) {
    rp.skeleton_out_degree = std::max(2, *overrides.skeleton_out_degree);
    if (!rp.paper_mode) rp.skeleton_small_threshold = rp.skeleton_out_degree;
  }
  return rp;
}

double threshold_offset_p(int n, double c) {
  if (n < 3) throw input_error("threshold_offset_p: need n >= 3");
  const double ln_n = std::log(static_cast<double>(n));
  double p = (ln_n + std::log(ln_n) + c) / n;
  return std::clamp(p, 0.0, 1.0);
}

std::string to_json(const RegimeParams& rp) {
  nlohmann::json j;
  j["n"] = rp.n;
  j["p"] = rp.p;
  j["omega"] = rp.omega;
  j["regime"] = to_string(rp.regime);
  j["d0"] = rp.d0;
  j["t0"] = rp.t0;
  j["paper_mode"] = rp.paper_mode;
  j["omega_min"] = rp.omega_min;
  j["skeleton_out_degree"] = rp.skeleton_out_degree;
  j["skeleton_small_threshold"] = rp.skeleton_small_threshold;
  j["max_degree_bound"] = rp.max_degree_bound;
  j["small_cap"] = rp.small_cap;
  return j.dump();
}

}  // namespace hamex
