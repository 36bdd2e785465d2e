#ifndef HAMEX_EXPERIMENTS_HPP
#define HAMEX_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hamex/bounds.hpp"
#include "hamex/graph.hpp"
#include "hamex/matching.hpp"
#include "hamex/oracles.hpp"
#include "hamex/properties.hpp"
#include "hamex/regime.hpp"

namespace hamex {

// Batch experiment configuration. Reproducibility contract: identical
// config + master_seed produce byte-identical CSV bodies for any worker
// count; wall time and timestamps are isolated in `#` header comments.
struct ExperimentConfig {
  enum class Kind { ratio_ham, ratio_pm, hitting, props_audit, oracle_check };
  Kind kind = Kind::ratio_ham;
  std::vector<int> n_values;
  std::vector<double> p_values;   // absolute p (wins over offsets_c)
  std::vector<double> offsets_c;  // p = (ln n + ln ln n + c) / n
  long long samples = 1;
  std::uint64_t master_seed = 0;
  int workers = 1;
  SolveMode mode = SolveMode::auto_fallback;
  RegimeOverrides overrides;
  OracleBudget oracle_budget;
  CheckOptions props_opts;  // props_audit only
  std::string out_path;     // optional CSV destination ("-" = stdout)

  // p values for a given n (absolute list, or threshold offsets).
  std::vector<double> resolve_p(int n) const;
};

struct RatioRow {
  int n = 0;
  double p = 0.0;
  long long samples = 0;
  long long count_negative = 0;  // not Hamiltonian / no perfect matching
  long long count_lowdeg = 0;    // delta < 2 (Ham) or delta = 0 (PM)
  long long count_unknown = 0;
  double ratio_point = -1.0;  // negative when undefined (count_lowdeg = 0)
  double ratio_wilson_lo = -1.0;
  double ratio_wilson_hi = -1.0;
  double sandwich_lower = -1.0;
  double sandwich_upper = -1.0;
  double wall_time_s = 0.0;  // header-comment data, never a CSV body column
};

struct RatioResult {
  std::vector<RatioRow> rows;
  std::string csv;
};

// Theorem-style ratio estimate: per (n, p) cell, sample graphs, decide
// Hamiltonicity (or the perfect matching analogue) and the degree threshold
// per sample, and report counts, the point ratio, Wilson interval bounds on
// the ratio (unknowns bracketed, never folded in), and the Bonferroni
// sandwich on Pr(delta < threshold). A sample with delta below threshold
// that still receives a positive certificate is a fatal invariant breach.
RatioResult ratio_experiment(const ExperimentConfig& cfg);

struct HittingRow {
  int n = 0;
  long long sample = 0;
  long long tau_d1 = 0, tau_d2 = 0, tau_pm = 0, tau_ham = 0;
};

struct HittingSummary {
  int n = 0;
  long long samples = 0;
  long long eq_d2_ham = 0, eq_d1_pm = 0;
  Interval ci_d2_ham, ci_d1_pm;
};

struct HittingResult {
  std::vector<HittingRow> rows;
  std::vector<HittingSummary> summaries;
  std::string csv;       // per-sample taus
  std::string hist_csv;  // tau histograms
};

// Random graph process hitting times per sample: tau_D1, tau_D2, tau_PM,
// tau_HAM (exact deciders; HAM by subset DP, so n must fit the oracle
// budget). tau_D2 > tau_HAM or tau_D1 > tau_PM is a fatal monotone breach.
HittingResult hitting_experiment(const ExperimentConfig& cfg);

struct PropsAuditRow {
  int n = 0;
  double p = 0.0;
  std::string label;
  std::string mode;
  long long samples = 0, violations = 0, unknowns = 0;
  double freq = 0.0;
  Interval ci;
  double bound_lower = -1.0, bound_upper = -1.0;  // sandwich, when applicable
  double exact_prob = -1.0;  // tiny-n enumeration, when feasible
};

struct PropsAuditResult {
  std::vector<PropsAuditRow> rows;
  std::string csv;
};

// Violation frequencies per property vs the finite-n bound formulas where
// they exist (P0/Q0/R0 against the min-degree sandwich; exact tiny-n
// probabilities when n fits the enumeration budget).
PropsAuditResult props_audit(const ExperimentConfig& cfg);

struct OracleCheckResult {
  struct Item {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass() const;
  std::string report() const;  // one line per item
};

// Cross-oracle agreement suite plus the lemma-level bound verifications
// (Posa booster count, staple count, sandwich brackets, tail domination).
OracleCheckResult oracle_check(std::uint64_t seed);

// Corpus generators shared by oracle_check and the acceptance suite: known
// families plus filtered random graphs, every member certified by the exact
// checkers named in the filters.
std::vector<Graph> expander_corpus_ham(int k, std::uint64_t seed, int want);
std::vector<Graph> expander_corpus_pm(int k, std::uint64_t seed, int want);

// Named small graphs used across corpora and checks.
Graph petersen_graph();
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);  // vertex 0 is the centre
Graph complete_bipartite(int a, int b);

}  // namespace hamex

#endif
