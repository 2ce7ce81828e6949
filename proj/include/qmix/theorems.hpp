#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmix/mixtures.hpp"

namespace qmix {

/// Executable verdict for one of the library's numbered theorems. The pairing
/// contract: whenever the hypotheses hold (and are decidable), the conclusion
/// must be observed; a violation is a bug, not a data point.
struct TheoremVerdict {
  std::string theorem;
  bool hypotheses_decidable = true; // false when a membership check returns Unknown
  bool hypotheses_hold = false;
  bool conclusion_observed = false;
  std::vector<std::pair<std::string, double>> evidence;
  std::string notes;

  bool affirmed() const { return hypotheses_decidable && hypotheses_hold && conclusion_observed; }
};

struct BipartitionEntry {
  std::vector<int> subset; // canonical side containing subsystem 1
  double subset_purity = 0.0;
  bool entangled = false; // subset purity + crit < whole purity
};

struct BipartitionReport {
  double whole_purity = 0.0;
  std::vector<BipartitionEntry> partitions;
  bool all_entangled = false;
};

/// Purity comparison across every unordered bipartition {S, S^c}, using the
/// representative S that contains subsystem 1.
inline BipartitionReport bipartition_scan(const DensityMatrix& rho) {
  const int n = rho.shape().subsystems();
  if (n < 2) throw contract_error("bipartition_scan: need at least two subsystems");

  BipartitionReport report;
  report.whole_purity = purity(rho);
  report.all_entangled = true;
  for (const SubsystemSet& cut : detail::canonical_bipartitions(n)) {
    BipartitionEntry e;
    e.subset = cut.labels();
    e.subset_purity = purity(partial_trace(rho, cut));
    e.entangled = e.subset_purity + tol::crit < report.whole_purity;
    report.all_entangled = report.all_entangled && e.entangled;
    report.partitions.push_back(std::move(e));
  }
  return report;
}

/// Purity excess of a mixture over its orthogonal floor,
/// mixture_purity - sum_k lambda_k^2; zero iff the Gram matrix is identity.
inline double purity_floor_gap(const MixtureSpec& spec) {
  return mixture_purity(spec) - purity_orthogonal_floor(spec.weights());
}

namespace detail {

inline void require_max_mixed_components(const MixtureSpec& spec, const char* who) {
  for (const PureState& phi : spec.states()) {
    if (!has_maximally_mixed_marginals(phi)) {
      throw contract_error(std::string(who) +
                           ": hypothesis error, a component lacks maximally mixed marginals");
    }
  }
}

inline bool weights_uniform(const std::vector<double>& w) {
  const double u = 1.0 / static_cast<double>(w.size());
  for (double x : w) {
    if (std::abs(x - u) > tol::norm) return false;
  }
  return true;
}

inline bool pairwise_orthogonal(const MixtureSpec& spec) {
  const Eigen::MatrixXd g = gram_overlaps(spec);
  for (int k = 0; k < g.rows(); ++k) {
    for (int l = k + 1; l < g.cols(); ++l) {
      if (g(k, l) > tol::herm) return false;
    }
  }
  return true;
}

} // namespace detail

/// Mixing M < d components with maximally mixed marginals always lands above
/// the 1/d detection threshold, whatever the weights or overlaps.
inline TheoremVerdict check_theorem1(const MixtureSpec& spec) {
  detail::require_max_mixed_components(spec, "check_theorem1");
  const int d = spec.shape().local_dim();
  const int m = spec.size();

  TheoremVerdict v;
  v.theorem = "1";
  v.hypotheses_hold = d > m;
  const PurityReport pr = purity_criterion(build_mixture(spec));
  v.conclusion_observed = pr.detected;
  v.evidence = {{"d", static_cast<double>(d)},
                {"M", static_cast<double>(m)},
                {"whole_purity", pr.whole_purity},
                {"orthogonal_floor", purity_orthogonal_floor(spec.weights())},
                {"detection_threshold", 1.0 / static_cast<double>(d)}};
  if (!v.hypotheses_hold) v.notes = "out of scope: requires M < d";
  return v;
}

/// With M = d components the only escape from detection is the single
/// excluded point: uniform weights on pairwise-orthogonal components, where
/// the purity sits exactly at 1/d.
inline TheoremVerdict check_theorem2(const MixtureSpec& spec) {
  detail::require_max_mixed_components(spec, "check_theorem2");
  const int d = spec.shape().local_dim();
  const int m = spec.size();
  if (m != d) {
    throw contract_error("check_theorem2: hypothesis error, needs exactly d components, got " +
                         std::to_string(m) + " with d = " + std::to_string(d));
  }

  const bool uniform = detail::weights_uniform(spec.weights());
  const bool orthogonal = detail::pairwise_orthogonal(spec);

  TheoremVerdict v;
  v.theorem = "2";
  v.hypotheses_hold = !(uniform && orthogonal);
  const PurityReport pr = purity_criterion(build_mixture(spec));
  v.conclusion_observed = pr.detected;
  v.evidence = {{"d", static_cast<double>(d)},
                {"whole_purity", pr.whole_purity},
                {"uniform_weights", uniform ? 1.0 : 0.0},
                {"pairwise_orthogonal", orthogonal ? 1.0 : 0.0},
                {"detection_threshold", 1.0 / static_cast<double>(d)}};
  if (!v.hypotheses_hold) {
    v.notes = "excluded point: uniform weights on orthogonal components, purity = 1/d";
  }
  return v;
}

/// Genuine-entanglement certification: if every component additionally has
/// separable one-drop reductions and the purity criterion fires with every
/// subsystem as a witness, then every bipartition stays entangled. When a
/// component's one-drop separability is Unknown the hypotheses are
/// undecidable and no genuineness claim is made either way.
inline TheoremVerdict check_theorem3(const MixtureSpec& spec) {
  const int n = spec.shape().subsystems();
  if (n < 3) {
    throw contract_error("check_theorem3: needs at least three subsystems");
  }

  TheoremVerdict v;
  v.theorem = "3";

  bool any_no = false;
  bool any_unknown = false;
  for (const PureState& phi : spec.states()) {
    switch (one_drop_separability(phi)) {
      case Membership::No: any_no = true; break;
      case Membership::Unknown: any_unknown = true; break;
      case Membership::Yes: break;
    }
  }

  const DensityMatrix rho = build_mixture(spec);
  const PurityReport pr = purity_criterion(rho);
  const bool all_witness = static_cast<int>(pr.witnesses.size()) == n;
  const BipartitionReport scan = bipartition_scan(rho);

  if (any_no) {
    v.hypotheses_decidable = true;
    v.hypotheses_hold = false;
    v.notes = "a component fails one-drop separability; no genuineness claim";
  } else if (any_unknown) {
    v.hypotheses_decidable = false;
    v.hypotheses_hold = false;
    v.notes = "one-drop separability unknown for a component; no genuineness claim either way";
  } else {
    v.hypotheses_decidable = true;
    v.hypotheses_hold = all_witness;
    if (!all_witness) v.notes = "purity criterion does not fire on every subsystem";
  }
  v.conclusion_observed = scan.all_entangled;
  v.evidence = {{"whole_purity", pr.whole_purity},
                {"witness_count", static_cast<double>(pr.witnesses.size())},
                {"subsystems", static_cast<double>(n)},
                {"bipartitions_entangled",
                 static_cast<double>(std::count_if(scan.partitions.begin(), scan.partitions.end(),
                                                   [](const BipartitionEntry& e) { return e.entangled; }))},
                {"bipartitions_total", static_cast<double>(scan.partitions.size())}};
  return v;
}

} // namespace qmix
