#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmix/criteria.hpp"
#include "qmix/theorems.hpp"

namespace qmix {

/// Everything the detectors have to say about one state.
struct DetectionReport {
  explicit DetectionReport(CompositeShape s) : shape(s) {}

  CompositeShape shape;
  PurityReport purity;
  std::vector<std::pair<std::vector<int>, PptResult>> ppt; // per canonical bipartition
  std::optional<double> concurrence;                       // two qubits only
  SeparabilityVerdict separability;
  EntanglementType classification = EntanglementType::NotDetectedEntangled;
  std::optional<BipartitionReport> genuineness_scan; // three or more subsystems
  bool genuine_indicated = false;
  std::string note;
};

inline DetectionReport detect(const DensityMatrix& rho) {
  DetectionReport report(rho.shape());
  report.purity = purity_criterion(rho);

  const int n = rho.shape().subsystems();
  for (const SubsystemSet& cut : detail::canonical_bipartitions(n)) {
    report.ppt.emplace_back(cut.labels(), ppt_test(rho, cut));
  }

  if (n == 2 && rho.shape().local_dim() == 2) {
    report.concurrence = wootters_concurrence(rho);
  }

  report.separability = separability_certifier(rho);
  report.classification = classify_type(rho);

  if (n >= 3) {
    report.genuineness_scan = bipartition_scan(rho);
    report.genuine_indicated =
        report.purity.detected && report.genuineness_scan->all_entangled;
  }

  if (report.classification == EntanglementType::NotDetectedEntangled) {
    report.note =
        "no detector fired; this is not a separability certificate (bound-entangled "
        "states, e.g. the stormer family on 3 < alpha <= 4, pass both the purity "
        "criterion and every PPT test)";
  } else if (n >= 3 && !report.genuine_indicated) {
    report.note = "entanglement detected but genuineness not certified";
  }
  return report;
}

} // namespace qmix
