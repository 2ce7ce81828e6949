#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "qmix/criteria.hpp"
#include "qmix/states.hpp"

namespace qmix {

/// One grid point of a parameter scan. Optional columns render as empty cells.
struct ScanRow {
  double parameter = 0.0;
  double whole_purity = 0.0;
  double marginal_purity = 0.0;
  bool detected = false;
  std::optional<bool> ppt_holds;
  std::optional<double> concurrence;
};

/// Bisection on a sign change of f over [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol_x = 1e-12) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw contract_error("bisect: no sign change on the given interval");
  }
  while (hi - lo > tol_x) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// The two roots of stormer_purity(alpha) = 1/3, found numerically.
/// Analytically they sit at alpha = -1 and alpha = 6.
inline std::pair<double, double> stormer_detection_boundaries() {
  auto f = [](double a) { return stormer_purity(a) - 1.0 / 3.0; };
  const double left = bisect(f, -5.0, 2.5);
  const double right = bisect(f, 2.5, 10.0);
  return {left, right};
}

/// Parameter value in [2, 5] where the minimum partial-transpose eigenvalue
/// of the stormer family crosses zero (the free-entanglement onset).
inline double stormer_ppt_crossing(double tol_x = 1e-9) {
  auto f = [](double a) {
    const Eigen::VectorXd eigs =
        hermitian_spectrum(partial_transpose(stormer_state(a), SubsystemSet::single(2)));
    return eigs(eigs.size() - 1);
  };
  return bisect(f, 2.0, 5.0, tol_x);
}

/// Grid scan of the stormer family. Inside the physical range [0, 5] the
/// state is constructed and all detectors run; outside, the closed-form
/// purity polynomial is evaluated and the PPT column stays empty.
inline std::vector<ScanRow> stormer_scan(double alpha_min, double alpha_max, double step) {
  if (!(step > 0.0)) throw contract_error("stormer_scan: step must be positive");
  if (alpha_max < alpha_min) throw contract_error("stormer_scan: empty grid");

  std::vector<ScanRow> rows;
  const long long count = static_cast<long long>(std::floor((alpha_max - alpha_min) / step + 1e-9));
  for (long long i = 0; i <= count; ++i) {
    const double alpha = alpha_min + static_cast<double>(i) * step;
    ScanRow row;
    row.parameter = alpha;
    if (alpha >= 0.0 && alpha <= 5.0) {
      const DensityMatrix sigma = stormer_state(alpha);
      const PurityReport pr = purity_criterion(sigma);
      row.whole_purity = pr.whole_purity;
      row.marginal_purity = pr.marginal_purities[0];
      row.detected = pr.detected;
      row.ppt_holds = ppt_test(sigma, SubsystemSet::single(2)).holds;
    } else {
      row.whole_purity = stormer_purity(alpha);
      row.marginal_purity = 1.0 / 3.0;
      row.detected = row.whole_purity > row.marginal_purity + tol::crit;
    }
    rows.push_back(row);
  }
  return rows;
}

} // namespace qmix
