#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qmix/tensor.hpp"

namespace qmix {

/// Outcome of the purity criterion: the whole-state purity against every
/// single-subsystem marginal purity. A subsystem whose marginal is strictly
/// less pure than the whole (beyond the decision margin) witnesses
/// entanglement; ties within the margin are reported as boundary cases but
/// never count as detections.
struct PurityReport {
  double whole_purity = 0.0;
  std::vector<double> marginal_purities; // index i-1 holds subsystem i
  std::vector<int> witnesses;            // marginal + crit < whole
  std::vector<int> boundary;             // |whole - marginal| <= crit
  bool detected = false;
};

inline PurityReport purity_criterion(const DensityMatrix& rho) {
  PurityReport report;
  report.whole_purity = purity(rho);
  const int n = rho.shape().subsystems();
  for (int i = 1; i <= n; ++i) {
    const double p = purity(partial_trace(rho, SubsystemSet::single(i)));
    report.marginal_purities.push_back(p);
    if (p + tol::crit < report.whole_purity) {
      report.witnesses.push_back(i);
    } else if (std::abs(report.whole_purity - p) <= tol::crit) {
      report.boundary.push_back(i);
    }
  }
  report.detected = !report.witnesses.empty();
  return report;
}

struct PptResult {
  bool holds = true;
  double min_eigenvalue = 0.0;
};

inline PptResult ppt_test(const DensityMatrix& rho, const SubsystemSet& part) {
  const Eigen::VectorXd eigs = hermitian_spectrum(partial_transpose(rho, part));
  PptResult r;
  r.min_eigenvalue = eigs(eigs.size() - 1);
  r.holds = r.min_eigenvalue >= -tol::psd;
  return r;
}

/// Wootters concurrence of a two-qubit state: C = max(0, l1 - l2 - l3 - l4)
/// with l_i the descending square roots of the eigenvalues of
/// rho (Y(x)Y) rho* (Y(x)Y), conjugation in the computational basis.
inline double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.shape().subsystems() != 2 || rho.shape().local_dim() != 2) {
    throw contract_error("wootters_concurrence: defined for exactly two qubits");
  }
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix& m = rho.entries();
  const Matrix r = m * yy * m.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix> es(r, /*computeEigenvectors=*/false);
  std::vector<double> lambdas;
  for (Eigen::Index i = 0; i < 4; ++i) {
    // eigenvalues of the spin-flip product sit in [0, 1]; clamp solver noise
    // around zero before the square root can amplify it
    const double ev = es.eigenvalues()(i).real();
    lambdas.push_back(ev < 1e-13 ? 0.0 : std::sqrt(ev));
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

/// Concurrence of the two-qubit reduction onto subsystems {i, j}.
inline double pairwise_concurrence(const DensityMatrix& rho, int i, int j) {
  if (rho.shape().local_dim() != 2) {
    throw contract_error("pairwise_concurrence: defined for qubits only");
  }
  if (i == j) throw shape_error("pairwise_concurrence: need two distinct subsystems");
  return wootters_concurrence(partial_trace(rho, SubsystemSet::of({i, j})));
}

enum class SeparabilityStatus { SeparableCertified, EntangledCertified, Inconclusive };

inline const char* to_string(SeparabilityStatus s) {
  switch (s) {
    case SeparabilityStatus::SeparableCertified: return "separable-certified";
    case SeparabilityStatus::EntangledCertified: return "entangled-certified";
    case SeparabilityStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct SeparabilityVerdict {
  SeparabilityStatus value = SeparabilityStatus::Inconclusive;
  std::string certificate;
};

namespace detail {

/// Proper subsets of {1..n} containing subsystem 1: one canonical
/// representative per unordered bipartition, 2^(n-1) - 1 of them.
inline std::vector<SubsystemSet> canonical_bipartitions(int n) {
  std::vector<SubsystemSet> cuts;
  const unsigned long long rest = 1ull << (n - 1);
  for (unsigned long long mask = 0; mask + 1 < rest; ++mask) {
    std::vector<int> labels{1};
    for (int k = 2; k <= n; ++k) {
      if (mask & (1ull << (k - 2))) labels.push_back(k);
    }
    cuts.push_back(SubsystemSet::of(std::move(labels)));
  }
  return cuts;
}

inline double offdiagonal_frobenius(const Matrix& m) {
  double sum = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r != c) sum += std::norm(m(r, c));
    }
  }
  return std::sqrt(sum);
}

} // namespace detail

/// Conservative separability certifier. Detection rules fire in order; a
/// state certified neither way is Inconclusive (full separability testing is
/// out of reach, and Inconclusive is a first-class verdict here).
inline SeparabilityVerdict separability_certifier(const DensityMatrix& rho) {
  const int n = rho.shape().subsystems();
  std::ostringstream why;

  const PurityReport pr = purity_criterion(rho);
  if (pr.detected) {
    why << "purity criterion: subsystem " << pr.witnesses.front() << " has marginal purity "
        << pr.marginal_purities[static_cast<std::size_t>(pr.witnesses.front() - 1)]
        << " < whole purity " << pr.whole_purity;
    return {SeparabilityStatus::EntangledCertified, why.str()};
  }

  for (const SubsystemSet& cut : detail::canonical_bipartitions(n)) {
    const PptResult ppt = ppt_test(rho, cut);
    if (!ppt.holds) {
      why << "partial transpose on " << cut.to_string() << " has eigenvalue "
          << ppt.min_eigenvalue;
      return {SeparabilityStatus::EntangledCertified, why.str()};
    }
  }

  if (n == 2 && rho.shape().local_dim() == 2) {
    const double c = wootters_concurrence(rho);
    if (c > tol::crit) {
      why << "concurrence " << c << " > 0";
      return {SeparabilityStatus::EntangledCertified, why.str()};
    }
  }

  const double offdiag = detail::offdiagonal_frobenius(rho.entries());
  if (offdiag < tol::herm) {
    why << "diagonal in the computational product basis (off-diagonal mass " << offdiag << ")";
    return {SeparabilityStatus::SeparableCertified, why.str()};
  }

  if (n == 1) {
    return {SeparabilityStatus::SeparableCertified, "single subsystem"};
  }

  return {SeparabilityStatus::Inconclusive, "no certifying rule fired"};
}

/// S(rho) - S(rho_B) in bits, for a proper non-empty subset B.
inline double partial_information(const DensityMatrix& rho, const SubsystemSet& b) {
  b.validate_for(rho.shape());
  if (b.empty() || static_cast<int>(b.size()) >= rho.shape().subsystems()) {
    throw contract_error("partial_information: need a proper non-empty subsystem subset");
  }
  return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho, b));
}

/// Type I: the purity criterion fires (the whole is purer than a part).
/// Type II: entangled by some other certificate while the purity criterion
/// stays silent. Otherwise no detector makes a claim.
enum class EntanglementType { TypeI, TypeII, NotDetectedEntangled };

inline const char* to_string(EntanglementType t) {
  switch (t) {
    case EntanglementType::TypeI: return "type-I";
    case EntanglementType::TypeII: return "type-II";
    case EntanglementType::NotDetectedEntangled: return "not-detected";
  }
  return "?";
}

inline EntanglementType classify_type(const DensityMatrix& rho) {
  if (purity_criterion(rho).detected) return EntanglementType::TypeI;
  if (separability_certifier(rho).value == SeparabilityStatus::EntangledCertified) {
    return EntanglementType::TypeII;
  }
  return EntanglementType::NotDetectedEntangled;
}

} // namespace qmix
