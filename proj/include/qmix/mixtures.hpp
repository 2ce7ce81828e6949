#pragma once

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "qmix/criteria.hpp"
#include "qmix/tensor.hpp"

namespace qmix {

/// Convex weights on M >= 2 pure states sharing one shape. Zero weights are
/// rejected; duplicate states are legal (their Gram overlaps simply saturate)
/// and flagged so reports can warn about them.
class MixtureSpec {
public:
  static MixtureSpec make(std::vector<double> weights, std::vector<PureState> states) {
    if (weights.size() < 2) {
      throw contract_error("MixtureSpec: need at least two components");
    }
    if (weights.size() != states.size()) {
      throw contract_error("MixtureSpec: " + std::to_string(weights.size()) + " weights vs " +
                           std::to_string(states.size()) + " states");
    }
    double sum = 0.0;
    for (double w : weights) {
      if (!(w > 0.0)) {
        throw contract_error("MixtureSpec: weights must be strictly positive");
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > tol::norm) {
      throw contract_error("MixtureSpec: weights sum to " + std::to_string(sum) + ", not 1");
    }
    for (std::size_t k = 1; k < states.size(); ++k) {
      if (states[k].shape() != states[0].shape()) {
        throw shape_error("MixtureSpec: component states live on different shapes");
      }
    }
    return MixtureSpec(std::move(weights), std::move(states));
  }

  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<PureState>& states() const { return states_; }
  const CompositeShape& shape() const { return states_[0].shape(); }

  /// True when two components coincide up to a global phase (unit overlap).
  bool has_duplicates() const {
    for (std::size_t k = 0; k < states_.size(); ++k) {
      for (std::size_t l = k + 1; l < states_.size(); ++l) {
        if (std::abs(std::abs(overlap(states_[k], states_[l])) - 1.0) < 1e-12) return true;
      }
    }
    return false;
  }

private:
  MixtureSpec(std::vector<double> w, std::vector<PureState> s)
      : weights_(std::move(w)), states_(std::move(s)) {}
  std::vector<double> weights_;
  std::vector<PureState> states_;
};

/// rho = sum_k lambda_k |phi_k><phi_k|
inline DensityMatrix build_mixture(const MixtureSpec& spec) {
  const long long dim = spec.shape().dim();
  Matrix m = Matrix::Zero(dim, dim);
  for (int k = 0; k < spec.size(); ++k) {
    const Vector& a = spec.states()[static_cast<std::size_t>(k)].amplitudes();
    m += spec.weights()[static_cast<std::size_t>(k)] * (a * a.adjoint());
  }
  return DensityMatrix::make(spec.shape(), std::move(m));
}

/// Squared-overlap Gram matrix |<phi_k|phi_l>|^2: symmetric, unit diagonal.
inline Eigen::MatrixXd gram_overlaps(const MixtureSpec& spec) {
  const int m = spec.size();
  Eigen::MatrixXd g(m, m);
  for (int k = 0; k < m; ++k) {
    g(k, k) = 1.0;
    for (int l = k + 1; l < m; ++l) {
      const double o = std::norm(overlap(spec.states()[static_cast<std::size_t>(k)],
                                         spec.states()[static_cast<std::size_t>(l)]));
      g(k, l) = o;
      g(l, k) = o;
    }
  }
  return g;
}

/// Purity of the mixture straight from the Gram matrix,
/// sum_kl lambda_k lambda_l |<phi_k|phi_l>|^2, without building the state.
inline double mixture_purity(const MixtureSpec& spec) {
  const Eigen::MatrixXd g = gram_overlaps(spec);
  double p = 0.0;
  for (int k = 0; k < spec.size(); ++k) {
    for (int l = 0; l < spec.size(); ++l) {
      p += spec.weights()[static_cast<std::size_t>(k)] *
           spec.weights()[static_cast<std::size_t>(l)] * g(k, l);
    }
  }
  return p;
}

/// sum_k lambda_k^2: the purity floor attained by pairwise-orthogonal
/// components. Minimized at uniform weights, where it equals 1/M.
inline double purity_orthogonal_floor(const std::vector<double>& weights) {
  if (weights.empty()) throw contract_error("purity_orthogonal_floor: empty weight vector");
  double sum = 0.0;
  double p = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) {
      throw contract_error("purity_orthogonal_floor: weights must be strictly positive");
    }
    sum += w;
    p += w * w;
  }
  if (std::abs(sum - 1.0) > tol::norm) {
    throw contract_error("purity_orthogonal_floor: weights sum to " + std::to_string(sum));
  }
  return p;
}

/// True iff every one-qudit marginal of |phi><phi| equals I/d entrywise.
inline bool has_maximally_mixed_marginals(const PureState& phi) {
  const DensityMatrix rho = phi.projector();
  const int n = phi.shape().subsystems();
  const int d = phi.shape().local_dim();
  const Matrix target = Matrix::Identity(d, d) / static_cast<double>(d);
  for (int i = 1; i <= n; ++i) {
    const DensityMatrix marginal = partial_trace(rho, SubsystemSet::single(i));
    if ((marginal.entries() - target).cwiseAbs().maxCoeff() > tol::herm) return false;
  }
  return true;
}

enum class Membership { Yes, No, Unknown };

inline const char* to_string(Membership m) {
  switch (m) {
    case Membership::Yes: return "yes";
    case Membership::No: return "no";
    case Membership::Unknown: return "unknown";
  }
  return "?";
}

/// Does tracing out any single subsystem of |phi><phi| leave a separable
/// state? Requires maximally mixed marginals as well; meaningful only for
/// N >= 3. The certifier is incomplete, so Unknown is a possible answer and
/// never silently upgrades to Yes.
inline Membership one_drop_separability(const PureState& phi) {
  const int n = phi.shape().subsystems();
  if (n < 3) {
    throw contract_error("one_drop_separability: meaningful only for three or more subsystems");
  }
  if (!has_maximally_mixed_marginals(phi)) return Membership::No;

  const DensityMatrix rho = phi.projector();
  bool all_separable = true;
  for (int i = 1; i <= n; ++i) {
    const SubsystemSet keep = SubsystemSet::single(i).complement(phi.shape());
    const SeparabilityVerdict verdict = separability_certifier(partial_trace(rho, keep));
    if (verdict.value == SeparabilityStatus::EntangledCertified) return Membership::No;
    if (verdict.value != SeparabilityStatus::SeparableCertified) all_separable = false;
  }
  return all_separable ? Membership::Yes : Membership::Unknown;
}

/// Both class facts about a component state, for reports.
struct ClassMembership {
  bool max_mixed_marginals = false;
  Membership one_drop_separable = Membership::Unknown; // meaningful for N >= 3
};

inline ClassMembership class_membership(const PureState& phi) {
  ClassMembership cm;
  cm.max_mixed_marginals = has_maximally_mixed_marginals(phi);
  if (phi.shape().subsystems() >= 3) {
    cm.one_drop_separable = one_drop_separability(phi);
  } else {
    cm.one_drop_separable = Membership::Unknown;
  }
  return cm;
}

namespace detail {

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return result;
}

} // namespace detail

/// Closed-form one-qubit reduction of the (n, m) Dicke state:
/// diag(C(n-1, m), C(n-1, m-1)) / (C(n-1, m) + C(n-1, m-1)).
inline DensityMatrix dicke_marginal(int n, int m) {
  if (n < 2 || m < 1 || m > n - 1) {
    throw contract_error("dicke_marginal: invalid excitation count");
  }
  const double c0 = detail::binomial(n - 1, m);
  const double c1 = detail::binomial(n - 1, m - 1);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = c0 / (c0 + c1);
  d(1, 1) = c1 / (c0 + c1);
  return DensityMatrix::make(CompositeShape::make(1, 2), std::move(d));
}

} // namespace qmix
