#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qmix/mixtures.hpp"
#include "qmix/states.hpp"
#include "qmix/tensor.hpp"

namespace qmix {

/// Deterministic random source for fuzz suites and generators. Every trial
/// derives its own Rng from a recorded seed so failures replay exactly.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  int uniform_int(int lo, int hi) { // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

/// Normalized complex Gaussian vector (Haar-uniform on the sphere).
inline Vector random_ket(Rng& rng, long long dim) {
  Vector v(dim);
  for (long long i = 0; i < dim; ++i) v(i) = Complex(rng.normal(), rng.normal());
  v /= v.norm();
  return v;
}

/// Haar-distributed unitary via QR of a complex Ginibre matrix with the
/// usual phase fix on the diagonal of R.
inline Matrix random_unitary(Rng& rng, int dim) {
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) g(r, c) = Complex(rng.normal(), rng.normal());
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < dim; ++c) {
    const Complex diag = r(c, c);
    const Complex phase = diag / std::abs(diag);
    q.col(c) *= phase;
  }
  return q;
}

/// Strictly positive weights on the simplex, bounded away from zero.
inline std::vector<double> random_weights(Rng& rng, int m, double floor = 1e-3) {
  std::vector<double> w(static_cast<std::size_t>(m));
  while (true) {
    double sum = 0.0;
    for (double& x : w) {
      x = -std::log(1.0 - rng.uniform()); // Exp(1) -> Dirichlet(1,..,1)
      sum += x;
    }
    double min = 1.0;
    for (double& x : w) {
      x /= sum;
      min = std::min(min, x);
    }
    if (min >= floor) return w;
  }
}

/// Product of independent random single-qudit kets.
inline PureState random_product_state(Rng& rng, const CompositeShape& shape) {
  Vector out = random_ket(rng, shape.local_dim());
  for (int k = 1; k < shape.subsystems(); ++k) {
    const Vector f = random_ket(rng, shape.local_dim());
    Vector next(out.size() * shape.local_dim());
    for (long long i = 0; i < out.size(); ++i) {
      next.segment(i * shape.local_dim(), shape.local_dim()) = out(i) * f;
    }
    out = std::move(next);
  }
  return PureState::make(shape, std::move(out));
}

/// Random convex sum of random product projectors: separable by construction.
inline DensityMatrix random_separable_density(Rng& rng, const CompositeShape& shape, int terms) {
  const std::vector<double> w = random_weights(rng, terms);
  Matrix m = Matrix::Zero(shape.dim(), shape.dim());
  for (int t = 0; t < terms; ++t) {
    const Vector a = random_product_state(rng, shape).amplitudes();
    m += w[static_cast<std::size_t>(t)] * (a * a.adjoint());
  }
  return DensityMatrix::make(shape, std::move(m));
}

/// Random density matrix: mixture of Haar-random (generally entangled) kets.
inline DensityMatrix random_density(Rng& rng, const CompositeShape& shape, int terms) {
  const std::vector<double> w = random_weights(rng, terms);
  Matrix m = Matrix::Zero(shape.dim(), shape.dim());
  for (int t = 0; t < terms; ++t) {
    const Vector a = random_ket(rng, shape.dim());
    m += w[static_cast<std::size_t>(t)] * (a * a.adjoint());
  }
  return DensityMatrix::make(shape, std::move(m));
}

/// One member of the phase-and-shift family
///   (1/sqrt d) sum_k w^(pk) |k>^(x)(N-1) |k+s mod d>,  w = exp(2 pi i / d):
/// pairwise orthogonal across distinct (p, s), every one-qudit marginal I/d.
inline PureState phase_shift_state(int n, int d, int phase, int shift) {
  const CompositeShape shape = CompositeShape::make(n, d);
  Vector amps = Vector::Zero(shape.dim());
  const double r = 1.0 / std::sqrt(static_cast<double>(d));
  const double theta = 2.0 * M_PI / static_cast<double>(d);
  for (int k = 0; k < d; ++k) {
    long long idx = 0;
    for (int site = 1; site < n; ++site) idx += static_cast<long long>(k) * shape.stride(site);
    idx += static_cast<long long>((k + shift) % d) * shape.stride(n);
    amps(idx) = r * Complex(std::cos(theta * phase * k), std::sin(theta * phase * k));
  }
  return PureState::make(shape, std::move(amps));
}

/// M distinct members of the phase-and-shift family, optionally conjugated by
/// a random product of local unitaries (which preserves orthonormality and
/// maximally mixed marginals). Membership and orthogonality are re-verified
/// post hoc; a draw that fails either is rejected and retried.
inline std::vector<PureState> random_orthogonal_family(Rng& rng, int n, int d, int m,
                                                       bool rotate) {
  if (m > d * d) throw contract_error("random_orthogonal_family: at most d^2 members exist");
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<int> pool(static_cast<std::size_t>(d * d));
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng.engine());

    std::vector<PureState> family;
    for (int k = 0; k < m; ++k) {
      family.push_back(phase_shift_state(n, d, pool[static_cast<std::size_t>(k)] / d,
                                         pool[static_cast<std::size_t>(k)] % d));
    }

    if (rotate) {
      std::vector<Matrix> locals;
      for (int site = 0; site < n; ++site) locals.push_back(random_unitary(rng, d));
      Matrix u = locals[0];
      for (int site = 1; site < n; ++site) {
        Matrix next(u.rows() * d, u.cols() * d);
        for (Eigen::Index r = 0; r < u.rows(); ++r) {
          for (Eigen::Index c = 0; c < u.cols(); ++c) {
            next.block(r * d, c * d, d, d) = u(r, c) * locals[static_cast<std::size_t>(site)];
          }
        }
        u = std::move(next);
      }
      for (PureState& phi : family) {
        phi = PureState::make(phi.shape(), (u * phi.amplitudes()).eval());
      }
    }

    bool ok = true;
    for (std::size_t k = 0; k < family.size() && ok; ++k) {
      if (!has_maximally_mixed_marginals(family[k])) ok = false;
      for (std::size_t l = k + 1; l < family.size() && ok; ++l) {
        if (std::abs(overlap(family[k], family[l])) > 1e-10) ok = false;
      }
    }
    if (ok) return family;
  }
  throw contract_error("random_orthogonal_family: rejection sampling failed to converge");
}

} // namespace qmix
