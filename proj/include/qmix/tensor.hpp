#pragma once

#include <cmath>
#include <vector>

#include "qmix/state.hpp"

namespace qmix {

namespace detail {

/// Offsets of all kept-part (resp. dropped-part) basis indices: enumerating
/// digit assignments of `labels` within `shape`, every offset is the
/// contribution of those digits to the composite index.
inline std::vector<long long> part_offsets(const CompositeShape& shape,
                                           const std::vector<int>& labels) {
  const int d = shape.local_dim();
  long long count = 1;
  for (std::size_t i = 0; i < labels.size(); ++i) count *= d;
  std::vector<long long> offsets(static_cast<std::size_t>(count), 0);
  long long block = 1;
  // rightmost label is the fastest-running digit
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    const long long stride = shape.stride(*it);
    for (long long x = 0; x < count; ++x) {
      offsets[static_cast<std::size_t>(x)] += ((x / block) % d) * stride;
    }
    block *= d;
  }
  return offsets;
}

} // namespace detail

inline PureState tensor_product(const PureState& a, const PureState& b) {
  if (a.shape().local_dim() != b.shape().local_dim()) {
    throw shape_error("tensor_product: mismatched local dimensions");
  }
  const CompositeShape shape =
      CompositeShape::make(a.shape().subsystems() + b.shape().subsystems(), a.shape().local_dim());
  const long long da = a.shape().dim();
  const long long db = b.shape().dim();
  Vector out(da * db);
  for (long long i = 0; i < da; ++i) {
    out.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  }
  return PureState::make(shape, std::move(out));
}

inline DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.shape().local_dim() != b.shape().local_dim()) {
    throw shape_error("tensor_product: mismatched local dimensions");
  }
  const CompositeShape shape =
      CompositeShape::make(a.shape().subsystems() + b.shape().subsystems(), a.shape().local_dim());
  const long long da = a.shape().dim();
  const long long db = b.shape().dim();
  Matrix out(da * db, da * db);
  for (long long i = 0; i < da; ++i) {
    for (long long j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.entries()(i, j) * b.entries();
    }
  }
  return DensityMatrix::make_indefinite(shape, std::move(out));
}

/// Reduced state on the `keep` subsystems (ascending original label order).
inline DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemSet& keep) {
  if (keep.empty()) {
    throw contract_error("partial_trace: keep set must be non-empty (a full trace is a scalar)");
  }
  keep.validate_for(rho.shape());
  const CompositeShape& shape = rho.shape();
  const SubsystemSet drop = keep.complement(shape);

  const auto keep_off = detail::part_offsets(shape, keep.labels());
  const auto drop_off = detail::part_offsets(shape, drop.labels());
  const long long dk = static_cast<long long>(keep_off.size());

  Matrix out = Matrix::Zero(dk, dk);
  const Matrix& m = rho.entries();
  for (long long a = 0; a < dk; ++a) {
    for (long long b = 0; b < dk; ++b) {
      Complex sum = 0;
      for (long long e : drop_off) {
        sum += m(keep_off[static_cast<std::size_t>(a)] + e,
                 keep_off[static_cast<std::size_t>(b)] + e);
      }
      out(a, b) = sum;
    }
  }
  const CompositeShape out_shape =
      CompositeShape::make(static_cast<int>(keep.size()), shape.local_dim());
  return DensityMatrix::make_indefinite(out_shape, std::move(out));
}

/// Transpose the `part` subsystems in place of the composite index. A pure
/// entry permutation; applying it twice restores the input exactly.
inline DensityMatrix partial_transpose(const DensityMatrix& rho, const SubsystemSet& part) {
  part.validate_for(rho.shape());
  const CompositeShape& shape = rho.shape();
  const long long dim = shape.dim();

  // split every index into its part-contribution and the rest
  std::vector<long long> part_of(static_cast<std::size_t>(dim), 0);
  for (int label : part.labels()) {
    const long long stride = shape.stride(label);
    const int d = shape.local_dim();
    for (long long x = 0; x < dim; ++x) {
      part_of[static_cast<std::size_t>(x)] += ((x / stride) % d) * stride;
    }
  }

  Matrix out(dim, dim);
  const Matrix& m = rho.entries();
  for (long long r = 0; r < dim; ++r) {
    const long long pr = part_of[static_cast<std::size_t>(r)];
    for (long long c = 0; c < dim; ++c) {
      const long long pc = part_of[static_cast<std::size_t>(c)];
      out(r - pr + pc, c - pc + pr) = m(r, c);
    }
  }
  return DensityMatrix::make_indefinite(shape, std::move(out));
}

/// tr rho^2, computed as sum_ij rho_ij rho_ji without forming the product.
inline double purity(const DensityMatrix& rho) {
  const Matrix& m = rho.entries();
  return m.transpose().cwiseProduct(m).sum().real();
}

/// Eigenvalues of (rho + rho^dagger)/2, sorted descending.
inline Eigen::VectorXd hermitian_spectrum(const DensityMatrix& rho) {
  const Matrix& m = rho.entries();
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tol::herm) {
    throw contract_error("hermitian_spectrum: Hermiticity defect above tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(((m + m.adjoint()) / 2.0).eval(),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

/// von Neumann entropy in bits, with 0 log 0 := 0.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  const Eigen::VectorXd eigs = hermitian_spectrum(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    const double lambda = eigs(i);
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

/// -(1/2) log2 tr rho^2. Monotone decreasing in purity.
inline double renyi2_entropy(const DensityMatrix& rho) { return -0.5 * std::log2(purity(rho)); }

/// <a|b>
inline Complex overlap(const PureState& a, const PureState& b) {
  if (a.shape() != b.shape()) {
    throw shape_error("overlap: states live on different shapes");
  }
  return a.amplitudes().dot(b.amplitudes());
}

} // namespace qmix
