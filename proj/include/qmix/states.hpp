#pragma once

#include <bit>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "qmix/tensor.hpp"

namespace qmix {

enum class BellKind { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

/// psi_pm = (|00> pm |11>)/sqrt2, phi_pm = (|01> pm |10>)/sqrt2.
inline PureState bell_state(BellKind which) {
  const CompositeShape shape = CompositeShape::make(2, 2);
  Vector amps = Vector::Zero(4);
  const double r = 1.0 / std::sqrt(2.0);
  switch (which) {
    case BellKind::PsiPlus: amps(0) = r; amps(3) = r; break;
    case BellKind::PsiMinus: amps(0) = r; amps(3) = -r; break;
    case BellKind::PhiPlus: amps(1) = r; amps(2) = r; break;
    case BellKind::PhiMinus: amps(1) = r; amps(2) = -r; break;
  }
  return PureState::make(shape, std::move(amps));
}

enum class GhzSign { Plus, Minus };

/// (1/sqrt d) sum_k |k>^(x)N, optionally signing the last term for qubits.
inline PureState ghz_state(int n, int d, std::optional<GhzSign> sign = std::nullopt) {
  if (n < 2) throw contract_error("ghz_state: need at least two subsystems");
  if (sign.has_value() && d > 2) {
    throw contract_error("ghz_state: the sign variant exists only for qubits");
  }
  const CompositeShape shape = CompositeShape::make(n, d);
  Vector amps = Vector::Zero(shape.dim());
  long long repunit = 0; // index of |k...k> is k * sum_i d^i
  for (int k = 1; k <= n; ++k) repunit += shape.stride(k);
  const double r = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) {
    const bool flip = sign.has_value() && *sign == GhzSign::Minus && k == d - 1;
    amps(k * repunit) = flip ? -r : r;
  }
  return PureState::make(shape, std::move(amps));
}

/// (1/sqrt d) sum_k |k>^(j-1) |k+1 mod d> |k>^(N-j): one site shifted by one
/// level. Every one-qudit marginal is I/d.
inline PureState shifted_state(int n, int d, int j) {
  if (j < 1 || j > n) {
    throw contract_error("shifted_state: position " + std::to_string(j) + " outside 1.." +
                         std::to_string(n));
  }
  const CompositeShape shape = CompositeShape::make(n, d);
  Vector amps = Vector::Zero(shape.dim());
  const double r = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) {
    long long idx = 0;
    for (int site = 1; site <= n; ++site) {
      const int digit = (site == j) ? (k + 1) % d : k;
      idx += static_cast<long long>(digit) * shape.stride(site);
    }
    amps(idx) = r;
  }
  return PureState::make(shape, std::move(amps));
}

struct DickeParams {
  int n;
  int m;
};

/// Equal superposition of all weight-m computational basis states of n qubits.
inline PureState dicke_state(DickeParams p) {
  if (p.n < 2) throw contract_error("dicke_state: need at least two qubits");
  if (p.m < 1 || p.m > p.n - 1) {
    throw contract_error("dicke_state: excitation count " + std::to_string(p.m) +
                         " outside 1.." + std::to_string(p.n - 1));
  }
  const CompositeShape shape = CompositeShape::make(p.n, 2);
  Vector amps = Vector::Zero(shape.dim());
  long long count = 0;
  for (long long idx = 0; idx < shape.dim(); ++idx) {
    if (std::popcount(static_cast<unsigned long long>(idx)) == p.m) {
      amps(idx) = 1.0;
      ++count;
    }
  }
  amps /= std::sqrt(static_cast<double>(count));
  return PureState::make(shape, std::move(amps));
}

inline PureState dicke_state(int n, int m) { return dicke_state(DickeParams{n, m}); }

/// W state on n qubits: the single-excitation Dicke state.
inline PureState w_state(int n) { return dicke_state(n, 1); }

struct StormerParam {
  double alpha;
};

/// Two-qutrit family (2/7)|psi+><psi+| + (alpha/7) s+ + ((5-alpha)/7) s-,
/// where s+ mixes |01>,|12>,|20| and s- mixes |10>,|21>,|02|, and
/// |psi+> = (|00>+|11>+|22>)/sqrt3. All weights nonnegative iff
/// 0 <= alpha <= 5; both one-qutrit marginals are I/3.
inline DensityMatrix stormer_state(StormerParam p) {
  const double alpha = p.alpha;
  if (alpha < 0.0 || alpha > 5.0) {
    throw positivity_error("stormer_state: alpha = " + std::to_string(alpha) +
                           " leaves the positivity range [0, 5]; use stormer_purity for scans");
  }
  const CompositeShape shape = CompositeShape::make(2, 3);
  Matrix m = Matrix::Zero(9, 9);

  Vector psi = Vector::Zero(9);
  psi(0) = psi(4) = psi(8) = 1.0 / std::sqrt(3.0); // |00>,|11>,|22>
  m += (2.0 / 7.0) * (psi * psi.adjoint());

  auto idx = [](int a, int b) { return 3 * a + b; };
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 0}}) {
    m(idx(a, b), idx(a, b)) += alpha / 21.0;
  }
  for (auto [a, b] : {std::pair{1, 0}, {2, 1}, {0, 2}}) {
    m(idx(a, b), idx(a, b)) += (5.0 - alpha) / 21.0;
  }
  return DensityMatrix::make(shape, std::move(m));
}

inline DensityMatrix stormer_state(double alpha) { return stormer_state(StormerParam{alpha}); }

/// Closed-form tr sigma_alpha^2 = (2 alpha^2 - 10 alpha + 37)/147, extended
/// to all real alpha. Equals 1/3 exactly at alpha = -1 and alpha = 6.
inline double stormer_purity(double alpha) { return (2.0 * alpha * alpha - 10.0 * alpha + 37.0) / 147.0; }

} // namespace qmix
