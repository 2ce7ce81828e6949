#pragma once

#include <complex>
#include <string>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "qmix/errors.hpp"
#include "qmix/shape.hpp"
#include "qmix/tolerances.hpp"

namespace qmix {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

class DensityMatrix;

/// Normalized complex amplitude vector over a composite shape.
class PureState {
public:
  static PureState make(CompositeShape shape, Vector amplitudes) {
    if (amplitudes.size() != shape.dim()) {
      throw shape_error("PureState: amplitude length " + std::to_string(amplitudes.size()) +
                        " does not match composite dimension " + std::to_string(shape.dim()));
    }
    const double n = amplitudes.norm();
    if (std::abs(n - 1.0) > tol::norm) {
      throw contract_error("PureState: norm " + std::to_string(n) + " is not 1 within tolerance");
    }
    return PureState(shape, std::move(amplitudes));
  }

  const CompositeShape& shape() const { return shape_; }
  const Vector& amplitudes() const { return amps_; }

  DensityMatrix projector() const;

private:
  PureState(CompositeShape shape, Vector amps) : shape_(shape), amps_(std::move(amps)) {}
  CompositeShape shape_;
  Vector amps_;
};

/// Hermitian unit-trace matrix over a composite shape.
///
/// `make` additionally enforces positive semidefiniteness (min eigenvalue
/// >= -tol::psd); `make_indefinite` skips that one check and exists for
/// operators that are states in every respect except positivity, such as
/// partial transposes.
class DensityMatrix {
public:
  static DensityMatrix make(CompositeShape shape, Matrix entries) {
    DensityMatrix rho = make_indefinite(shape, std::move(entries));
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        ((rho.m_ + rho.m_.adjoint()) / 2.0).eval(), Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -tol::psd) {
      throw positivity_error("DensityMatrix: minimum eigenvalue " + std::to_string(min_eig) +
                             " is negative beyond tolerance");
    }
    return rho;
  }

  static DensityMatrix make_indefinite(CompositeShape shape, Matrix entries) {
    if (entries.rows() != shape.dim() || entries.cols() != shape.dim()) {
      throw shape_error("DensityMatrix: entries are " + std::to_string(entries.rows()) + "x" +
                        std::to_string(entries.cols()) + ", expected " +
                        std::to_string(shape.dim()) + " square");
    }
    const double defect = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if (defect > tol::herm) {
      throw contract_error("DensityMatrix: Hermiticity defect " + std::to_string(defect) +
                           " above tolerance");
    }
    const Complex tr = entries.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > tol::norm) {
      throw contract_error("DensityMatrix: trace deviates from 1");
    }
    return DensityMatrix(shape, std::move(entries));
  }

  static DensityMatrix maximally_mixed(CompositeShape shape) {
    Matrix m = Matrix::Identity(shape.dim(), shape.dim()) / static_cast<double>(shape.dim());
    return DensityMatrix(shape, std::move(m));
  }

  const CompositeShape& shape() const { return shape_; }
  const Matrix& entries() const { return m_; }

private:
  friend class PureState;
  DensityMatrix(CompositeShape shape, Matrix m) : shape_(shape), m_(std::move(m)) {}
  CompositeShape shape_;
  Matrix m_;
};

inline DensityMatrix PureState::projector() const {
  return DensityMatrix(shape_, (amps_ * amps_.adjoint()).eval());
}

} // namespace qmix
