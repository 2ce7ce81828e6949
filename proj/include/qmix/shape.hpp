#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qmix/errors.hpp"
#include "qmix/tolerances.hpp"

namespace qmix {

/// Shape of a composite Hilbert space: N subsystems of equal local dimension d.
///
/// This class is the indexing authority for everything built on top of it.
/// Composite basis indices are lexicographic with subsystem 1 as the most
/// significant digit: index = sum_k digit_k * d^(N-k).
class CompositeShape {
public:
  static CompositeShape make(int n_subsystems, int local_dim) {
    if (n_subsystems < 1) {
      throw contract_error("CompositeShape: need at least one subsystem, got " +
                           std::to_string(n_subsystems));
    }
    if (local_dim < 2) {
      throw contract_error("CompositeShape: local dimension must be >= 2, got " +
                           std::to_string(local_dim));
    }
    long long dim = 1;
    for (int k = 0; k < n_subsystems; ++k) {
      dim *= local_dim;
      if (dim > tol::max_total_dim) {
        throw capacity_error("CompositeShape: total dimension " + std::to_string(local_dim) +
                             "^" + std::to_string(n_subsystems) + " exceeds dense cap " +
                             std::to_string(tol::max_total_dim));
      }
    }
    return CompositeShape(n_subsystems, local_dim, dim);
  }

  int subsystems() const { return n_; }
  int local_dim() const { return d_; }
  long long dim() const { return dim_; }

  /// Stride of subsystem `label` (1-based): d^(N-label).
  long long stride(int label) const {
    long long s = 1;
    for (int k = 0; k < n_ - label; ++k) s *= d_;
    return s;
  }

  /// Digit of `index` at subsystem `label` (1-based).
  int digit(long long index, int label) const {
    return static_cast<int>((index / stride(label)) % d_);
  }

  bool operator==(const CompositeShape& o) const { return n_ == o.n_ && d_ == o.d_; }
  bool operator!=(const CompositeShape& o) const { return !(*this == o); }

private:
  CompositeShape(int n, int d, long long dim) : n_(n), d_(d), dim_(dim) {}
  int n_;
  int d_;
  long long dim_;
};

/// An ordered (ascending) duplicate-free set of 1-based subsystem labels.
class SubsystemSet {
public:
  static SubsystemSet of(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] < 1) {
        throw shape_error("SubsystemSet: labels are 1-based, got " + std::to_string(labels[i]));
      }
      if (i > 0 && labels[i] == labels[i - 1]) {
        throw shape_error("SubsystemSet: duplicate label " + std::to_string(labels[i]));
      }
    }
    return SubsystemSet(std::move(labels));
  }

  static SubsystemSet single(int label) { return of({label}); }

  /// {first, first+1, ..., last}
  static SubsystemSet range(int first, int last) {
    std::vector<int> v;
    for (int k = first; k <= last; ++k) v.push_back(k);
    return of(std::move(v));
  }

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<int>& labels() const { return labels_; }

  bool contains(int label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
  }

  /// Throws unless every label addresses a subsystem of `shape`.
  void validate_for(const CompositeShape& shape) const {
    for (int l : labels_) {
      if (l > shape.subsystems()) {
        throw shape_error("SubsystemSet: label " + std::to_string(l) + " exceeds subsystem count " +
                          std::to_string(shape.subsystems()));
      }
    }
  }

  SubsystemSet complement(const CompositeShape& shape) const {
    validate_for(shape);
    std::vector<int> rest;
    for (int l = 1; l <= shape.subsystems(); ++l) {
      if (!contains(l)) rest.push_back(l);
    }
    return SubsystemSet(std::move(rest));
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(labels_[i]);
    }
    return s + "}";
  }

private:
  explicit SubsystemSet(std::vector<int> labels) : labels_(std::move(labels)) {}
  std::vector<int> labels_;
};

} // namespace qmix
