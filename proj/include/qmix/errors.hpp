#pragma once

#include <stdexcept>
#include <string>

namespace qmix {

/// Base class for all qmix failures.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Mismatched or invalid shapes / subsystem addressing.
class shape_error : public error {
public:
  using error::error;
};

/// A value violated an operation's contract (bad norm, non-Hermitian input,
/// weight sum off the simplex, invalid parameter range, ...).
class contract_error : public error {
public:
  using error::error;
};

/// A requested construction would not be positive semidefinite.
class positivity_error : public contract_error {
public:
  using contract_error::contract_error;
};

/// Composite dimension exceeds the dense-storage cap.
class capacity_error : public error {
public:
  using error::error;
};

} // namespace qmix
