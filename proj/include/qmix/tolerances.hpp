#pragma once

namespace qmix::tol {

/// Norm / trace tolerance for state validation.
inline constexpr double norm = 1e-10;

/// Hermiticity defect tolerance (max entrywise |m - m^dagger|).
inline constexpr double herm = 1e-10;

/// Eigenvalue slack for positive semidefiniteness of numerically
/// constructed states.
inline constexpr double psd = 1e-9;

/// Decision margin for strict inequalities in criteria: "a < b" is decided
/// as a + crit < b so that boundary cases never over-claim entanglement.
inline constexpr double crit = 1e-9;

/// Dense-storage cap on the composite dimension d^N.
inline constexpr long long max_total_dim = 4096;

} // namespace qmix::tol
