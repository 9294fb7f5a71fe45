#pragma once

#include <array>

#include "unruhsim/density.hpp"

namespace unruhsim {

/// Wootters spin flip: (sigma2 (x) sigma2) rho* (sigma2 (x) sigma2), with
/// rho* the entrywise complex conjugate. Every state in this pipeline is
/// real-valued, so the conjugation is a no-op there, but the conjugated form
/// is the one for which the concurrence is a valid entanglement measure.
ComplexMatrix spin_flip(const DensityMatrix& rho);

/// sqrt(lambda_i) of the spectrum of rho * spin_flip(rho), descending.
/// Computed through the Hermitian reformulation: the sqrt(lambda_i) are the
/// singular values of sqrt(rho) Y conj(sqrt(rho)) with Y = sigma2 (x) sigma2,
/// which keeps the near-zero values accurate in the absolute sense instead
/// of amplifying eigenvalue noise through the square root.
std::array<double, 4> wootters_sqrt_eigenvalues(const DensityMatrix& rho);

/// Concurrence C = max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)}.
double concurrence(const DensityMatrix& rho);

/// Closed-form concurrence for X-form states (nonzero entries only on the
/// diagonal and antidiagonal): C = 2 max{0, |rho14| - sqrt(rho22 rho33),
/// |rho23| - sqrt(rho11 rho44)}. Independent of the eigenvalue path; used as
/// its oracle. Entries off the X pattern above 1e-12 throw
/// std::invalid_argument.
double concurrence_xstate(const DensityMatrix& rho);

}  // namespace unruhsim
