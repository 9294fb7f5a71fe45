#pragma once

#include "unruhsim/density.hpp"

namespace unruhsim {

/// pi/4, the infinite-acceleration limit of r. Domain checks allow a 1e-9
/// slack above it so decimal-rounded inputs like 0.7853981634 are accepted.
inline constexpr double kRMax = 0.78539816339744830962;
inline constexpr double kRSlack = 1e-9;

/// Acceleration parameter from physical inputs:
///   r = arccos((exp(-2 pi omega c / a) + 1)^(-1/2)), in (0, pi/4).
/// r -> 0 as a -> 0+ and r -> pi/4 as a -> infinity. All arguments must be
/// strictly positive and finite; anything else throws std::domain_error.
double r_from_acceleration(double omega, double a, double c);

/// The Alice / region-I state shared after Rob accelerates:
///   rho = 1/2 [cos^2 r |00><00| + cos r (|00><11| + |11><00|)
///              + sin^2 r |01><01| + |11><11|]
/// built from the three-mode pure state (Alice, region I, region II) with
/// region II traced out, so the tracing step itself is exercised on every
/// call. Requires 0 <= r <= pi/4.
DensityMatrix shared_state(double r);

}  // namespace unruhsim
