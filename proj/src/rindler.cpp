#include "unruhsim/rindler.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unruhsim {

double r_from_acceleration(double omega, double a, double c) {
  const bool ok = omega > 0.0 && a > 0.0 && c > 0.0 &&
                  std::isfinite(omega) && std::isfinite(a) && std::isfinite(c);
  if (!ok) {
    throw std::domain_error("r_from_acceleration: omega, a, c must be positive and finite");
  }
  const double x = std::exp(-2.0 * std::numbers::pi * omega * c / a);
  return std::acos(1.0 / std::sqrt(x + 1.0));
}

DensityMatrix shared_state(double r) {
  if (!(r >= 0.0 && r <= kRMax + kRSlack)) {
    throw std::domain_error("shared_state: r must lie in [0, pi/4]");
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // |psi> = (cos r |000> + sin r |011> + |110>) / sqrt(2), ordering
  // (Alice, region I, region II) with region II fastest.
  std::array<cplx, 8> psi{};
  psi[0b000] = std::cos(r) * inv_sqrt2;
  psi[0b011] = std::sin(r) * inv_sqrt2;
  psi[0b110] = inv_sqrt2;

  ComplexMatrix rho8(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) rho8(i, j) = psi[i] * std::conj(psi[j]);

  return DensityMatrix(partial_trace_third(rho8));
}

}  // namespace unruhsim
