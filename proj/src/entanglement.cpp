#include "unruhsim/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace unruhsim {

namespace {

const ComplexMatrix& sigma2_pair() {
  static const ComplexMatrix yy = kron(pauli_sigma2(), pauli_sigma2());
  return yy;
}

double real_clamped(cplx v) { return std::max(v.real(), 0.0); }

}  // namespace

ComplexMatrix spin_flip(const DensityMatrix& rho) {
  const ComplexMatrix& yy = sigma2_pair();
  return mul(mul(yy, conjugate(rho.mat())), yy);
}

std::array<double, 4> wootters_sqrt_eigenvalues(const DensityMatrix& rho) {
  const ComplexMatrix root = sqrt_psd(rho.mat());
  const ComplexMatrix w = mul(mul(root, sigma2_pair()), conjugate(root));
  return singular_values4(w);  // already descending
}

double concurrence(const DensityMatrix& rho) {
  const auto s = wootters_sqrt_eigenvalues(rho);
  return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

double concurrence_xstate(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.mat();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(m(i, j)) > 1e-12) {
        throw std::invalid_argument("concurrence_xstate: state is not X-form");
      }
    }
  }
  const double inner = std::abs(m(0, 3)) - std::sqrt(real_clamped(m(1, 1)) * real_clamped(m(2, 2)));
  const double outer = std::abs(m(1, 2)) - std::sqrt(real_clamped(m(0, 0)) * real_clamped(m(3, 3)));
  return 2.0 * std::max({0.0, inner, outer});
}

}  // namespace unruhsim
