#include "unruhsim/density.hpp"

#include <cmath>
#include <stdexcept>

namespace unruhsim {

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(m) {
  if (m_.dim() != 4) throw std::invalid_argument("DensityMatrix: expected a 4x4 matrix");
  if (!m_.all_finite()) throw std::invalid_argument("DensityMatrix: non-finite entries");
  if (std::abs(m_.trace() - 1.0) > 1e-12) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  if (max_abs_diff(m_, dagger(m_)) > 1e-12) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  const HermitianEigen eig = hermitian_eigen(m_);
  if (eig.values[0] < -1e-10) {
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
  }
}

}  // namespace unruhsim
