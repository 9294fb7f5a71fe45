#pragma once

#include "unruhsim/qmat.hpp"

namespace unruhsim {

/// Validated two-qubit state. Basis index is 2*(Alice bit) + (Rob / region-I
/// bit), i.e. |00>, |01>, |10>, |11> in rows 0..3.
class DensityMatrix {
public:
  /// Validates on construction: dim 4, finite entries, Hermitian within
  /// 1e-12, trace 1 within 1e-12, min eigenvalue >= -1e-10. Violations throw
  /// std::invalid_argument.
  explicit DensityMatrix(ComplexMatrix m);

  const ComplexMatrix& mat() const { return m_; }
  const cplx& operator()(int i, int j) const { return m_(i, j); }

private:
  ComplexMatrix m_;
};

}  // namespace unruhsim
