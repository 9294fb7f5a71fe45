#pragma once

#include <array>
#include <complex>
#include <initializer_list>

namespace unruhsim {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major, dimension 1..8. Small enough to
/// live inline; copies are cheap and every operation below is a pure function.
class ComplexMatrix {
public:
  static constexpr int kMaxDim = 8;

  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  int dim() const { return dim_; }
  cplx& operator()(int i, int j) { return a_[i * dim_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[i * dim_ + j]; }
  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }

  cplx trace() const;
  bool all_finite() const;

private:
  int dim_;
  alignas(32) std::array<cplx, kMaxDim * kMaxDim> a_{};
};

/// Pauli sigma_2, [[0,-i],[i,0]].
const ComplexMatrix& pauli_sigma2();

// Ring operations. Dimension mismatches signal caller bugs and throw
// std::invalid_argument.
ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(cplx s, const ComplexMatrix& a);
ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);

/// Kronecker product: entry a(i,j)*b(k,l) lands at row i*dim_b+k, col j*dim_b+l.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out the third (fastest-varying) qubit of an 8x8 state with ordering
/// (Alice, region I, region II): rho4(ab,cd) = sum_e rho8(abe, cde).
ComplexMatrix partial_trace_third(const ComplexMatrix& rho8);

/// All four eigenvalues of a 4x4 matrix, with algebraic multiplicity,
/// unordered. Hessenberg reduction followed by shifted QR iteration.
/// Imaginary parts with magnitude <= 1e-10 are zeroed (the pipeline's
/// spectra are real analytically; the residue is numerical noise).
std::array<cplx, 4> eigenvalues4(const ComplexMatrix& m);

struct HermitianEigen {
  std::array<double, ComplexMatrix::kMaxDim> values;  // ascending, first dim() valid
  ComplexMatrix vectors;                              // unitary, columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.
/// The strict lower triangle is ignored (taken as the conjugate of the upper).
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// Hermitian PSD square root. Eigenvalues in [-neg_tol, 0) are clamped to
/// zero; anything below -neg_tol throws std::runtime_error (the input was
/// not a PSD matrix and the caller's pipeline is broken).
ComplexMatrix sqrt_psd(const ComplexMatrix& m, double neg_tol = 1e-8);

/// Singular values of a 4x4 matrix, descending. One-sided Jacobi; accurate
/// in the absolute sense down to the noise floor, which is what the
/// concurrence difference needs.
std::array<double, 4> singular_values4(const ComplexMatrix& m);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace unruhsim
