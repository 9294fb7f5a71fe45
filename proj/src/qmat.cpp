#include "unruhsim/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unruhsim/kernels.hpp"

namespace unruhsim {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > ComplexMatrix::kMaxDim) {
    throw std::invalid_argument("ComplexMatrix: dim must be in [1, 8]");
  }
}

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) { check_dim(dim); }

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const int n = static_cast<int>(rows.size());
  ComplexMatrix m(n);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("ComplexMatrix::from_rows: ragged rows");
    }
    int j = 0;
    for (const cplx& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t{};
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  for (int i = 0; i < dim_ * dim_; ++i) {
    if (!std::isfinite(a_[i].real()) || !std::isfinite(a_[i].imag())) return false;
  }
  return true;
}

const ComplexMatrix& pauli_sigma2() {
  static const ComplexMatrix s2 = ComplexMatrix::from_rows({{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}});
  return s2;
}

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b, "mul");
  const int n = a.dim();
  ComplexMatrix c(n);
  if (n == 4) {
    kernels::matmul4(a.data(), b.data(), c.data());
    return c;
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b, "add");
  const int n = a.dim();
  ComplexMatrix c(n);
  for (int i = 0; i < n * n; ++i) c.data()[i] = a.data()[i] + b.data()[i];
  return c;
}

ComplexMatrix scale(cplx s, const ComplexMatrix& a) {
  ComplexMatrix c(a.dim());
  const int nn = a.dim() * a.dim();
  for (int i = 0; i < nn; ++i) c.data()[i] = s * a.data()[i];
  return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = std::conj(a(j, i));
  return c;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix c(n);
  for (int i = 0; i < n * n; ++i) c.data()[i] = std::conj(a.data()[i]);
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  if (na * nb > ComplexMatrix::kMaxDim) {
    throw std::invalid_argument("kron: product dimension exceeds 8");
  }
  ComplexMatrix c(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return c;
}

ComplexMatrix partial_trace_third(const ComplexMatrix& rho8) {
  if (rho8.dim() != 8) {
    throw std::invalid_argument("partial_trace_third: expected an 8x8 matrix");
  }
  ComplexMatrix rho4(4);
  for (int ab = 0; ab < 4; ++ab)
    for (int cd = 0; cd < 4; ++cd)
      for (int e = 0; e < 2; ++e) rho4(ab, cd) += rho8(2 * ab + e, 2 * cd + e);
  return rho4;
}

double max_abs(const ComplexMatrix& m) {
  double mx = 0.0;
  for (int i = 0; i < m.dim() * m.dim(); ++i) mx = std::max(mx, std::abs(m.data()[i]));
  return mx;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b, "max_abs_diff");
  double mx = 0.0;
  for (int i = 0; i < a.dim() * a.dim(); ++i) {
    mx = std::max(mx, std::abs(a.data()[i] - b.data()[i]));
  }
  return mx;
}

// ---------------------------------------------------------------------------
// eigenvalues4: Hessenberg reduction + explicitly shifted QR with deflation.
// ---------------------------------------------------------------------------

namespace {

constexpr int kN = 4;
using Mat4 = std::array<std::array<cplx, kN>, kN>;

// Householder similarity reduction to upper Hessenberg form.
void hessenberg(Mat4& h) {
  for (int k = 0; k < kN - 2; ++k) {
    double norm = 0.0;
    for (int i = k + 1; i < kN; ++i) norm += std::norm(h[i][k]);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    double below = 0.0;
    for (int i = k + 2; i < kN; ++i) below += std::norm(h[i][k]);
    if (below == 0.0) continue;  // already Hessenberg in this column

    const cplx x0 = h[k + 1][k];
    const cplx phase = (std::abs(x0) == 0.0) ? cplx(1.0) : x0 / std::abs(x0);
    const cplx alpha = -phase * norm;

    std::array<cplx, kN> v{};
    v[k + 1] = x0 - alpha;
    for (int i = k + 2; i < kN; ++i) v[i] = h[i][k];
    double vnorm2 = 0.0;
    for (int i = k + 1; i < kN; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) continue;

    // left: H <- (I - 2 v v^H / v^H v) H
    for (int j = 0; j < kN; ++j) {
      cplx s{};
      for (int i = k + 1; i < kN; ++i) s += std::conj(v[i]) * h[i][j];
      s *= 2.0 / vnorm2;
      for (int i = k + 1; i < kN; ++i) h[i][j] -= s * v[i];
    }
    // right: H <- H (I - 2 v v^H / v^H v)
    for (int i = 0; i < kN; ++i) {
      cplx s{};
      for (int j = k + 1; j < kN; ++j) s += h[i][j] * v[j];
      s *= 2.0 / vnorm2;
      for (int j = k + 1; j < kN; ++j) h[i][j] -= s * std::conj(v[j]);
    }
    for (int i = k + 2; i < kN; ++i) h[i][k] = 0.0;
  }
}

// Eigenvalues of [[a,b],[c,d]]; the smaller root comes from the product to
// dodge cancellation against the shift.
void eig2x2(cplx a, cplx b, cplx c, cplx d, cplx& l1, cplx& l2) {
  const cplx m = 0.5 * (a + d);
  const cplx disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  const cplx big = (std::abs(m + disc) >= std::abs(m - disc)) ? m + disc : m - disc;
  l1 = big;
  if (std::abs(big) > 0.0) {
    l2 = (a * d - b * c) / big;
  } else {
    l2 = m - disc;
  }
}

std::array<cplx, kN> qr_eigenvalues(Mat4 h) {
  constexpr double eps = 1e-16;
  std::array<cplx, kN> out{};
  int hi = kN - 1;
  int iters = 0;

  while (hi >= 0) {
    // flush negligible subdiagonals
    for (int i = 1; i <= hi; ++i) {
      if (std::abs(h[i][i - 1]) <= eps * (std::abs(h[i - 1][i - 1]) + std::abs(h[i][i]))) {
        h[i][i - 1] = 0.0;
      }
    }
    int lo = hi;
    while (lo > 0 && h[lo][lo - 1] != 0.0) --lo;

    if (lo == hi) {
      out[hi] = h[hi][hi];
      --hi;
      continue;
    }
    if (lo == hi - 1) {
      eig2x2(h[lo][lo], h[lo][hi], h[hi][lo], h[hi][hi], out[lo], out[hi]);
      hi -= 2;
      continue;
    }

    if (++iters > 200) {
      throw std::runtime_error("eigenvalues4: QR iteration failed to converge");
    }

    // Wilkinson shift from the trailing 2x2 of the active block.
    cplx s1, s2;
    eig2x2(h[hi - 1][hi - 1], h[hi - 1][hi], h[hi][hi - 1], h[hi][hi], s1, s2);
    cplx mu = (std::abs(s1 - h[hi][hi]) < std::abs(s2 - h[hi][hi])) ? s1 : s2;
    if (iters % 25 == 0) mu += std::abs(h[hi][hi - 1]);  // exceptional nudge

    for (int i = lo; i <= hi; ++i) h[i][i] -= mu;

    // QR by Givens, then RQ.
    std::array<double, kN> cs{};
    std::array<cplx, kN> sn{};
    for (int i = lo; i < hi; ++i) {
      const cplx a = h[i][i];
      const cplx b = h[i + 1][i];
      const double r = std::sqrt(std::norm(a) + std::norm(b));
      if (r == 0.0) {
        cs[i] = 1.0;
        sn[i] = 0.0;
        continue;
      }
      if (std::abs(a) == 0.0) {
        cs[i] = 0.0;
        sn[i] = std::conj(b) / r;
      } else {
        cs[i] = std::abs(a) / r;
        sn[i] = (a / std::abs(a)) * std::conj(b) / r;
      }
      for (int j = i; j < kN; ++j) {
        const cplx t1 = h[i][j], t2 = h[i + 1][j];
        h[i][j] = cs[i] * t1 + sn[i] * t2;
        h[i + 1][j] = -std::conj(sn[i]) * t1 + cs[i] * t2;
      }
    }
    for (int i = lo; i < hi; ++i) {
      for (int j = 0; j <= std::min(i + 2, hi); ++j) {
        const cplx t1 = h[j][i], t2 = h[j][i + 1];
        h[j][i] = cs[i] * t1 + std::conj(sn[i]) * t2;
        h[j][i + 1] = -sn[i] * t1 + cs[i] * t2;
      }
    }

    for (int i = lo; i <= hi; ++i) h[i][i] += mu;
  }
  return out;
}

}  // namespace

std::array<cplx, 4> eigenvalues4(const ComplexMatrix& m) {
  if (m.dim() != 4) throw std::invalid_argument("eigenvalues4: expected a 4x4 matrix");
  if (!m.all_finite()) throw std::invalid_argument("eigenvalues4: non-finite entries");

  Mat4 h;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h[i][j] = m(i, j);
  hessenberg(h);
  auto eigs = qr_eigenvalues(h);
  for (cplx& l : eigs) {
    if (std::abs(l.imag()) <= 1e-10) l = cplx(l.real(), 0.0);
  }
  return eigs;
}

// ---------------------------------------------------------------------------
// Cyclic complex Jacobi for Hermitian matrices, with accumulated vectors.
// ---------------------------------------------------------------------------

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = m(i, j);
      a(j, i) = std::conj(m(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  double frob = 0.0;
  for (int i = 0; i < n * n; ++i) frob += std::norm(a.data()[i]);
  frob = std::sqrt(frob);
  const double stop = 1e-15 * std::max(frob, 1e-300);

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= stop) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= stop * 1e-2) continue;
        const cplx phase = apq / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx sigma = t * c * phase;

        // A <- U^H A U with U = [[c, sigma], [-conj(sigma), c]] on (p, q)
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - std::conj(sigma) * akq;
          a(k, q) = sigma * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sigma * aqk;
          a(q, k) = std::conj(sigma) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (int k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(sigma) * vkq;
          v(k, q) = sigma * vkp + c * vkq;
        }
      }
    }
  }

  HermitianEigen out{{}, v};
  std::array<int, ComplexMatrix::kMaxDim> order{};
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.begin() + n,
            [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });
  ComplexMatrix sorted(n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) sorted(i, j) = v(i, order[j]);
  }
  out.vectors = sorted;
  return out;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m, double neg_tol) {
  const int n = m.dim();
  const HermitianEigen eig = hermitian_eigen(m);
  ComplexMatrix root(n);
  std::array<double, ComplexMatrix::kMaxDim> s{};
  for (int i = 0; i < n; ++i) {
    double lambda = eig.values[i];
    if (lambda < -neg_tol) {
      throw std::runtime_error("sqrt_psd: matrix has a negative eigenvalue beyond tolerance");
    }
    s[i] = std::sqrt(std::max(lambda, 0.0));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx acc{};
      for (int k = 0; k < n; ++k) acc += eig.vectors(i, k) * s[k] * std::conj(eig.vectors(j, k));
      root(i, j) = acc;
    }
  // symmetrize away the last-bit asymmetry
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (root(i, j) + std::conj(root(j, i)));
      root(i, j) = avg;
      root(j, i) = std::conj(avg);
    }
  return root;
}

// ---------------------------------------------------------------------------
// One-sided Jacobi SVD (singular values only).
// ---------------------------------------------------------------------------

std::array<double, 4> singular_values4(const ComplexMatrix& m) {
  if (m.dim() != 4) throw std::invalid_argument("singular_values4: expected a 4x4 matrix");
  ComplexMatrix a = m;
  const int n = 4;

  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        cplx gamma{};
        for (int k = 0; k < n; ++k) {
          alpha += std::norm(a(k, p));
          beta += std::norm(a(k, q));
          gamma += std::conj(a(k, p)) * a(k, q);
        }
        const double mag = std::abs(gamma);
        if (mag <= 1e-15 * std::sqrt(alpha * beta) || mag == 0.0) continue;
        rotated = true;
        const cplx phase = gamma / mag;
        const double tau = (beta - alpha) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx sigma = t * c * phase;
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - std::conj(sigma) * akq;
          a(k, q) = sigma * akp + c * akq;
        }
      }
    }
    if (!rotated) break;
  }

  std::array<double, 4> sv{};
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += std::norm(a(k, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

}  // namespace unruhsim
