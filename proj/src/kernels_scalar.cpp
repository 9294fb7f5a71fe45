#include "unruhsim/kernels.hpp"

namespace unruhsim::kernels {

void matmul4_scalar(const cplx* a, const cplx* b, cplx* c) {
  for (int i = 0; i < 4; ++i) {
    cplx r0{}, r1{}, r2{}, r3{};
    for (int k = 0; k < 4; ++k) {
      const cplx aik = a[i * 4 + k];
      r0 += aik * b[k * 4 + 0];
      r1 += aik * b[k * 4 + 1];
      r2 += aik * b[k * 4 + 2];
      r3 += aik * b[k * 4 + 3];
    }
    c[i * 4 + 0] = r0;
    c[i * 4 + 1] = r1;
    c[i * 4 + 2] = r2;
    c[i * 4 + 3] = r3;
  }
}

void matmul4_acc_scalar(const cplx* a, const cplx* b, cplx* c) {
  for (int i = 0; i < 4; ++i) {
    cplx r0 = c[i * 4 + 0], r1 = c[i * 4 + 1];
    cplx r2 = c[i * 4 + 2], r3 = c[i * 4 + 3];
    for (int k = 0; k < 4; ++k) {
      const cplx aik = a[i * 4 + k];
      r0 += aik * b[k * 4 + 0];
      r1 += aik * b[k * 4 + 1];
      r2 += aik * b[k * 4 + 2];
      r3 += aik * b[k * 4 + 3];
    }
    c[i * 4 + 0] = r0;
    c[i * 4 + 1] = r1;
    c[i * 4 + 2] = r2;
    c[i * 4 + 3] = r3;
  }
}

}  // namespace unruhsim::kernels
