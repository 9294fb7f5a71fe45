#include "unruhsim/kernels.hpp"

#include <stdexcept>

namespace unruhsim::kernels {

namespace {

bool avx2_usable() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend& active_slot() {
  static Backend b = detected_backend();
  return b;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "?";
}

Backend detected_backend() {
  // TODO: add a NEON variant once there is ARM hardware in CI to verify it.
  return avx2_usable() ? Backend::Avx2 : Backend::Scalar;
}

Backend active_backend() { return active_slot(); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_usable()) {
    throw std::invalid_argument("kernels: AVX2 backend not supported by this CPU");
  }
  active_slot() = b;
}

void matmul4(const cplx* a, const cplx* b, cplx* c) {
#if defined(__x86_64__) || defined(_M_X64)
  if (active_slot() == Backend::Avx2) {
    matmul4_avx2(a, b, c);
    return;
  }
#endif
  matmul4_scalar(a, b, c);
}

void matmul4_acc(const cplx* a, const cplx* b, cplx* c) {
#if defined(__x86_64__) || defined(_M_X64)
  if (active_slot() == Backend::Avx2) {
    matmul4_acc_avx2(a, b, c);
    return;
  }
#endif
  matmul4_acc_scalar(a, b, c);
}

}  // namespace unruhsim::kernels
