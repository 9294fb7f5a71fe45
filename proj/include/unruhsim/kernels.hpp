#pragma once

#include <complex>

// Dispatched arithmetic kernels for the 4x4 complex matrices that dominate
// every sweep (Kraus application, spin-flip products). A scalar reference
// implementation is always available; an AVX2+FMA variant is selected at
// runtime on x86-64 CPUs that support it. All matrices are row-major,
// densely packed, 16 entries.
namespace unruhsim::kernels {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b);

// Best backend this CPU supports.
Backend detected_backend();

// Backend currently used by the dispatched entry points.
Backend active_backend();

// Force a backend (tests / benchmarks). Throws std::invalid_argument if the
// CPU does not support it. Not thread-safe; set before spawning workers.
void set_backend(Backend b);

// c = a * b. c must not alias a or b.
void matmul4(const cplx* a, const cplx* b, cplx* c);
// c += a * b. Same aliasing rule.
void matmul4_acc(const cplx* a, const cplx* b, cplx* c);

// Reference kernels (the equivalence baseline, always compiled).
void matmul4_scalar(const cplx* a, const cplx* b, cplx* c);
void matmul4_acc_scalar(const cplx* a, const cplx* b, cplx* c);

#if defined(__x86_64__) || defined(_M_X64)
void matmul4_avx2(const cplx* a, const cplx* b, cplx* c);
void matmul4_acc_avx2(const cplx* a, const cplx* b, cplx* c);
#endif

}  // namespace unruhsim::kernels
