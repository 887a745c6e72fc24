#pragma once

// Low-level complex vector kernels used by the dense linear algebra layer.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2+FMA variant. The active set is chosen once at runtime from CPU
// capabilities and can be overridden with the QNET_KERNELS environment
// variable ("scalar", "avx2", "auto") or programmatically via select().

#include <complex>
#include <cstddef>
#include <string_view>

namespace qnet::kernels {

using cdouble = std::complex<double>;

struct Ops {
    const char* name;
    // sum_i conj(x[i]) * y[i]
    cdouble (*dotc)(const cdouble* x, const cdouble* y, std::size_t n);
    // y += a * x
    void (*axpy)(cdouble a, const cdouble* x, cdouble* y, std::size_t n);
    // x *= a
    void (*scal)(cdouble a, cdouble* x, std::size_t n);
    // plane rotation with real c:  x' = c*x + s*y,  y' = -conj(s)*x + c*y
    void (*rot)(cdouble* x, cdouble* y, double c, cdouble s, std::size_t n);
};

const Ops& scalar_ops();

// Active kernel set (resolved on first use).
const Ops& active();

// Force a specific set; returns false if the name is unknown or unsupported
// on this machine. Intended for tests and benchmarks.
bool select(std::string_view name);

bool avx2_supported();

inline cdouble dotc(const cdouble* x, const cdouble* y, std::size_t n) {
    return active().dotc(x, y, n);
}
inline void axpy(cdouble a, const cdouble* x, cdouble* y, std::size_t n) {
    active().axpy(a, x, y, n);
}
inline void scal(cdouble a, cdouble* x, std::size_t n) {
    active().scal(a, x, n);
}
inline void rot(cdouble* x, cdouble* y, double c, cdouble s, std::size_t n) {
    active().rot(x, y, c, s, n);
}

}  // namespace qnet::kernels
