#include "qnet/kernels.hpp"

// AVX2+FMA variants. Each __m256d holds two complex doubles (re,im interleaved).
// Complex multiply uses the permute/fmaddsub idiom:
//   a*x = (ar*xr - ai*xi, ar*xi + ai*xr) = fmaddsub(ar, x, ai * swap(x))
// Results differ from the scalar kernels only by FMA rounding.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace qnet::kernels {

namespace {

__attribute__((target("avx2,fma")))
cdouble dotc_avx2(const cdouble* x, const cdouble* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    __m256d accp = _mm256_setzero_pd();  // lanes: (xr*yr, xi*yi)
    __m256d accq = _mm256_setzero_pd();  // lanes: (xr*yi, xi*yr)
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        __m256d ys = _mm256_permute_pd(yv, 0x5);
        accp = _mm256_fmadd_pd(xv, yv, accp);
        accq = _mm256_fmadd_pd(xv, ys, accq);
    }
    __m128d plo = _mm256_castpd256_pd128(accp);
    __m128d phi = _mm256_extractf128_pd(accp, 1);
    __m128d p = _mm_add_pd(plo, phi);
    __m128d qlo = _mm256_castpd256_pd128(accq);
    __m128d qhi = _mm256_extractf128_pd(accq, 1);
    __m128d q = _mm_add_pd(qlo, qhi);
    double re = _mm_cvtsd_f64(p) + _mm_cvtsd_f64(_mm_unpackhi_pd(p, p));
    double im = _mm_cvtsd_f64(q) - _mm_cvtsd_f64(_mm_unpackhi_pd(q, q));
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

__attribute__((target("avx2,fma")))
void axpy_avx2(cdouble a, const cdouble* x, cdouble* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d xs = _mm256_permute_pd(xv, 0x5);
        __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs));
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, prod));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += cdouble{a.real() * xr - a.imag() * xi,
                        a.real() * xi + a.imag() * xr};
    }
}

__attribute__((target("avx2,fma")))
void scal_avx2(cdouble a, cdouble* x, std::size_t n) {
    double* xd = reinterpret_cast<double*>(x);
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d xs = _mm256_permute_pd(xv, 0x5);
        _mm256_storeu_pd(xd + 2 * i,
                         _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs)));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        x[i] = {a.real() * xr - a.imag() * xi, a.real() * xi + a.imag() * xr};
    }
}

__attribute__((target("avx2,fma")))
void rot_avx2(cdouble* x, cdouble* y, double c, cdouble s, std::size_t n) {
    double* xd = reinterpret_cast<double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        __m256d ys = _mm256_permute_pd(yv, 0x5);
        __m256d xs = _mm256_permute_pd(xv, 0x5);
        // s*y and conj(s)*x
        __m256d sy = _mm256_fmaddsub_pd(sr, yv, _mm256_mul_pd(si, ys));
        __m256d scx = _mm256_fmsubadd_pd(sr, xv, _mm256_mul_pd(si, xs));
        _mm256_storeu_pd(xd + 2 * i, _mm256_fmadd_pd(cv, xv, sy));
        _mm256_storeu_pd(yd + 2 * i, _mm256_sub_pd(_mm256_mul_pd(cv, yv), scx));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        x[i] = {c * xr + s.real() * yr - s.imag() * yi,
                c * xi + s.real() * yi + s.imag() * yr};
        y[i] = {c * yr - s.real() * xr - s.imag() * xi,
                c * yi - s.real() * xi + s.imag() * xr};
    }
}

}  // namespace

const Ops* avx2_ops_or_null() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma"))
        return nullptr;
    static const Ops ops{"avx2", dotc_avx2, axpy_avx2, scal_avx2, rot_avx2};
    return &ops;
}

}  // namespace qnet::kernels

#else  // non-x86 builds fall back to the scalar kernels

namespace qnet::kernels {
const Ops* avx2_ops_or_null() { return nullptr; }
}  // namespace qnet::kernels

#endif
