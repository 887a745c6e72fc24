#include "qnet/kernels.hpp"

namespace qnet::kernels {

namespace {

cdouble dotc_ref(const cdouble* x, const cdouble* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void axpy_ref(cdouble a, const cdouble* x, cdouble* y, std::size_t n) {
    const double ar = a.real(), ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += cdouble{ar * xr - ai * xi, ar * xi + ai * xr};
    }
}

void scal_ref(cdouble a, cdouble* x, std::size_t n) {
    const double ar = a.real(), ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        x[i] = {ar * xr - ai * xi, ar * xi + ai * xr};
    }
}

void rot_ref(cdouble* x, cdouble* y, double c, cdouble s, std::size_t n) {
    const double sr = s.real(), si = s.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        x[i] = {c * xr + sr * yr - si * yi, c * xi + sr * yi + si * yr};
        // -conj(s) * x + c * y
        y[i] = {c * yr - sr * xr - si * xi, c * yi - sr * xi + si * xr};
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", dotc_ref, axpy_ref, scal_ref, rot_ref};
    return ops;
}

}  // namespace qnet::kernels
