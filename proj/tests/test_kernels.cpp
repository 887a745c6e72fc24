#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstddef>
#include <vector>

#include "qnet/kernels.hpp"
#include "qnet/linalg.hpp"

using qnet::Rng;
using qnet::cdouble;
namespace kernels = qnet::kernels;

namespace {

std::vector<cdouble> random_vector(std::size_t n, Rng& rng) {
    std::vector<cdouble> v(n);
    for (auto& z : v) z = rng.complex_normal();
    return v;
}

// naive reference semantics, written independently of the kernel layer
cdouble naive_dotc(const std::vector<cdouble>& x, const std::vector<cdouble>& y) {
    cdouble s{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

const std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 32, 33, 64, 100, 127};

struct KernelGuard {
    ~KernelGuard() { kernels::select("auto"); }
};

}  // namespace

TEST_CASE("select accepts known names and rejects unknown ones") {
    KernelGuard guard;
    CHECK(kernels::select("scalar"));
    CHECK(std::string(kernels::active().name) == "scalar");
    CHECK_FALSE(kernels::select("definitely-not-a-kernel-set"));
    // a failed select leaves the previous choice in place
    CHECK(std::string(kernels::active().name) == "scalar");
    CHECK(kernels::select("auto"));
    if (kernels::avx2_supported()) {
        CHECK(kernels::select("avx2"));
        CHECK(std::string(kernels::active().name) == "avx2");
    } else {
        CHECK_FALSE(kernels::select("avx2"));
    }
}

TEST_CASE("every kernel set matches the naive reference") {
    KernelGuard guard;
    std::vector<std::string> sets = {"scalar"};
    if (kernels::avx2_supported()) sets.push_back("avx2");

    for (const std::string& name : sets) {
        CAPTURE(name);
        REQUIRE(kernels::select(name));
        Rng rng(7);
        for (std::size_t n : kLengths) {
            CAPTURE(n);
            const auto x = random_vector(n, rng);
            const auto y = random_vector(n, rng);
            const cdouble a = rng.complex_normal();
            const double margin = 1e-12 * static_cast<double>(n + 1);

            // dotc
            const cdouble d = kernels::dotc(x.data(), y.data(), n);
            CHECK(std::abs(d - naive_dotc(x, y)) <= margin);

            // axpy
            {
                auto got = y;
                kernels::axpy(a, x.data(), got.data(), n);
                for (std::size_t i = 0; i < n; ++i)
                    CHECK(std::abs(got[i] - (y[i] + a * x[i])) <= margin);
            }

            // scal
            {
                auto got = x;
                kernels::scal(a, got.data(), n);
                for (std::size_t i = 0; i < n; ++i)
                    CHECK(std::abs(got[i] - a * x[i]) <= margin);
            }

            // rot: x' = c x + s y, y' = -conj(s) x + c y
            {
                const double c = rng.uniform() * 2.0 - 1.0;
                const cdouble s = rng.complex_normal();
                auto gx = x, gy = y;
                kernels::rot(gx.data(), gy.data(), c, s, n);
                for (std::size_t i = 0; i < n; ++i) {
                    CHECK(std::abs(gx[i] - (c * x[i] + s * y[i])) <= margin);
                    CHECK(std::abs(gy[i] - (-std::conj(s) * x[i] + c * y[i])) <= margin);
                }
            }
        }
    }
}

TEST_CASE("scalar and active kernels agree on long accumulations") {
    KernelGuard guard;
    if (!kernels::avx2_supported()) return;  // nothing to compare against

    Rng rng(11);
    const std::size_t n = 1000;
    const auto x = random_vector(n, rng);
    const auto y = random_vector(n, rng);

    REQUIRE(kernels::select("scalar"));
    const cdouble ds = kernels::dotc(x.data(), y.data(), n);
    REQUIRE(kernels::select("avx2"));
    const cdouble dv = kernels::dotc(x.data(), y.data(), n);
    // different association orders, same value up to rounding
    CHECK(std::abs(ds - dv) <= 1e-10);
}
