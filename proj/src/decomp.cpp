#include "qnet/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "qnet/kernels.hpp"

namespace qnet {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

cdouble phase_of(cdouble z) {
    const double a = std::abs(z);
    return a > 0.0 ? z / a : cdouble{1.0, 0.0};
}

double sign_nonneg(double x) { return x < 0.0 ? -1.0 : 1.0; }

// Householder vector for x (length m): returns v (normalized) and alpha with
// (I - 2 v v†) x = alpha e1. Returns false if x is already ~ alpha e1.
bool householder_vector(const cdouble* x, std::size_t m, std::vector<cdouble>& v,
                        cdouble& alpha) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm2 += std::norm(x[i]);
    const double norm = std::sqrt(norm2);
    double tail2 = 0.0;
    for (std::size_t i = 1; i < m; ++i) tail2 += std::norm(x[i]);
    if (norm == 0.0 || tail2 == 0.0) {
        // already in e1 direction (or zero); no reflection needed
        alpha = m > 0 ? x[0] : cdouble{0.0, 0.0};
        return false;
    }
    alpha = -phase_of(x[0]) * norm;
    v.assign(x, x + m);
    v[0] -= alpha;
    double vn2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) vn2 += std::norm(v[i]);
    const double vn = std::sqrt(vn2);
    for (std::size_t i = 0; i < m; ++i) v[i] /= vn;
    return true;
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("hermitian_eig: non-square matrix");
    const std::size_t n = a.rows();
    HermitianEig out;
    if (n == 0) return out;

    // defensive hermitization
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

    ComplexMatrix q = ComplexMatrix::identity(n);
    std::vector<cdouble> v, vc, w, wc, u, t;

    // Householder reduction to Hermitian tridiagonal form
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1;
        std::vector<cdouble> x(m);
        for (std::size_t i = 0; i < m; ++i) x[i] = h(k + 1 + i, k);
        cdouble alpha;
        if (!householder_vector(x.data(), m, v, alpha)) continue;
        vc.resize(m);
        for (std::size_t i = 0; i < m; ++i) vc[i] = std::conj(v[i]);

        // p = B v over the trailing block B = h[k+1:, k+1:]
        std::vector<cdouble> p(m);
        for (std::size_t i = 0; i < m; ++i)
            p[i] = kernels::dotc(vc.data(), h.row(k + 1 + i) + (k + 1), m);
        cdouble beta = 0.0;
        for (std::size_t i = 0; i < m; ++i) beta += std::conj(v[i]) * p[i];
        w.resize(m);
        for (std::size_t i = 0; i < m; ++i) w[i] = 2.0 * p[i] - 2.0 * beta.real() * v[i];
        wc.resize(m);
        for (std::size_t i = 0; i < m; ++i) wc[i] = std::conj(w[i]);

        // B -= v w† + w v†
        for (std::size_t i = 0; i < m; ++i) {
            cdouble* rowp = h.row(k + 1 + i) + (k + 1);
            kernels::axpy(-v[i], wc.data(), rowp, m);
            kernels::axpy(-w[i], vc.data(), rowp, m);
        }

        h(k + 1, k) = alpha;
        h(k, k + 1) = std::conj(alpha);
        for (std::size_t i = k + 2; i < n; ++i) {
            h(i, k) = 0.0;
            h(k, i) = 0.0;
        }

        // Q <- Q P  (columns k+1.. of Q)
        u.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            u[i] = kernels::dotc(vc.data(), q.row(i) + (k + 1), m);
        for (std::size_t i = 0; i < n; ++i)
            kernels::axpy(-2.0 * u[i], vc.data(), q.row(i) + (k + 1), m);
    }

    // phase-normalize the subdiagonal to make the tridiagonal matrix real
    std::vector<double> d(n), e(n, 0.0);
    {
        cdouble dk{1.0, 0.0};
        std::vector<cdouble> colphase(n);
        colphase[0] = dk;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            const cdouble tsub = h(k + 1, k);
            const double r = std::abs(tsub);
            e[k] = r;
            dk *= phase_of(tsub);
            colphase[k + 1] = dk;
        }
        for (std::size_t i = 0; i < n; ++i) d[i] = h(i, i).real();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) q(i, j) *= colphase[j];
    }

    // implicit-shift QL on (d, e); rotations applied to rows of qt.
    // Deflation combines the usual relative test with an absolute floor at
    // eps * ||T||_inf: zeroing such an off-diagonal perturbs the matrix by at
    // most eps * ||T||, and without the floor the sweep stalls on blocks that
    // are pure rounding noise (heavily degenerate spectra produce long runs
    // where both d and e sit at ~1e-16 and the relative test can never fire).
    double tnorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(d[i]);
        if (i > 0) row += std::abs(e[i - 1]);
        if (i + 1 < n) row += std::abs(e[i]);
        tnorm = std::max(tnorm, row);
    }
    const double floor = kEps * tnorm;
    ComplexMatrix qt = transpose(q);
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd || std::abs(e[m]) <= floor) break;
            }
            if (m != l) {
                if (iter++ == 50) throw std::runtime_error("hermitian_eig: QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    // columns i, i+1 of the eigenvector matrix: z_i' = c z_i - s z_{i+1}
                    kernels::rot(qt.row(i), qt.row(i + 1), c, cdouble{-s, 0.0}, n);
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    // sort ascending, permuting rows of qt
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });

    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = d[order[j]];
        const cdouble* src = qt.row(order[j]);
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = src[i];
    }
    return out;
}

Svd jacobi_svd(const ComplexMatrix& a) {
    const std::size_t n = a.cols();
    const std::size_t m = std::max(a.rows(), n);  // pad rows when wide
    Svd out;
    if (n == 0) {
        out.u = ComplexMatrix(a.rows(), 0);
        out.v = ComplexMatrix(0, 0);
        return out;
    }

    // column-major work copies
    std::vector<cdouble> w(m * n, cdouble{0.0, 0.0}), v(n * n, cdouble{0.0, 0.0});
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) w[j * m + i] = a(i, j);
    for (std::size_t j = 0; j < n; ++j) v[j * n + j] = 1.0;

    const double tol = 1e-14;
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        std::size_t rotations = 0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                cdouble* wp = w.data() + p * m;
                cdouble* wq = w.data() + q * m;
                const double app = kernels::dotc(wp, wp, m).real();
                const double aqq = kernels::dotc(wq, wq, m).real();
                const cdouble apq = kernels::dotc(wp, wq, m);
                const double g = std::abs(apq);
                if (g <= tol * std::sqrt(app * aqq) || app == 0.0 || aqq == 0.0) continue;
                ++rotations;
                const double tau = (aqq - app) / (2.0 * g);
                const double t = sign_nonneg(tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const cdouble sn = (t * cs) * (apq / g);
                // W_p' = cs W_p - conj(sn) W_q ; W_q' = sn W_p + cs W_q
                kernels::rot(wq, wp, cs, sn, m);
                kernels::rot(v.data() + q * n, v.data() + p * n, cs, sn, n);
            }
        }
        if (rotations == 0) break;
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j)
        sigma[j] = std::sqrt(std::max(0.0, kernels::dotc(w.data() + j * m, w.data() + j * m, m).real()));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    out.singular_values.resize(n);
    out.v = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.singular_values[j] = sigma[order[j]];
        const cdouble* src = v.data() + order[j] * n;
        for (std::size_t i = 0; i < n; ++i) out.v(i, j) = src[i];
    }
    std::size_t rank = 0;
    while (rank < n && out.singular_values[rank] > 0.0) ++rank;
    out.u = ComplexMatrix(a.rows(), rank);
    for (std::size_t j = 0; j < rank; ++j) {
        const cdouble* src = w.data() + order[j] * m;
        const double inv = 1.0 / out.singular_values[j];
        for (std::size_t i = 0; i < a.rows(); ++i) out.u(i, j) = src[i] * inv;
    }
    return out;
}

std::vector<StateVector> null_space(const ComplexMatrix& a, double tol) {
    const Svd svd = jacobi_svd(a);
    const std::size_t n = a.cols();
    if (n == 0) return {};
    const double smax = svd.singular_values.empty() ? 0.0 : svd.singular_values[0];
    std::vector<StateVector> basis;
    for (std::size_t j = 0; j < n; ++j) {
        if (svd.singular_values[j] <= tol * smax) {
            StateVector x(n);
            for (std::size_t i = 0; i < n; ++i) x[i] = svd.v(i, j);
            basis.push_back(std::move(x));
        }
    }
    return basis;
}

namespace {

// eigenvalues of [[a, b], [c, d]]
std::pair<cdouble, cdouble> eig2x2(cdouble a, cdouble b, cdouble c, cdouble d) {
    const cdouble tr = a + d;
    const cdouble det = a * d - b * c;
    const cdouble disc = std::sqrt(tr * tr - 4.0 * det);
    cdouble l1 = 0.5 * (tr + disc);
    if (std::abs(tr - disc) > std::abs(tr + disc)) l1 = 0.5 * (tr - disc);
    const cdouble l2 = (std::abs(l1) > 0.0) ? det / l1 : tr - l1;
    return {l1, l2};
}

void givens(cdouble a, cdouble b, double& c, cdouble& s) {
    const double r = std::sqrt(std::norm(a) + std::norm(b));
    if (r == 0.0) {
        c = 1.0;
        s = 0.0;
        return;
    }
    const double aa = std::abs(a);
    if (aa == 0.0) {
        c = 0.0;
        s = std::conj(b) / std::abs(b);
        return;
    }
    c = aa / r;
    s = (a / aa) * std::conj(b) / r;
}

}  // namespace

std::vector<cdouble> general_eigenvalues(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("general_eigenvalues: non-square matrix");
    const std::size_t n = a.rows();
    std::vector<cdouble> eig(n);
    if (n == 0) return eig;
    if (n == 1) {
        eig[0] = a(0, 0);
        return eig;
    }

    ComplexMatrix h = a;
    std::vector<cdouble> v, vc, t, u;

    // Householder reduction to upper Hessenberg form
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1;
        std::vector<cdouble> x(m);
        for (std::size_t i = 0; i < m; ++i) x[i] = h(k + 1 + i, k);
        cdouble alpha;
        if (!householder_vector(x.data(), m, v, alpha)) continue;
        vc.resize(m);
        for (std::size_t i = 0; i < m; ++i) vc[i] = std::conj(v[i]);

        // left: h[k+1:, k:] -= 2 v (v† h[k+1:, k:])
        const std::size_t width = n - k;
        t.assign(width, cdouble{0.0, 0.0});
        for (std::size_t i = 0; i < m; ++i)
            kernels::axpy(std::conj(v[i]), h.row(k + 1 + i) + k, t.data(), width);
        for (std::size_t i = 0; i < m; ++i)
            kernels::axpy(-2.0 * v[i], t.data(), h.row(k + 1 + i) + k, width);

        // right: h[:, k+1:] -= 2 (h[:, k+1:] v) v†
        u.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            u[i] = kernels::dotc(vc.data(), h.row(i) + (k + 1), m);
        for (std::size_t i = 0; i < n; ++i)
            kernels::axpy(-2.0 * u[i], vc.data(), h.row(i) + (k + 1), m);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + 1 < i; ++j) h(i, j) = 0.0;

    // shifted QR with deflation
    double hnorm = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = (i == 0 ? 0 : i - 1); j < n; ++j) hnorm += std::abs(h(i, j));
    hnorm = std::max(hnorm, 1e-300);

    auto negligible = [&](std::size_t i) {
        const double s = std::abs(h(i - 1, i - 1)) + std::abs(h(i, i));
        return std::abs(h(i, i - 1)) <= kEps * (s > 0.0 ? s : hnorm);
    };

    std::size_t hi = n - 1;
    long budget = 60 * static_cast<long>(n);
    int iter_block = 0;
    while (true) {
        for (std::size_t i = hi; i >= 1; --i)
            if (negligible(i)) h(i, i - 1) = 0.0;

        if (hi == 0 || h(hi, hi - 1) == 0.0) {
            eig[hi] = h(hi, hi);
            if (hi == 0) break;
            --hi;
            iter_block = 0;
            continue;
        }
        if (hi == 1 || h(hi - 1, hi - 2) == 0.0) {
            const auto [l1, l2] = eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            eig[hi - 1] = l1;
            eig[hi] = l2;
            if (hi == 1) break;
            hi -= 2;
            iter_block = 0;
            continue;
        }

        if (--budget < 0) throw std::runtime_error("general_eigenvalues: QR failed to converge");

        std::size_t lo = hi;
        while (lo > 0 && h(lo, lo - 1) != 0.0) --lo;

        cdouble mu;
        if (++iter_block % 12 == 0) {
            mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
        } else {
            const auto [l1, l2] = eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            mu = (std::abs(l1 - h(hi, hi)) < std::abs(l2 - h(hi, hi))) ? l1 : l2;
        }

        for (std::size_t k = lo; k <= hi; ++k) h(k, k) -= mu;
        std::vector<double> cs(hi - lo);
        std::vector<cdouble> sn(hi - lo);
        for (std::size_t k = lo; k < hi; ++k) {
            givens(h(k, k), h(k + 1, k), cs[k - lo], sn[k - lo]);
            kernels::rot(h.row(k) + k, h.row(k + 1) + k, cs[k - lo], sn[k - lo], hi - k + 1);
            h(k + 1, k) = 0.0;
        }
        for (std::size_t k = lo; k < hi; ++k) {
            const double c = cs[k - lo];
            const cdouble s = sn[k - lo];
            const std::size_t top = lo;
            const std::size_t bottom = std::min(k + 2, hi);
            for (std::size_t i = top; i <= bottom; ++i) {
                const cdouble hik = h(i, k);
                const cdouble hik1 = h(i, k + 1);
                h(i, k) = c * hik + std::conj(s) * hik1;
                h(i, k + 1) = -s * hik + c * hik1;
            }
        }
        for (std::size_t k = lo; k <= hi; ++k) h(k, k) += mu;
    }
    return eig;
}

}  // namespace qnet
