#include "qnet/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qnet/analysis.hpp"
#include "qnet/attractors.hpp"
#include "qnet/decomp.hpp"
#include "qnet/linalg.hpp"
#include "qnet/network_spec.hpp"
#include "qnet/ruo.hpp"
#include "qnet/verify.hpp"

namespace qnet {

namespace {

using nlohmann::json;

const double kPi = std::numbers::pi;

std::string fmt17(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

// Writes to the path, or to stdout when the path is empty. Returns false on
// I/O failure.
bool write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return static_cast<bool>(std::cout.flush());
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
    return static_cast<bool>(f.flush());
}

int emit_error(const GlobalOptions& g, const std::string& message) {
    json j;
    j["error"] = message;
    write_output(g.out, j.dump(2));
    return 2;
}

json battery_json(const CheckBattery& b) {
    json checks = json::array();
    for (const CheckResult& c : b.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    json j;
    j["suite"] = b.suite;
    j["all_pass"] = b.all_pass();
    j["failures"] = b.failures();
    j["checks"] = std::move(checks);
    return j;
}

json components_json(const AttractorSpace& s) {
    json comps = json::array();
    for (const AttractorComponent& c : s.components) {
        json jc;
        jc["lambda"] = c.lambda.real();
        jc["dim"] = c.basis.size();
        jc["max_residual"] = c.max_residual;
        comps.push_back(std::move(jc));
    }
    json j;
    j["components"] = std::move(comps);
    j["total_dim"] = s.total_dim();
    return j;
}

std::string density_json(const DensityOperator& rho) {
    const std::size_t d = rho.dim();
    json re = json::array(), im = json::array();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            re.push_back(rho.mat(i, j).real());
            im.push_back(rho.mat(i, j).imag());
        }
    json j;
    j["dim"] = d;
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j.dump(2);
}

DensityOperator density_from_json_file(const std::string& path, int n) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open state file: " + path);
    json j = json::parse(f, nullptr, true);
    if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument(path + ": state JSON needs fields dim, re, im");
    const std::size_t d = j["dim"].get<std::size_t>();
    if (d != (std::size_t{1} << n))
        throw std::invalid_argument(path + ": state dimension " + std::to_string(d) +
                                    " does not match a " + std::to_string(n) +
                                    "-qubit register");
    const auto& re = j["re"];
    const auto& im = j["im"];
    if (!re.is_array() || !im.is_array() || re.size() != d * d || im.size() != d * d)
        throw std::invalid_argument(path + ": re/im must be arrays of dim*dim numbers");
    DensityOperator rho{ComplexMatrix(d, d)};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j2 = 0; j2 < d; ++j2)
            rho.mat(i, j2) = cdouble{re[i * d + j2].get<double>(), im[i * d + j2].get<double>()};
    std::string why;
    if (!is_valid_density(rho, &why))
        throw std::invalid_argument(path + ": not a valid density operator: " + why);
    return rho;
}

// --rho0 sources: random:<seed> | file:<path> | basis:<bits>
DensityOperator rho0_from_source(const std::string& src, int n, std::uint64_t* seed_used) {
    *seed_used = 0;
    const auto colon = src.find(':');
    const std::string head = src.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : src.substr(colon + 1);
    if (head == "random") {
        std::uint64_t seed = 0;
        try {
            seed = std::stoull(tail);
        } catch (const std::exception&) {
            throw std::invalid_argument("rho0 source 'random:' needs an integer seed, got '" +
                                        tail + "'");
        }
        *seed_used = seed;
        return random_density(n, seed);
    }
    if (head == "file") {
        if (tail.empty()) throw std::invalid_argument("rho0 source 'file:' needs a path");
        return density_from_json_file(tail, n);
    }
    if (head == "basis") {
        if (static_cast<int>(tail.size()) != n)
            throw std::invalid_argument("rho0 source 'basis:' needs exactly " +
                                        std::to_string(n) + " bits, got '" + tail + "'");
        std::size_t index = 0;
        for (char c : tail) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("rho0 source 'basis:' accepts only 0/1 bits, got '" +
                                            tail + "'");
            index = (index << 1) | static_cast<std::size_t>(c - '0');
        }
        return DensityOperator::from_state(
            StateVector::basis_state(std::size_t{1} << n, index));
    }
    throw std::invalid_argument("unknown rho0 source '" + src +
                                "' (expected random:<seed>, file:<path>, or basis:<bits>)");
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    threads = std::max(1, std::min(threads, count));
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

GateFamily family_of(GateKind kind) {
    switch (kind) {
        case GateKind::cu2:
            return GateFamily::two_qubit;
        case GateKind::cu31:
            return GateFamily::f1;
        case GateKind::cu32:
            return GateFamily::f2;
    }
    throw std::logic_error("unreachable gate kind");
}

double entropy_bits(const ComplexMatrix& herm) {
    const HermitianEig eig = hermitian_eig(herm);
    double s = 0.0;
    for (double v : eig.eigenvalues)
        if (v > 1e-12) s -= v * std::log2(v);
    return s;
}

// ---- analytic reduced states for the correlation sweep ---------------------
//
// Model asymptotic state built inside the attractor span from the invariant
// product vectors v_a = q_a^{tensor n}:
//   rho = sum_a w_a |v_a><v_a| + coef (I - P),  coef = (1 - sum w)/(2^n - k),
// with P the projector onto span{v_a}. Because every v_a is a product of one
// repeated single-qubit factor, all reduced states follow from scalar overlaps
// o(a,b) = <q_a|q_b>; nothing of size 2^n is ever materialized.

struct ReducedModel {
    ComplexMatrix two;     // 4x4 two-qubit reduction
    ComplexMatrix one;     // 2x2 single-qubit reduction
    bool feasible = true;  // all weights >= 0 and their sum <= 1
};

ReducedModel reduced_model(const std::vector<StateVector>& factors,
                           const std::vector<double>& weights, int n) {
    const std::size_t k = factors.size();
    ReducedModel out;
    double wsum = 0.0;
    for (double w : weights) {
        if (w < -1e-12) out.feasible = false;
        wsum += w;
    }
    if (wsum > 1.0 + 1e-12) out.feasible = false;
    if (!out.feasible) return out;

    // scalar overlaps and the Gram matrix of the product vectors
    ComplexMatrix o(k, k), gram(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            o(a, b) = inner(factors[a], factors[b]);
            gram(a, b) = std::pow(o(a, b), static_cast<double>(n));
        }

    // Gram-Schmidt in coefficient space: e_j = sum_b C(j,b) v_b
    ComplexMatrix C(k, k);
    for (std::size_t a = 0; a < k; ++a) {
        std::vector<cdouble> coeff(k, cdouble{0.0, 0.0});
        coeff[a] = 1.0;
        for (std::size_t j = 0; j < a; ++j) {
            cdouble proj{0.0, 0.0};  // <e_j, v_a>
            for (std::size_t b = 0; b < k; ++b) proj += std::conj(C(j, b)) * gram(b, a);
            for (std::size_t b = 0; b < k; ++b) coeff[b] -= proj * C(j, b);
        }
        cdouble norm2{0.0, 0.0};
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c)
                norm2 += std::conj(coeff[b]) * gram(b, c) * coeff[c];
        const double nv = std::sqrt(std::max(0.0, norm2.real()));
        for (std::size_t b = 0; b < k; ++b) C(a, b) = coeff[b] / nv;
    }
    // P = sum_ab M(a,b) |v_a><v_b| with M = C^T Cbar accumulated over rows
    ComplexMatrix M(k, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) M(a, b) += C(j, a) * std::conj(C(j, b));

    const double dim = std::pow(2.0, n);
    const double coef = (1.0 - wsum) / (dim - static_cast<double>(k));

    auto accumulate = [&](ComplexMatrix& rho, int keep) {
        const std::size_t rd = std::size_t{1} << keep;
        rho = ComplexMatrix(rd, rd);
        const double traced_identity = std::pow(2.0, n - keep);
        for (std::size_t i = 0; i < rd; ++i) rho(i, i) += coef * traced_identity;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                cdouble amp = -coef * M(a, b) * std::pow(o(b, a), static_cast<double>(n - keep));
                if (a == b) amp += weights[a];
                if (std::abs(amp) == 0.0) continue;
                // outer product of q_a^{keep} against q_b^{keep}
                for (std::size_t r = 0; r < rd; ++r)
                    for (std::size_t cidx = 0; cidx < rd; ++cidx) {
                        cdouble va{1.0, 0.0}, vb{1.0, 0.0};
                        for (int bit = 0; bit < keep; ++bit) {
                            va *= factors[a][(r >> bit) & 1];
                            vb *= factors[b][(cidx >> bit) & 1];
                        }
                        rho(r, cidx) += amp * va * std::conj(vb);
                    }
            }
    };
    accumulate(out.two, 2);
    accumulate(out.one, 1);
    return out;
}

}  // namespace

int cmd_simulate(const GlobalOptions& g, const SimulateOptions& opt) {
    try {
        if (g.spec_path.empty()) return emit_error(g, "simulate needs --spec <path>");
        if (opt.steps < 0) return emit_error(g, "--steps must be >= 0");
        if (opt.ensemble < 1) return emit_error(g, "--ensemble must be >= 1");
        if (opt.ref_mode != "asymptote" && opt.ref_mode != "coevolve")
            return emit_error(g, "--ref-mode must be asymptote or coevolve");

        const NetworkSpec spec = parse_spec(g.spec_path);
        const int n = spec.qubits;
        if (n > 10 && !g.force)
            return emit_error(g, "simulation on " + std::to_string(n) +
                                     " qubits is refused without --force (dense evolution "
                                     "grows as 4^n)");
        const RandomUnitaryOperation ruo = spec.build_ruo();

        const bool coevolve = !opt.ref_spec_path.empty() && opt.ref_mode == "coevolve";
        RandomUnitaryOperation ref_ruo = ruo;
        if (!opt.ref_spec_path.empty()) {
            const NetworkSpec ref_spec = parse_spec(opt.ref_spec_path);
            if (ref_spec.qubits != n)
                return emit_error(g, "reference spec has " + std::to_string(ref_spec.qubits) +
                                         " qubits, the main spec has " + std::to_string(n));
            ref_ruo = ref_spec.build_ruo();
        }

        AttractorSpace ref_space;
        if (!coevolve) {
            if (n > 5 && !g.force)
                return emit_error(g, "the dense attractor solver is refused for n = " +
                                         std::to_string(n) +
                                         " without --force (guard: n <= 5); use --ref-mode "
                                         "coevolve to avoid solving");
            ref_space = solve_attractors(ref_ruo);
        }

        // initial states
        const int states = opt.rho0.empty() ? opt.ensemble : 1;
        if (!opt.state_out.empty() && states != 1)
            return emit_error(g, "--state-out needs a single initial state (drop --ensemble "
                                 "or pass --rho0)");

        std::vector<DensityOperator> rho0(states);
        std::vector<std::uint64_t> seeds(states, 0);
        if (!opt.rho0.empty()) {
            rho0[0] = rho0_from_source(opt.rho0, n, &seeds[0]);
        } else {
            for (int k = 0; k < states; ++k) {
                seeds[k] = g.seed + static_cast<std::uint64_t>(k);
                rho0[k] = random_density(n, seeds[k]);
            }
        }

        std::vector<std::vector<TracePoint>> traces(states);
        std::vector<DensityOperator> finals(states);
        parallel_for(states, g.threads, [&](int k) {
            if (coevolve) {
                traces[k] = convergence_trace(ruo, rho0[k], ref_ruo, rho0[k], opt.steps);
                DensityOperator rho = rho0[k];
                for (int s = 0; s < opt.steps; ++s) rho = apply(ruo, rho);
                finals[k] = std::move(rho);
            } else {
                const DensityOperator reference = asymptotic_state(ref_space, rho0[k]);
                traces[k] = convergence_trace(ruo, rho0[k], reference, opt.steps);
                DensityOperator rho = rho0[k];
                for (int s = 0; s < opt.steps; ++s) rho = apply(ruo, rho);
                finals[k] = std::move(rho);
            }
        });

        std::ostringstream csv;
        csv << "state_index,seed,step,distance\n";
        for (int k = 0; k < states; ++k)
            for (const TracePoint& p : traces[k])
                csv << k << ',' << seeds[k] << ',' << p.step << ',' << fmt17(p.distance)
                    << '\n';
        if (!write_output(g.out, csv.str()))
            return emit_error(GlobalOptions{}, "cannot write output: " + g.out);

        if (!opt.state_out.empty()) {
            std::ofstream f(opt.state_out, std::ios::binary);
            if (!f) return emit_error(g, "cannot write state file: " + opt.state_out);
            f << density_json(finals[0]) << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        return emit_error(g, e.what());
    }
}

int cmd_attractors(const GlobalOptions& g, const AttractorOptions& opt) {
    try {
        if (g.spec_path.empty()) return emit_error(g, "attractors needs --spec <path>");
        if (opt.mode != "numeric" && opt.mode != "closed-form" && opt.mode != "both")
            return emit_error(g, "--mode must be numeric, closed-form, or both");

        const NetworkSpec spec = parse_spec(g.spec_path);
        const int n = spec.qubits;
        const bool want_numeric = opt.mode != "closed-form";
        const bool want_closed = opt.mode != "numeric";

        json report;
        report["n"] = n;
        report["phi"] = spec.phi;
        report["mode"] = opt.mode;

        AttractorSpace numeric, closed;
        if (want_numeric) {
            if (n > 5 && !g.force)
                return emit_error(g, "the dense attractor solver is refused for n = " +
                                         std::to_string(n) + " without --force (guard: n <= 5)");
            numeric = solve_attractors(spec.build_ruo());
            report["numeric"] = components_json(numeric);
        }
        if (want_closed) {
            const auto families = spec.families_present();
            if (families.size() != 1)
                return emit_error(g,
                                  "closed-form analysis needs a single interaction family; "
                                  "this spec mixes " +
                                      std::to_string(families.size()));
            const GateFamily family = family_of(families.front());
            const InteractionTopology topo = spec.topology(families.front());
            if (n <= 8) {
                closed = closed_form_attractor_space(family, n, spec.phi, topo);
                report["closed_form"] = components_json(closed);
            } else if (n <= 12) {
                check_base_topology(family, n, topo);
                const ClosedFormDims dims = closed_form_dimensions(family, n, spec.phi);
                json j;
                j["dims_only"] = true;
                j["dim_plus"] = dims.dim_plus;
                j["dim_minus"] = dims.dim_minus;
                report["closed_form"] = std::move(j);
            } else {
                return emit_error(g, "closed-form analysis is limited to n <= 12 (dimensions "
                                     "only above n = 8)");
            }
        }

        bool checks_pass = true;
        if (opt.mode == "both" && n <= 8) {
            const bool nc = space_subset(numeric, closed, g.tol);
            const bool cn = space_subset(closed, numeric, g.tol);
            json j;
            j["numeric_in_closed_form"] = nc;
            j["closed_form_in_numeric"] = cn;
            j["tol"] = g.tol;
            report["containment"] = std::move(j);
            checks_pass = nc && cn;
        }

        if (opt.full_spectrum) {
            if (n > 4 && !g.force)
                return emit_error(g, "--full-spectrum is refused for n = " + std::to_string(n) +
                                         " without --force (dense 4^n eigensolve)");
            const std::vector<cdouble> evs =
                general_eigenvalues(superoperator_matrix(spec.build_ruo()));
            json unit = json::array();
            for (cdouble ev : evs)
                if (std::abs(std::abs(ev) - 1.0) <= 1e-7) {
                    json je;
                    je["re"] = ev.real();
                    je["im"] = ev.imag();
                    unit.push_back(std::move(je));
                }
            json j;
            j["unit_circle_count"] = unit.size();
            j["unit_circle"] = std::move(unit);
            report["full_spectrum"] = std::move(j);
        }

        if (!write_output(g.out, report.dump(2)))
            return emit_error(GlobalOptions{}, "cannot write output: " + g.out);
        return checks_pass ? 0 : 1;
    } catch (const std::exception& e) {
        return emit_error(g, e.what());
    }
}

int cmd_verify(const GlobalOptions& g, const VerifyCliOptions& opt) {
    try {
        VerifyOptions vo;
        if (!opt.ns.empty()) vo.ns = opt.ns;
        vo.phis = opt.phis;
        vo.seed = g.seed;
        vo.contain_tol = g.tol;
        vo.threads = g.threads;
        for (int n : vo.ns)
            if (n < 2 || n > 5)
                return emit_error(g, "verify runs the dense solver; register sizes must stay "
                                     "within 2..5, got " +
                                         std::to_string(n));

        std::vector<CheckBattery> suites;
        const std::string& s = opt.suite;
        if (s == "base" || s == "all") suites.push_back(verify_two_qubit_base(vo));
        if (s == "theorem1" || s == "all") suites.push_back(verify_theorem1(vo));
        if (s == "theorem2" || s == "all") suites.push_back(verify_theorem2(vo));
        if (s == "simultaneous" || s == "all") {
            suites.push_back(verify_inclusions(vo));
            suites.push_back(verify_probability_independence(vo));
        }
        if (s == "convergence" || s == "all") suites.push_back(verify_convergence(vo));
        if (s == "consensus" || s == "all") suites.push_back(verify_consensus(vo));
        if (s == "entropy" || s == "all") suites.push_back(verify_entropy(vo));
        if (s == "oracle" || s == "all") suites.push_back(verify_oracle(vo));
        if (suites.empty())
            return emit_error(g, "unknown verify suite '" + s +
                                     "' (expected theorem1, theorem2, simultaneous, consensus, "
                                     "entropy, base, convergence, oracle, or all)");

        bool all_pass = true;
        std::size_t failures = 0;
        json jsuites = json::array();
        for (const CheckBattery& b : suites) {
            all_pass = all_pass && b.all_pass();
            failures += b.failures();
            jsuites.push_back(battery_json(b));
        }
        json out;
        out["suites"] = std::move(jsuites);
        out["all_pass"] = all_pass;
        out["failures"] = failures;
        if (!write_output(g.out, out.dump(2)))
            return emit_error(GlobalOptions{}, "cannot write output: " + g.out);
        return all_pass ? 0 : 1;
    } catch (const std::exception& e) {
        return emit_error(g, e.what());
    }
}

namespace {

int analyze_bloch(const GlobalOptions& g, const AnalyzeOptions& opt) {
    const double phi = opt.phi > 0.0 ? opt.phi : kPi / 3;
    for (double p : {opt.p0, opt.p_plus, opt.p_minus})
        if (p < 0.0 || p > 1.0)
            return emit_error(g, "overlap weights must lie in [0, 1]");
    const OverlapParameters params{opt.p0, opt.p_plus, opt.p_minus};
    const BlochVector a = bloch_single_qubit_asymptote(params, phi);
    json j;
    j["phi"] = phi;
    j["p0"] = opt.p0;
    j["p_plus"] = opt.p_plus;
    j["p_minus"] = opt.p_minus;
    j["a"] = {{"x", a.x}, {"y", a.y}, {"z", a.z}};
    j["norm"] = a.norm();
    j["eigenvalues"] = {(1.0 + a.norm()) / 2.0, (1.0 - a.norm()) / 2.0};
    j["physical"] = a.norm() <= 1.0 + 1e-12;
    if (!write_output(g.out, j.dump(2)))
        return emit_error(GlobalOptions{}, "cannot write output: " + g.out);
    return 0;
}

int analyze_correlation(const GlobalOptions& g, const AnalyzeOptions& opt) {
    const int n = opt.n > 0 ? opt.n : 10;
    const double phi = opt.phi > 0.0 ? opt.phi : kPi / 3;
    if (n < 3 || n > 40)
        return emit_error(g, "correlation sweep supports 3 <= n <= 40 (reduced states are "
                             "built analytically)");
    if (opt.step <= 0.0 || opt.step > 1.0) return emit_error(g, "--step must lie in (0, 1]");

    const double c = std::cos(phi / 2), s2 = std::sin(phi / 2);
    const StateVector q0{std::vector<cdouble>{1.0, 0.0}};
    const StateVector qp{std::vector<cdouble>{c, s2}};
    const StateVector qm{std::vector<cdouble>{s2, -c}};
    const std::vector<StateVector> two_factors = {q0, qp};
    const std::vector<StateVector> f1_factors = {q0, qp, qm};

    struct Curve {
        const char* name;
        bool three;  // one-control three-qubit family (else two-qubit)
        std::function<std::vector<double>(double)> weights;
    };
    const std::vector<Curve> curves = {
        {"two2_case1", false, [](double p) { return std::vector<double>{0.0, p}; }},
        {"two2_case2", false, [](double p) { return std::vector<double>{1.0 - p, p}; }},
        {"f1_case1", true, [](double p) { return std::vector<double>{0.0, p, p}; }},
        {"f1_case2", true, [](double p) { return std::vector<double>{1.0 - p, p, p}; }},
        {"f1_case1_half", true, [](double p) { return std::vector<double>{0.0, p / 2, p / 2}; }},
        {"f1_case2_half", true,
         [](double p) { return std::vector<double>{1.0 - p, p / 2, p / 2}; }},
    };

    const int points = static_cast<int>(std::lround(1.0 / opt.step));
    std::ostringstream csv;
    csv << "curve,p,value_bits,feasible\n";
    for (const Curve& curve : curves)
        for (int k = 0; k <= points; ++k) {
            const double p = std::min(1.0, k * opt.step);
            const ReducedModel model =
                reduced_model(curve.three ? f1_factors : two_factors, curve.weights(p), n);
            csv << curve.name << ',' << fmt17(p) << ',';
            if (!model.feasible) {
                csv << "nan,0\n";
                continue;
            }
            const double sa = entropy_bits(model.one);
            const double sab = entropy_bits(model.two);
            csv << fmt17(2.0 * sa - sab) << ",1\n";
        }
    if (!write_output(g.out, csv.str()))
        return emit_error(GlobalOptions{}, "cannot write output: " + g.out);
    return 0;
}

int analyze_entropy(const GlobalOptions& g, const AnalyzeOptions& opt) {
    const int n = opt.n > 0 ? opt.n : 4;
    const double phi = opt.phi > 0.0 ? opt.phi : kPi / 3;
    if (n < 3 || n > 6)
        return emit_error(g, "entropy comparison supports 3 <= n <= 6");
    if (opt.trials < 1) return emit_error(g, "--trials must be >= 1");

    const DirectedGraph topo2 = maximal_two_qubit(n);
    const InteractionTopology topo31{star_f1(n)};
    const InteractionTopology topo32{star_f2(n)};
    std::vector<char> ok1(opt.trials), ok2(opt.trials);
    parallel_for(opt.trials, g.threads, [&](int k) {
        const DensityOperator rho0 = random_density(n, g.seed + static_cast<std::uint64_t>(k));
        ok1[k] = entropy_inequality_check(rho0, n, phi, topo2, topo31, GateFamily::f1);
        ok2[k] = entropy_inequality_check(rho0, n, phi, topo2, topo32, GateFamily::f2);
    });
    const int pass1 = static_cast<int>(std::count(ok1.begin(), ok1.end(), 1));
    const int pass2 = static_cast<int>(std::count(ok2.begin(), ok2.end(), 1));
    json j;
    j["n"] = n;
    j["phi"] = phi;
    j["trials"] = opt.trials;
    j["one_control_pass"] = pass1;
    j["two_control_pass"] = pass2;
    j["all_pass"] = pass1 == opt.trials && pass2 == opt.trials;
    if (!write_output(g.out, j.dump(2)))
        return emit_error(GlobalOptions{}, "cannot write output: " + g.out);
    return j["all_pass"].get<bool>() ? 0 : 1;
}

int analyze_pihalf(const GlobalOptions& g, const AnalyzeOptions& opt) {
    const int n = opt.n > 0 ? opt.n : 4;
    if (n < 4 || n > 8)
        return emit_error(g, "the three-projector asymptote comparison supports 4 <= n <= 8");
    const DensityOperator rho0 = random_density(n, g.seed);
    const DensityOperator direct = pi_half_asymptote(n, rho0);
    const AttractorSpace cf = closed_form_attractor_space(GateFamily::f1, n, kPi / 2,
                                                          InteractionTopology{star_f1(n)});
    const DensityOperator via_attractors = asymptotic_state(cf, rho0);
    const double dist = hs_distance(direct, via_attractors);
    const auto pops = parity_populations(direct, n);
    json j;
    j["n"] = n;
    j["seed"] = g.seed;
    j["distance"] = dist;
    j["tol"] = 1e-10;
    j["pass"] = dist <= 1e-10;
    j["parity_populations"] = {{"even", pops[0]}, {"odd", pops[1]}};
    if (!write_output(g.out, j.dump(2)))
        return emit_error(GlobalOptions{}, "cannot write output: " + g.out);
    return dist <= 1e-10 ? 0 : 1;
}

}  // namespace

int cmd_analyze(const GlobalOptions& g, const AnalyzeOptions& opt) {
    try {
        if (opt.task == "bloch") return analyze_bloch(g, opt);
        if (opt.task == "correlation") return analyze_correlation(g, opt);
        if (opt.task == "entropy") return analyze_entropy(g, opt);
        if (opt.task == "pihalf") return analyze_pihalf(g, opt);
        return emit_error(g, "unknown analyze task '" + opt.task +
                                 "' (expected bloch, correlation, entropy, or pihalf)");
    } catch (const std::exception& e) {
        return emit_error(g, e.what());
    }
}

}  // namespace qnet

// CLI11 lives below so the command implementations above stay parser-agnostic.
#include <CLI11.hpp>

namespace qnet {

int run_cli(int argc, char** argv) {
    CLI::App app{"qubit-network simulator: random controlled-unitary interactions, "
                 "attractor spaces, asymptotic states, and verification batteries"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--spec", g.spec_path, "network spec JSON file");
    app.add_option("--seed", g.seed, "base seed for every random draw");
    app.add_option("--tol", g.tol, "containment/verdict tolerance")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "output path (default: stdout)");
    app.add_option("--threads", g.threads, "worker cap for ensemble loops")
        ->check(CLI::Range(1, 256));
    app.add_flag("--force", g.force, "lift the register-size guards");

    SimulateOptions sim;
    CLI::App* c_sim = app.add_subcommand(
        "simulate", "iterate the channel; CSV of per-step distances to a reference");
    c_sim->fallthrough();
    c_sim->add_option("--ref-spec", sim.ref_spec_path,
                      "spec of the reference channel (default: the main spec)");
    c_sim->add_option("--ref-mode", sim.ref_mode,
                      "asymptote: distance to the reference channel's asymptotic state; "
                      "coevolve: distance between the two evolving states")
        ->check(CLI::IsMember({"asymptote", "coevolve"}));
    c_sim->add_option("--ensemble", sim.ensemble,
                      "number of random initial states (seeds seed+0..seed+K-1)")
        ->check(CLI::PositiveNumber);
    c_sim->add_option("--rho0", sim.rho0,
                      "single initial state: random:<seed> | file:<path> | basis:<bits>");
    c_sim->add_option("--steps", sim.steps, "iterations (0 = just the initial distance)")
        ->check(CLI::NonNegativeNumber);
    c_sim->add_option("--state-out", sim.state_out,
                      "write the final evolved state as JSON (single-state runs)");

    AttractorOptions atr;
    bool full_spectrum = false;
    CLI::App* c_atr = app.add_subcommand(
        "attractors", "attractor-space report: dimensions, residuals, containment");
    c_atr->fallthrough();
    c_atr->add_option("--mode", atr.mode, "numeric | closed-form | both")
        ->check(CLI::IsMember({"numeric", "closed-form", "both"}));
    c_atr->add_flag("--full-spectrum", full_spectrum,
                    "scan every superoperator eigenvalue for unit-circle members");

    VerifyCliOptions ver;
    CLI::App* c_ver = app.add_subcommand("verify", "run a verification battery, JSON verdicts");
    c_ver->fallthrough();
    c_ver->add_option("suite", ver.suite,
                      "theorem1 | theorem2 | simultaneous | consensus | entropy | base | "
                      "convergence | oracle | all")
        ->required();
    c_ver->add_option("--n", ver.ns, "register sizes (comma list)")->delimiter(',');
    std::vector<std::string> phi_tokens;
    c_ver->add_option("--phi", phi_tokens,
                      "interaction angles (comma list; radians or pi/2, pi/3, pi/4, pi/6)")
        ->delimiter(',');

    AnalyzeOptions ana;
    std::string ana_phi;
    CLI::App* c_ana =
        app.add_subcommand("analyze", "asymptotic-state diagnostics (JSON or CSV)");
    c_ana->fallthrough();
    c_ana->add_option("task", ana.task, "bloch | correlation | entropy | pihalf")->required();
    c_ana->add_option("--p0", ana.p0, "weight of the all-zeros product state");
    c_ana->add_option("--pplus", ana.p_plus, "weight of the plus product state");
    c_ana->add_option("--pminus", ana.p_minus, "weight of the minus product state");
    c_ana->add_option("--phi", ana_phi, "interaction angle (radians or pi/2, pi/3, pi/4, pi/6)");
    c_ana->add_option("--n", ana.n, "register size");
    c_ana->add_option("--step", ana.step, "sweep step for the correlation task");
    c_ana->add_option("--trials", ana.trials, "random states for the entropy task");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // normalize: --help/--version exit cleanly, every usage error is 2
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_sim->parsed()) return cmd_simulate(g, sim);
        if (c_atr->parsed()) {
            atr.full_spectrum = full_spectrum;
            return cmd_attractors(g, atr);
        }
        if (c_ver->parsed()) {
            for (const std::string& t : phi_tokens) ver.phis.push_back(parse_phi_token(t));
            return cmd_verify(g, ver);
        }
        if (c_ana->parsed()) {
            if (!ana_phi.empty()) ana.phi = parse_phi_token(ana_phi);
            return cmd_analyze(g, ana);
        }
    } catch (const std::exception& e) {
        return emit_error(g, e.what());
    }
    return 2;
}

}  // namespace qnet
