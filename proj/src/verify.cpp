#include "qnet/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>
#include <tuple>
#include <variant>

#include "qnet/analysis.hpp"
#include "qnet/attractors.hpp"
#include "qnet/decomp.hpp"
#include "qnet/kernels.hpp"
#include "qnet/ruo.hpp"

namespace qnet {

namespace {

const double kPi = std::numbers::pi;

std::string fnum(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.4g", v);
    return b;
}

std::string phi_name(double phi) {
    for (int k : {2, 3, 4, 6})
        if (std::abs(phi - kPi / k) < 1e-12) return "pi/" + std::to_string(k);
    return fnum(phi);
}

// Run fn(0..count-1); results must be written to per-index slots so the
// aggregate is identical for any worker count.
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

AttractorSpace solve_topology(const InteractionTopology& topo, double phi) {
    return solve_attractors(from_topology(topo, phi));
}

double worst_residual(const AttractorSpace& s) {
    double w = 0.0;
    for (const auto& c : s.components) w = std::max(w, c.max_residual);
    return w;
}

bool mutual_subset(const AttractorSpace& a, const AttractorSpace& b, double tol) {
    return space_subset(a, b, tol) && space_subset(b, a, tol);
}

// residual of x after projecting onto the (orthonormal) basis
double projection_residual(const ComplexMatrix& x, const std::vector<ComplexMatrix>& basis) {
    ComplexMatrix y = x;
    for (const ComplexMatrix& e : basis) {
        const cdouble c = hs_inner(e, y);
        kernels::axpy(-c, e.data(), y.data(), y.size());
    }
    return hs_norm(y);
}

std::vector<double> default_phis(const VerifyOptions& opt, std::vector<double> fallback) {
    return opt.phis.empty() ? std::move(fallback) : opt.phis;
}

std::vector<int> clamp_ns(const VerifyOptions& opt, int lo, int hi) {
    std::vector<int> out;
    for (int n : opt.ns)
        if (n >= lo && n <= hi) out.push_back(n);
    return out;
}

}  // namespace

bool CheckBattery::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::size_t CheckBattery::failures() const {
    std::size_t k = 0;
    for (const CheckResult& c : checks)
        if (!c.pass) ++k;
    return k;
}

void CheckBattery::add(std::string name, bool pass, std::string detail) {
    checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
}

DirectedGraph random_directed(int n, Rng& rng) {
    DirectedGraph g;
    g.n = n;
    while (g.edges.empty()) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j && rng.below(2) == 0) g.edges.push_back(Edge{i, j});
    }
    return g;
}

DirectedGraph random_strongly_connected(int n, Rng& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        DirectedGraph g = random_directed(n, rng);
        if (is_strongly_connected(g)) return g;
    }
    return maximal_two_qubit(n);
}

F1Graph random_f1(int n, Rng& rng) {
    F1Graph g;
    g.n = n;
    while (g.hyperedges.empty()) {
        for (int c = 1; c <= n; ++c)
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    if (a == c || b == c) continue;
                    if (rng.below(2) == 0) g.hyperedges.push_back(make_f1_edge(c, a, b));
                }
    }
    return g;
}

F2Graph random_f2(int n, Rng& rng) {
    F2Graph g;
    g.n = n;
    while (g.hyperedges.empty()) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    if (k == i || k == j) continue;
                    if (rng.below(2) == 0) g.hyperedges.push_back(make_f2_edge(i, j, k));
                }
    }
    return g;
}

CheckBattery verify_two_qubit_base(const VerifyOptions& opt) {
    CheckBattery bat;
    bat.suite = "two_qubit_base";
    const auto phis = default_phis(opt, {kPi / 3, kPi / 2, 2.0});
    Rng rng(opt.seed);

    // two-vertex mutual-edge network: one extra attractor at -1
    DirectedGraph mutual;
    mutual.n = 2;
    mutual.edges = {Edge{1, 2}, Edge{2, 1}};
    for (double phi : phis) {
        const AttractorSpace s = solve_topology(InteractionTopology{mutual}, phi);
        std::ostringstream det;
        det << "dim(+1)=" << s.dim(1.0) << " dim(-1)=" << s.dim(-1.0)
            << " resid=" << fnum(worst_residual(s));
        bat.add("n=2 mutual phi=" + phi_name(phi),
                s.dim(1.0) == 5 && s.dim(-1.0) == 1 && worst_residual(s) <= 1e-8, det.str());
    }

    for (int n : clamp_ns(opt, 3, 4)) {
        std::vector<std::pair<std::string, DirectedGraph>> graphs;
        graphs.emplace_back("maximal", maximal_two_qubit(n));
        for (int k = 0; k < 5; ++k)
            graphs.emplace_back("random" + std::to_string(k), random_strongly_connected(n, rng));
        for (const auto& [gname, g] : graphs)
            for (double phi : phis) {
                const AttractorSpace s = solve_topology(InteractionTopology{g}, phi);
                std::ostringstream det;
                det << "dim(+1)=" << s.dim(1.0) << " dim(-1)=" << s.dim(-1.0)
                    << " resid=" << fnum(worst_residual(s));
                bat.add("n=" + std::to_string(n) + " " + gname + " phi=" + phi_name(phi),
                        s.dim(1.0) == 5 && s.dim(-1.0) == 0 && worst_residual(s) <= 1e-8,
                        det.str());
            }
    }
    return bat;
}

CheckBattery verify_theorem1(const VerifyOptions& opt) {
    CheckBattery bat;
    bat.suite = "theorem1";
    const auto phis = default_phis(opt, {kPi / 3, kPi / 2, 2.0});

    for (int n : clamp_ns(opt, 3, 4)) {
        std::vector<std::pair<std::string, F1Graph>> topos;
        topos.emplace_back("star", star_f1(n));
        topos.emplace_back("maximal", maximal_f1(n));
        for (const auto& [tname, topo] : topos)
            for (double phi : phis) {
                const bool pi_half = std::abs(phi - kPi / 2) < 1e-12;
                const std::size_t want_plus = pi_half ? 11 : 10;
                const std::size_t want_minus = (pi_half && n == 3) ? 1 : 0;
                const std::string tag =
                    "n=" + std::to_string(n) + " " + tname + " phi=" + phi_name(phi);

                const AttractorSpace num = solve_topology(InteractionTopology{topo}, phi);
                const AttractorSpace cf =
                    closed_form_attractor_space(GateFamily::f1, n, phi, InteractionTopology{topo});

                {
                    std::ostringstream det;
                    det << "numeric dim(+1)=" << num.dim(1.0) << " dim(-1)=" << num.dim(-1.0)
                        << " closed dim(+1)=" << cf.dim(1.0) << " dim(-1)=" << cf.dim(-1.0)
                        << " resid=" << fnum(worst_residual(num)) << "/"
                        << fnum(worst_residual(cf));
                    bat.add(tag + " dims",
                            num.dim(1.0) == want_plus && num.dim(-1.0) == want_minus &&
                                cf.dim(1.0) == want_plus && cf.dim(-1.0) == want_minus &&
                                worst_residual(num) <= 1e-8 && worst_residual(cf) <= 1e-8,
                            det.str());
                }
                bat.add(tag + " mutual_containment", mutual_subset(num, cf, opt.contain_tol),
                        "tol=" + fnum(opt.contain_tol));
                if (pi_half && n == 3) {
                    const auto* comp = num.component(-1.0);
                    double resid = 1.0;
                    if (comp && !comp->basis.empty())
                        resid = projection_residual(minus_one_attractor_f1_pi_half_n3(),
                                                    comp->basis);
                    bat.add(tag + " minus_one_matches", resid <= 1e-8,
                            "projection_residual=" + fnum(resid));
                }
            }
    }
    return bat;
}

CheckBattery verify_theorem2(const VerifyOptions& opt) {
    CheckBattery bat;
    bat.suite = "theorem2";
    const auto phis = default_phis(opt, {kPi / 3, kPi / 2});

    for (int n : clamp_ns(opt, 3, 4)) {
        std::vector<std::pair<std::string, F2Graph>> topos;
        topos.emplace_back("star", star_f2(n));
        topos.emplace_back("maximal", maximal_f2(n));
        if (n == 4) topos.emplace_back("sample", sample_f2_base_4());
        const std::size_t want_plus = static_cast<std::size_t>((n + 2) * (n + 2) + 1);
        for (const auto& [tname, topo] : topos)
            for (double phi : phis) {
                const std::string tag =
                    "n=" + std::to_string(n) + " " + tname + " phi=" + phi_name(phi);
                const AttractorSpace num = solve_topology(InteractionTopology{topo}, phi);
                const AttractorSpace cf =
                    closed_form_attractor_space(GateFamily::f2, n, phi, InteractionTopology{topo});
                std::ostringstream det;
                det << "numeric dim(+1)=" << num.dim(1.0) << " dim(-1)=" << num.dim(-1.0)
                    << " closed dim(+1)=" << cf.dim(1.0) << " expected=" << want_plus
                    << " resid=" << fnum(worst_residual(num)) << "/" << fnum(worst_residual(cf));
                bat.add(tag + " dims",
                        num.dim(1.0) == want_plus && num.dim(-1.0) == 0 &&
                            cf.dim(1.0) == want_plus && cf.dim(-1.0) == 0 &&
                            worst_residual(num) <= 1e-8 && worst_residual(cf) <= 1e-8,
                        det.str());
                bat.add(tag + " mutual_containment", mutual_subset(num, cf, opt.contain_tol),
                        "tol=" + fnum(opt.contain_tol));
            }
    }
    return bat;
}

CheckBattery verify_inclusions(const VerifyOptions& opt) {
    CheckBattery bat;
    bat.suite = "inclusions";
    const double phi = opt.phis.empty() ? kPi / 3 : opt.phis.front();
    Rng rng(opt.seed);

    // 20 random pairs g inside h: removing interactions can only grow the
    // attractor space
    for (int trial = 0; trial < 20; ++trial) {
        const int kind = trial % 3;
        const int n = (trial % 2 == 0) ? 3 : 4;
        InteractionTopology h, g;
        std::string kname;
        bool proper = false;
        if (kind == 0) {
            kname = "two_qubit";
            DirectedGraph hh = random_directed(n, rng);
            DirectedGraph gg;
            gg.n = n;
            while (gg.edges.empty())
                for (const Edge& e : hh.edges)
                    if (rng.below(2) == 0) gg.edges.push_back(e);
            if (gg.edges.size() == hh.edges.size() && gg.edges.size() > 1)
                gg.edges.pop_back();
            proper = is_subgraph(gg, hh);
            h = hh;
            g = gg;
        } else if (kind == 1) {
            kname = "f1";
            F1Graph hh = random_f1(n, rng);
            F1Graph gg;
            gg.n = n;
            while (gg.hyperedges.empty())
                for (const F1Hyperedge& e : hh.hyperedges)
                    if (rng.below(2) == 0) gg.hyperedges.push_back(e);
            if (gg.hyperedges.size() == hh.hyperedges.size() && gg.hyperedges.size() > 1)
                gg.hyperedges.pop_back();
            proper = is_subgraph(gg, hh);
            h = hh;
            g = gg;
        } else {
            kname = "f2";
            F2Graph hh = random_f2(n, rng);
            F2Graph gg;
            gg.n = n;
            while (gg.hyperedges.empty())
                for (const F2Hyperedge& e : hh.hyperedges)
                    if (rng.below(2) == 0) gg.hyperedges.push_back(e);
            if (gg.hyperedges.size() == hh.hyperedges.size() && gg.hyperedges.size() > 1)
                gg.hyperedges.pop_back();
            proper = is_subgraph(gg, hh);
            h = hh;
            g = gg;
        }
        const AttractorSpace ah = solve_topology(h, phi);
        const AttractorSpace ag = solve_topology(g, phi);
        std::ostringstream det;
        det << "dim_h=" << ah.total_dim() << " dim_g=" << ag.total_dim();
        bat.add("monotone " + kname + " n=" + std::to_string(n) + " trial=" +
                    std::to_string(trial),
                proper && space_subset(ah, ag, opt.contain_tol), det.str());
    }

    // mixture and dominance laws on base graphs
    for (int n : clamp_ns(opt, 3, 4)) {
        const RandomUnitaryOperation r2 =
            from_topology(InteractionTopology{maximal_two_qubit(n)}, phi);
        const RandomUnitaryOperation r31 = from_topology(InteractionTopology{star_f1(n)}, phi);
        const RandomUnitaryOperation r32 = from_topology(InteractionTopology{star_f2(n)}, phi);
        const RandomUnitaryOperation sim = mix({{r2, 0.4}, {r31, 0.3}, {r32, 0.3}});

        const AttractorSpace a2 = solve_attractors(r2);
        const AttractorSpace a31 = solve_attractors(r31);
        const AttractorSpace a32 = solve_attractors(r32);
        const AttractorSpace asim = solve_attractors(sim);
        const std::string tag = "n=" + std::to_string(n);

        {
            std::ostringstream det;
            det << "dim(sim)=" << asim.total_dim() << " dim(2q)=" << a2.total_dim();
            bat.add(tag + " mixture_equals_two_qubit", mutual_subset(asim, a2, opt.contain_tol),
                    det.str());
        }
        {
            const AttractorSpace inter = space_intersection(a31, a32, opt.contain_tol);
            std::ostringstream det;
            det << "dim(f1^f2)=" << inter.total_dim() << " dim(2q)=" << a2.total_dim();
            bat.add(tag + " f1_intersect_f2_equals_two_qubit",
                    mutual_subset(inter, a2, opt.contain_tol), det.str());
        }
        bat.add(tag + " two_qubit_inside_f1", space_subset(a2, a31, opt.contain_tol));
        bat.add(tag + " two_qubit_inside_f2", space_subset(a2, a32, opt.contain_tol));
    }
    return bat;
}

CheckBattery verify_probability_independence(const VerifyOptions& opt) {
    CheckBattery bat;
    bat.suite = "probability_independence";
    const double phi = opt.phis.empty() ? kPi / 3 : opt.phis.front();
    Rng rng(opt.seed);

    auto run = [&](const std::string& name, InteractionTopology topo, std::size_t edges) {
        const AttractorSpace uniform = solve_topology(topo, phi);
        std::vector<double> probs(edges);
        double sum = 0.0;
        for (double& p : probs) {
            p = 1.0 + 0.5 * rng.uniform();
            sum += p;
        }
        for (double& p : probs) p /= sum;
        std::visit([&](auto& g) { g.probs = probs; }, topo);
        const AttractorSpace skew = solve_topology(topo, phi);
        const double angle = max_principal_angle_sin(uniform, skew);
        std::ostringstream det;
        det << "principal_angle_sin=" << fnum(angle) << " dims " << uniform.total_dim() << "/"
            << skew.total_dim();
        bat.add(name, angle < 1e-7 && uniform.total_dim() == skew.total_dim(), det.str());
    };

    run("two_qubit maximal n=3", InteractionTopology{maximal_two_qubit(3)},
        maximal_two_qubit(3).edges.size());
    run("f1 star n=3", InteractionTopology{star_f1(3)}, star_f1(3).hyperedges.size());
    run("f2 star n=3", InteractionTopology{star_f2(3)}, star_f2(3).hyperedges.size());
    return bat;
}

CheckBattery verify_convergence(const VerifyOptions& opt) {
    CheckBattery bat;
    bat.suite = "convergence";
    const double phi = opt.phis.empty() ? kPi / 3 : opt.phis.front();
    const int n = 4, states = 50, steps = 500;

    const RandomUnitaryOperation r2 = from_topology(InteractionTopology{maximal_two_qubit(n)}, phi);
    const RandomUnitaryOperation r31 = from_topology(InteractionTopology{star_f1(n)}, phi);
    const RandomUnitaryOperation r32 = from_topology(InteractionTopology{star_f2(n)}, phi);
    const RandomUnitaryOperation sim = mix({{r2, 0.4}, {r31, 0.3}, {r32, 0.3}});
    const RandomUnitaryOperation pure3 = mix({{r31, 0.5}, {r32, 0.5}});
    const AttractorSpace a2 = solve_attractors(r2);

    std::vector<double> final_coevolve(states), final_fixed(states);
    parallel_for(states, opt.threads, [&](int k) {
        const DensityOperator rho0 = random_density(n, opt.seed + 17 * k + 1);
        DensityOperator a = rho0, b = rho0;
        for (int s = 0; s < steps; ++s) {
            a = apply(sim, a);
            b = apply(r2, b);
        }
        final_coevolve[k] = hs_distance(a, b);

        const DensityOperator ref = asymptotic_state(a2, rho0);
        DensityOperator c = rho0;
        for (int s = 0; s < steps; ++s) c = apply(pure3, c);
        final_fixed[k] = hs_distance(c, ref);
    });

    const double worst_co = *std::max_element(final_coevolve.begin(), final_coevolve.end());
    const double worst_fx = *std::max_element(final_fixed.begin(), final_fixed.end());
    bat.add("mixed_tracks_two_qubit", worst_co < 1e-6,
            "worst distance after " + std::to_string(steps) + " steps = " + fnum(worst_co) +
                " over " + std::to_string(states) + " states");
    bat.add("pure3_reaches_two_qubit_asymptote", worst_fx < 1e-6,
            "worst distance after " + std::to_string(steps) + " steps = " + fnum(worst_fx) +
                " over " + std::to_string(states) + " states");
    return bat;
}

CheckBattery verify_consensus(const VerifyOptions& opt) {
    CheckBattery bat;
    bat.suite = "consensus";
    const double phi = opt.phis.empty() ? kPi / 3 : opt.phis.front();

    struct Combo {
        std::string name;
        InteractionTopology topo;
    };
    for (int n : clamp_ns(opt, 3, 4)) {
        std::vector<Combo> combos = {
            {"two_qubit", InteractionTopology{maximal_two_qubit(n)}},
            {"f1", InteractionTopology{star_f1(n)}},
            {"f2", InteractionTopology{star_f2(n)}},
        };
        for (const Combo& combo : combos) {
            const RandomUnitaryOperation ruo = from_topology(combo.topo, phi);
            const AttractorSpace space = solve_attractors(ruo);

            const int states = 20;
            std::vector<double> devs(states);
            parallel_for(states, opt.threads, [&](int k) {
                const DensityOperator rho0 = random_density(n, opt.seed + 101 * k + 7);
                devs[k] = permutation_deviation(asymptotic_state(space, rho0), n);
            });
            const double worst = *std::max_element(devs.begin(), devs.end());
            bat.add("perm_invariance " + combo.name + " n=" + std::to_string(n), worst <= 1e-8,
                    "worst generator deviation = " + fnum(worst) + " over " +
                        std::to_string(states) + " states");

            bool conserved = true;
            for (int k = 0; k < 5; ++k)
                conserved = conserved &&
                            conserved_overlap_check(ruo, random_density(n, opt.seed + 13 * k + 3),
                                                    200);
            bat.add("conserved_overlap " + combo.name + " n=" + std::to_string(n), conserved,
                    "5 trajectories x 200 steps, tol 1e-10");
        }
        // the mixed channel conserves the overlap as well
        const RandomUnitaryOperation sim =
            mix({{from_topology(InteractionTopology{maximal_two_qubit(n)}, phi), 0.4},
                 {from_topology(InteractionTopology{star_f1(n)}, phi), 0.3},
                 {from_topology(InteractionTopology{star_f2(n)}, phi), 0.3}});
        bool conserved = true;
        for (int k = 0; k < 5; ++k)
            conserved =
                conserved && conserved_overlap_check(sim, random_density(n, opt.seed + 29 * k), 200);
        bat.add("conserved_overlap mixed n=" + std::to_string(n), conserved,
                "5 trajectories x 200 steps, tol 1e-10");
    }

    {
        const int n = 4, states = 100;
        const DirectedGraph topo2 = maximal_two_qubit(n);
        std::vector<char> ok(states);
        parallel_for(states, opt.threads, [&](int k) {
            ok[k] = consensus_observable_check(random_density(n, opt.seed + 37 * k + 11), n, topo2);
        });
        const int passed = static_cast<int>(std::count(ok.begin(), ok.end(), 1));
        bat.add("observable_identity n=4 phi=pi/2", passed == states,
                std::to_string(passed) + "/" + std::to_string(states) + " states matched");
    }
    return bat;
}

CheckBattery verify_entropy(const VerifyOptions& opt) {
    CheckBattery bat;
    bat.suite = "entropy";
    const double phi = opt.phis.empty() ? kPi / 3 : opt.phis.front();
    const int n = 4;
    const DirectedGraph topo2 = maximal_two_qubit(n);

    for (auto [family, fname, topo] :
         {std::tuple{GateFamily::f1, "f1", InteractionTopology{star_f1(n)}},
          std::tuple{GateFamily::f2, "f2", InteractionTopology{star_f2(n)}}}) {
        const int states = 100;
        std::vector<char> ok(states);
        parallel_for(states, opt.threads, [&, family = family, topo = topo](int k) {
            ok[k] = entropy_inequality_check(random_density(n, opt.seed + 41 * k + 5), n, phi,
                                             topo2, topo, family);
        });
        const int passed = static_cast<int>(std::count(ok.begin(), ok.end(), 1));
        bat.add(std::string("entropy_inequality ") + fname, passed == states,
                std::to_string(passed) + "/" + std::to_string(states) + " states");
    }

    {
        // parity sectors are conserved at phi = pi/2
        const RandomUnitaryOperation ruo =
            from_topology(InteractionTopology{star_f1(n)}, kPi / 2);
        double worst = 0.0;
        for (int k = 0; k < 5; ++k) {
            DensityOperator rho = random_density(n, opt.seed + 53 * k + 1);
            const auto pops0 = parity_populations(rho, n);
            for (int s = 0; s < 200; ++s) {
                rho = apply(ruo, rho);
                const auto pops = parity_populations(rho, n);
                worst = std::max({worst, std::abs(pops[0] - pops0[0]),
                                  std::abs(pops[1] - pops0[1])});
            }
        }
        bat.add("parity_conservation phi=pi/2", worst <= 1e-10,
                "worst sector drift = " + fnum(worst));
    }

    {
        // the three-projector pi/2 asymptote equals the attractor-built one
        const AttractorSpace cf = closed_form_attractor_space(GateFamily::f1, n, kPi / 2,
                                                              InteractionTopology{star_f1(n)});
        double worst = 0.0;
        for (int k = 0; k < 5; ++k) {
            const DensityOperator rho0 = random_density(n, opt.seed + 61 * k + 9);
            worst = std::max(worst, hs_distance(pi_half_asymptote(n, rho0),
                                                asymptotic_state(cf, rho0)));
        }
        bat.add("pi_half_asymptote_matches", worst <= 1e-10, "worst distance = " + fnum(worst));
    }

    {
        // Bloch formula: finite-size error shrinks with the register
        const double bphi = 2.0;
        std::vector<double> errs;
        for (int m : {4, 6, 8}) {
            const DensityOperator rho0 = random_density(m, opt.seed + 100 + m);
            const OverlapParameters params = overlap_parameters(rho0, m, bphi);
            CommonEigenbasis basis;
            basis.n = m;
            basis.vectors = closed_form_vectors(GateFamily::f1, m, bphi).orthonormal;
            basis.alphas.assign(basis.vectors.size(), cdouble{1.0, 0.0});
            const DensityOperator inf = stationary_state(basis, rho0);
            const DensityOperator red = partial_trace(inf, {1}, m);
            const DensityOperator model =
                bloch_state(bloch_single_qubit_asymptote(params, bphi));
            errs.push_back(hs_distance(red, model));
        }
        std::ostringstream det;
        det << "err(n=4)=" << fnum(errs[0]) << " err(n=6)=" << fnum(errs[1])
            << " err(n=8)=" << fnum(errs[2]);
        bat.add("bloch_error_shrinks", errs[0] > errs[1] && errs[1] > errs[2] && errs[2] <= 2e-2,
                det.str());
    }

    {
        // maximal two-qubit correlation of the balanced plus/minus mixture
        const int m = 10;
        const ClosedFormVectors cf = closed_form_vectors(GateFamily::f1, m, phi);
        ComplexMatrix mixmat = dyad(cf.raw[1], cf.raw[1]);
        const ComplexMatrix dm = dyad(cf.raw[2], cf.raw[2]);
        kernels::axpy(cdouble{1.0, 0.0}, dm.data(), mixmat.data(), mixmat.size());
        mixmat *= cdouble{0.5, 0.0};
        const DensityOperator state{std::move(mixmat)};
        const double bits = index_of_correlation(state, 1, 2, m) / std::numbers::ln2;
        bat.add("correlation_maximum n=10", std::abs(bits - 1.0) <= 0.05,
                "S(A:B) = " + fnum(bits) + " bits");
    }
    return bat;
}

CheckBattery verify_oracle(const VerifyOptions& opt) {
    CheckBattery bat;
    bat.suite = "oracle";
    const double phi = opt.phis.empty() ? kPi / 3 : opt.phis.front();
    const int n = 3;

    struct Combo {
        std::string name;
        InteractionTopology topo;
    };
    const std::vector<Combo> combos = {
        {"two_qubit", InteractionTopology{maximal_two_qubit(n)}},
        {"f1", InteractionTopology{maximal_f1(n)}},
        {"f2", InteractionTopology{maximal_f2(n)}},
    };
    for (const Combo& combo : combos) {
        const RandomUnitaryOperation ruo = from_topology(combo.topo, phi);
        const AttractorSpace num = solve_attractors(ruo);
        const ComplexMatrix super = superoperator_matrix(ruo);
        const std::size_t dd = super.rows();

        std::size_t oracle_dims[2];
        int li = 0;
        for (double lambda : {1.0, -1.0}) {
            ComplexMatrix shifted = super;
            for (std::size_t i = 0; i < dd; ++i) shifted(i, i) -= lambda;
            oracle_dims[li++] = null_space(shifted, 1e-10).size();
        }

        // any unit-circle eigenvalue away from +-1 would be a surprise
        std::size_t stray = 0;
        for (cdouble ev : general_eigenvalues(super))
            if (std::abs(std::abs(ev) - 1.0) <= 1e-7 && std::abs(ev - 1.0) > 1e-7 &&
                std::abs(ev + 1.0) > 1e-7)
                ++stray;

        std::ostringstream det;
        det << "solver " << num.dim(1.0) << "/" << num.dim(-1.0) << " oracle " << oracle_dims[0]
            << "/" << oracle_dims[1] << " stray=" << stray;
        bat.add("oracle " + combo.name + " n=3",
                num.dim(1.0) == oracle_dims[0] && num.dim(-1.0) == oracle_dims[1] && stray == 0,
                det.str());
    }
    return bat;
}

}  // namespace qnet
