#pragma once

// Command layer behind the CLI binary. Each cmd_* function implements one
// subcommand end to end (load spec, run, write JSON/CSV to the output path or
// stdout) and returns a process exit code: 0 = success / all checks passed,
// 1 = one or more checks failed, 2 = usage, spec, or guard errors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qnet {

struct GlobalOptions {
    std::string spec_path;          // --spec
    std::uint64_t seed = 20240901;  // --seed
    double tol = 1e-7;              // --tol (containment / verdict tolerance)
    std::string out;                // --out; empty = stdout
    int threads = 1;                // --threads
    bool force = false;             // --force lifts the register-size guards
};

struct SimulateOptions {
    std::string ref_spec_path;   // --ref-spec; empty = evolve under the own spec
    std::string ref_mode = "asymptote";  // --ref-mode asymptote|coevolve
    int ensemble = 1;            // --ensemble; ignored when rho0 is given
    std::string rho0;            // --rho0 random:<seed> | file:<path> | basis:<bits>
    int steps = 100;             // --steps
    std::string state_out;       // --state-out final-state JSON (single state only)
};

struct AttractorOptions {
    std::string mode = "numeric";  // --mode numeric|closed-form|both
    bool full_spectrum = false;    // --full-spectrum dense superoperator scan
};

struct VerifyCliOptions {
    std::string suite;            // positional: theorem1|theorem2|simultaneous|
                                  // consensus|entropy|base|convergence|oracle|all
    std::vector<int> ns;          // --n (comma list); empty = battery default
    std::vector<double> phis;     // --phi (comma list); empty = battery default
};

struct AnalyzeOptions {
    std::string task;  // positional: bloch|correlation|entropy|pihalf
    double p0 = 0.0, p_plus = 0.0, p_minus = 0.0;  // bloch weights
    double phi = 0.0;  // 0 = task default
    int n = 0;         // 0 = task default
    double step = 0.01;  // correlation sweep step
    int trials = 100;    // entropy trials
};

int cmd_simulate(const GlobalOptions& g, const SimulateOptions& opt);
int cmd_attractors(const GlobalOptions& g, const AttractorOptions& opt);
int cmd_verify(const GlobalOptions& g, const VerifyCliOptions& opt);
int cmd_analyze(const GlobalOptions& g, const AnalyzeOptions& opt);

// Full argv entry point used by the binary (CLI11 parsing + dispatch).
int run_cli(int argc, char** argv);

}  // namespace qnet
