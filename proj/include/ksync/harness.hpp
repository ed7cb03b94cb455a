#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "ksync/bounds.hpp"
#include "ksync/coupling_opt.hpp"
#include "ksync/simulator.hpp"

namespace ksync {

/// Shared configuration for the two Monte-Carlo experiments. Per-sample
/// random streams derive from (seed, n, sample index) via stream_seed(), so
/// results do not depend on evaluation order.
struct ExperimentConfig {
    std::uint64_t seed = 1;
    int samples = 100000;     // experiment 1: phase samples per n
    int graphs_per_n = 1000;  // experiment 2: instances per n
    int n_min = 5;
    int n_max = 10;
    double freq_lo = 0.0, freq_hi = 1.0;   // intrinsic frequency interval
    double phase_lo = 0.0, phase_hi = 0.0; // 0,0 means (0, pi)

    static ExperimentConfig experiment1_defaults();
    static ExperimentConfig experiment2_defaults();

    double phase_interval_lo() const;
    double phase_interval_hi() const;
};

/// One (n, condition) record. For experiment 1, value is the fraction of
/// samples whose initial phases satisfy the condition's constraints. For
/// experiment 2, value is the mean bound over the samples where the
/// condition's own phase constraints hold (NaN when none qualify), and
/// log10_value its base-10 logarithm.
struct ExperimentRecord {
    int n = 0;
    Condition condition = Condition::theorem1;
    double value = 0.0;
    double log10_value = 0.0;
    long accepted = 0;  // samples entering the statistic
    long total = 0;     // samples drawn
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<ExperimentRecord> records;
    double wall_seconds = 0.0;
};

/// Restrictiveness of the initial-phase constraints: per n, the fraction of
/// mean-zero-shifted uniform phase samples each condition accepts.
ExperimentResult experiment1(const ExperimentConfig& cfg);

/// Restrictiveness of the coupling bounds: per n, random diameter-two
/// graphs with random phases and frequencies; mean bound per condition
/// (lp_theorem2 contributes its average per-edge coupling).
ExperimentResult experiment2(const ExperimentConfig& cfg);

/// CSV with columns n,condition,value (value as in ExperimentRecord).
void write_experiment_csv(std::ostream& out, const ExperimentResult& result);

/// Three-oscillator star with deviations (2-eps, -1+eps/2, -1+eps/2) and
/// couplings K = 3: has a locally stable equilibrium, yet the run from
/// (0, pi/2, -pi/2) never synchronizes and its potential sinks without
/// bound. `ok` aggregates the checks listed per field.
struct Example1Report {
    double eps = 0.1;
    std::vector<double> equilibrium;
    double equilibrium_rhs_norm = 0.0;  // must be < 1e-12
    bool equilibrium_ok = false;
    bool synchronized = true;  // must come out false
    double final_velocity_spread = 0.0;
    double v_initial = 0.0, v_final = 0.0;
    bool v_dropped = false;        // V(end) < V(0) - 1
    bool v_monotone = false;       // non-increasing within 1e-8
    bool perturbed_synchronized = false;  // local stability probe
    bool ok = false;
    Trajectory trajectory;
};
Example1Report run_example1(double eps);

/// Four oscillators, triangle 1-2-3 plus pendant edge 1-4, deviations
/// (-0.1, 0, 0.3, -0.2): equal-coupling bound 2 (total 8) against LP
/// total 5, with the LP solution verified on random boundary
/// configurations.
struct Example2Report {
    std::vector<int> p_values;  // P_12,P_13,P_14,P_23,P_24,P_34
    double equal_k = 0.0;
    double equal_sum = 0.0;
    int binding_i = 0, binding_j = 0;  // 1-indexed
    std::size_t lp_constraints = 0;
    double lp_objective = 0.0;
    std::vector<double> lp_couplings;
    double worst_residual = 0.0;  // min over constraints of lhs - rhs
    VerificationReport verification;
    CouplingLP lp;
    bool ok = false;
};
Example2Report run_example2(std::uint64_t seed, long verify_trials = 10000);

/// The two fixed example systems.
KuramotoSystem example1_system(double eps);
KuramotoSystem example2_system();

}  // namespace ksync
