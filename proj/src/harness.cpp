#include "ksync/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ksync {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr Condition kAllConditions[] = {Condition::theorem1,
                                        Condition::lp_theorem2, Condition::c3,
                                        Condition::c5, Condition::c28};

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<double> sample_phases(SplitMix64& rng, int n, double lo, double hi) {
    std::vector<double> phi(n);
    for (double& p : phi) p = rng.uniform(lo, hi);
    return phi;
}

}  // namespace

ExperimentConfig ExperimentConfig::experiment1_defaults() {
    ExperimentConfig cfg;
    cfg.samples = 100000;
    cfg.n_min = 5;
    cfg.n_max = 10;
    return cfg;
}

ExperimentConfig ExperimentConfig::experiment2_defaults() {
    ExperimentConfig cfg;
    cfg.graphs_per_n = 1000;
    cfg.n_min = 5;
    cfg.n_max = 9;
    return cfg;
}

double ExperimentConfig::phase_interval_lo() const { return phase_lo; }
double ExperimentConfig::phase_interval_hi() const {
    return (phase_lo == 0.0 && phase_hi == 0.0) ? kPi : phase_hi;
}

ExperimentResult experiment1(const ExperimentConfig& cfg) {
    if (cfg.samples < 1)
        throw std::invalid_argument("experiment1: samples must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const double lo = cfg.phase_interval_lo();
    const double hi = cfg.phase_interval_hi();

    ExperimentResult result;
    result.config = cfg;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        long accepted[5] = {0, 0, 0, 0, 0};
        for (int idx = 0; idx < cfg.samples; ++idx) {
            SplitMix64 rng(stream_seed(cfg.seed, static_cast<std::uint64_t>(n),
                                       static_cast<std::uint64_t>(idx)));
            const PhaseState state =
                mean_zero_shift(sample_phases(rng, n, lo, hi));
            for (int c = 0; c < 5; ++c)
                if (check_phase_constraints(kAllConditions[c], state))
                    ++accepted[c];
        }
        for (int c = 0; c < 5; ++c) {
            ExperimentRecord rec;
            rec.n = n;
            rec.condition = kAllConditions[c];
            rec.accepted = accepted[c];
            rec.total = cfg.samples;
            rec.value = static_cast<double>(accepted[c]) / cfg.samples;
            rec.log10_value = std::log10(rec.value);
            result.records.push_back(rec);
        }
    }
    result.wall_seconds = elapsed_since(t0);
    return result;
}

ExperimentResult experiment2(const ExperimentConfig& cfg) {
    if (cfg.graphs_per_n < 1)
        throw std::invalid_argument("experiment2: graphs_per_n must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const double lo = cfg.phase_interval_lo();
    const double hi = cfg.phase_interval_hi();

    ExperimentResult result;
    result.config = cfg;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        double sums[5] = {0, 0, 0, 0, 0};
        long counts[5] = {0, 0, 0, 0, 0};
        for (int idx = 0; idx < cfg.graphs_per_n; ++idx) {
            SplitMix64 rng(stream_seed(cfg.seed, static_cast<std::uint64_t>(n),
                                       static_cast<std::uint64_t>(idx)));
            const Graph g = random_diameter2_graph(n, rng);
            const PhaseState init =
                mean_zero_shift(sample_phases(rng, n, lo, hi));
            std::vector<double> omega(n);
            for (double& w : omega) w = rng.uniform(cfg.freq_lo, cfg.freq_hi);
            const KuramotoSystem sys(g, omega, 0.0);
            const double d0 = phase_spread(init);

            const BoundReport t1 = bound_theorem1(sys, d0);
            if (!t1.feasible)
                throw std::logic_error(
                    "experiment2: theorem1 infeasible on a diameter-2 graph");
            if (t1.phase_constraints_ok) {
                sums[0] += t1.bound;
                ++counts[0];
            }

            if (check_phase_constraints(Condition::lp_theorem2, init)) {
                const CouplingLP lp =
                    generate_constraints(sys, std::max(kPi / 2.0, d0));
                const LPSolution sol = solve_lp(lp);
                if (sol.status != LPSolution::Status::optimal)
                    throw std::logic_error(
                        "experiment2: LP not optimal on a diameter-2 graph");
                sums[1] += sol.objective / static_cast<double>(g.edge_count());
                ++counts[1];
            }

            const BoundReport c3 = bound_c3(sys, init);
            if (c3.phase_constraints_ok && c3.feasible) {
                sums[2] += c3.bound;
                ++counts[2];
            }
            const BoundReport c5 = bound_c5(sys, init);
            if (c5.phase_constraints_ok && c5.feasible) {
                sums[3] += c5.bound;
                ++counts[3];
            }
            const BoundReport c28 = bound_c28(sys, init);
            if (c28.phase_constraints_ok && c28.feasible) {
                sums[4] += c28.bound;
                ++counts[4];
            }
        }
        for (int c = 0; c < 5; ++c) {
            ExperimentRecord rec;
            rec.n = n;
            rec.condition = kAllConditions[c];
            rec.accepted = counts[c];
            rec.total = cfg.graphs_per_n;
            rec.value = counts[c] > 0
                            ? sums[c] / static_cast<double>(counts[c])
                            : std::numeric_limits<double>::quiet_NaN();
            rec.log10_value = std::log10(rec.value);
            result.records.push_back(rec);
        }
    }
    result.wall_seconds = elapsed_since(t0);
    return result;
}

void write_experiment_csv(std::ostream& out, const ExperimentResult& result) {
    out << "n,condition,value\n";
    char buf[32];
    for (const auto& rec : result.records) {
        std::snprintf(buf, sizeof buf, "%.17g", rec.value);
        out << rec.n << ',' << condition_name(rec.condition) << ',' << buf
            << '\n';
    }
}

KuramotoSystem example1_system(double eps) {
    if (!(eps > 0.0 && eps < 2.0))
        throw std::invalid_argument("example1: eps must lie in (0, 2)");
    const Graph star(3, {{0, 1}, {0, 2}});
    const std::vector<double> omega{2.0 - eps, -1.0 + eps / 2.0,
                                    -1.0 + eps / 2.0};
    return KuramotoSystem(star, omega, 3.0);
}

KuramotoSystem example2_system() {
    const Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    return KuramotoSystem(g, {-0.1, 0.0, 0.3, -0.2}, 0.0);
}

Example1Report run_example1(double eps) {
    Example1Report rep;
    rep.eps = eps;
    const KuramotoSystem sys = example1_system(eps);

    const double a = std::asin(1.0 - eps / 2.0);
    rep.equilibrium = {2.0 / 3.0 * a, -a / 3.0, -a / 3.0};
    const auto v_eq = rhs(sys, {rep.equilibrium, 0.0});
    rep.equilibrium_rhs_norm = 0.0;
    for (double v : v_eq)
        rep.equilibrium_rhs_norm = std::max(rep.equilibrium_rhs_norm, std::abs(v));
    rep.equilibrium_ok = rep.equilibrium_rhs_norm < 1e-12;

    SimConfig cfg;
    cfg.t_max = 50.0;
    rep.trajectory = simulate(sys, mean_zero_shift(std::vector<double>{
                                       0.0, kPi / 2.0, -kPi / 2.0}),
                              cfg);
    rep.synchronized = rep.trajectory.synchronized;
    const auto& last = rep.trajectory.samples.back();
    const auto [vlo, vhi] =
        std::minmax_element(last.velocity.begin(), last.velocity.end());
    rep.final_velocity_spread = *vhi - *vlo;
    rep.v_initial = rep.trajectory.samples.front().potential;
    rep.v_final = last.potential;
    rep.v_dropped = rep.v_final < rep.v_initial - 1.0;
    rep.v_monotone = true;
    for (std::size_t i = 1; i < rep.trajectory.samples.size(); ++i)
        if (rep.trajectory.samples[i].potential >
            rep.trajectory.samples[i - 1].potential + 1e-8)
            rep.v_monotone = false;

    // Local stability probe: a small mean-zero kick off the equilibrium
    // must relax back (synchronize).
    std::vector<double> near = rep.equilibrium;
    near[0] += 1e-3;
    near[1] -= 5e-4;
    near[2] -= 5e-4;
    SimConfig cfg2;
    cfg2.t_max = 50.0;
    const Trajectory perturbed = simulate(sys, mean_zero_shift(near), cfg2);
    rep.perturbed_synchronized = perturbed.synchronized;

    rep.ok = rep.equilibrium_ok && !rep.synchronized &&
             rep.final_velocity_spread > 0.1 && rep.v_dropped &&
             rep.v_monotone && rep.perturbed_synchronized;
    return rep;
}

Example2Report run_example2(std::uint64_t seed, long verify_trials) {
    Example2Report rep;
    const KuramotoSystem sys = example2_system();
    const PMatrix p = p_matrix(sys.graph());
    rep.p_values = {p(0, 1), p(0, 2), p(0, 3), p(1, 2), p(1, 3), p(2, 3)};

    const BoundReport t1 = bound_theorem1(sys);
    rep.equal_k = t1.bound;
    rep.equal_sum = t1.bound * sys.graph().edge_count();
    rep.binding_i = static_cast<int>(t1.details.at("binding_i"));
    rep.binding_j = static_cast<int>(t1.details.at("binding_j"));

    rep.lp = generate_constraints(sys, kPi / 2.0);
    rep.lp_constraints = rep.lp.constraints.size();
    const LPSolution sol = solve_lp(rep.lp);
    if (sol.status != LPSolution::Status::optimal)
        throw std::logic_error("example2: LP must be solvable");
    rep.lp_objective = sol.objective;
    rep.lp_couplings = sol.couplings;

    rep.worst_residual = 0.0;
    for (const auto& cons : rep.lp.constraints) {
        double lhs = 0.0;
        for (std::size_t e = 0; e < cons.coeffs.size(); ++e)
            lhs += cons.coeffs[e] * sol.couplings[e];
        rep.worst_residual = std::min(rep.worst_residual, lhs - cons.rhs);
    }

    SplitMix64 rng(stream_seed(seed, 2, 0));
    rep.verification = verify_solution(sys, sol, kPi / 2.0, verify_trials, rng);

    rep.ok = std::abs(rep.equal_k - 2.0) < 1e-12 &&
             std::abs(rep.equal_sum - 8.0) < 1e-12 &&
             rep.lp_constraints == 11 &&
             std::abs(rep.lp_objective - 5.0) < 1e-8 &&
             rep.worst_residual >= -1e-8 && rep.verification.ok;
    return rep;
}

}  // namespace ksync
