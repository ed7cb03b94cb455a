#include "ksync/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ksync {

namespace {

constexpr double kPisSlack = 1e-9;  // roundoff allowance at the D boundary

void validate(const KuramotoSystem& sys, const PhaseState& initial,
              const SimConfig& cfg) {
    if (static_cast<int>(initial.phases.size()) != sys.n())
        throw std::invalid_argument("simulate: initial state size mismatch");
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("simulate: dt must be > 0");
    if (!(cfg.t_max > cfg.dt))
        throw std::invalid_argument("simulate: t_max must exceed dt");
    if (!(cfg.sync_tol > 0.0))
        throw std::invalid_argument("simulate: sync_tol must be > 0");
    if (cfg.record_every < 1)
        throw std::invalid_argument("simulate: record_every must be >= 1");
    if (cfg.sync_hold < 1)
        throw std::invalid_argument("simulate: sync_hold must be >= 1");
    if (cfg.pis_bound &&
        !(*cfg.pis_bound > 0.0 && *cfg.pis_bound < std::numbers::pi))
        throw std::invalid_argument("simulate: pis_bound must lie in (0, pi)");
    const double mean =
        std::accumulate(initial.phases.begin(), initial.phases.end(), 0.0) /
        static_cast<double>(sys.n());
    if (std::abs(mean) > 1e-9)
        throw std::invalid_argument(
            "simulate: initial state is not mean-zero (apply mean_zero_shift)");
}

void recenter(std::vector<double>& phases) {
    const double mean = std::accumulate(phases.begin(), phases.end(), 0.0) /
                        static_cast<double>(phases.size());
    for (double& p : phases) p -= mean;
}

}  // namespace

Trajectory simulate(const KuramotoSystem& sys, const PhaseState& initial,
                    const SimConfig& cfg) {
    validate(sys, initial, cfg);

    const int n = sys.n();
    const long n_steps = std::lround(cfg.t_max / cfg.dt);

    Trajectory traj;
    traj.config = cfg;

    std::vector<double> phases = initial.phases;
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n), vel(n);
    int sync_streak = 0;

    auto record = [&](double t) -> bool {
        TrajectorySample s;
        s.state.phases = phases;
        s.state.time = t;
        rhs_into(sys, phases, vel);
        s.velocity = vel;
        const auto [lo, hi] = std::minmax_element(phases.begin(), phases.end());
        s.spread = *hi - *lo;
        s.potential = lyapunov(sys, s.state);

        if (cfg.pis_bound && !traj.pis_violated_at &&
            s.spread > *cfg.pis_bound + kPisSlack)
            traj.pis_violated_at = t;

        const auto [vlo, vhi] = std::minmax_element(vel.begin(), vel.end());
        if (*vhi - *vlo <= cfg.sync_tol) {
            if (++sync_streak >= cfg.sync_hold) {
                traj.synchronized = true;
                traj.sync_time = t;
            }
        } else {
            sync_streak = 0;
        }
        traj.samples.push_back(std::move(s));
        return traj.synchronized;
    };

    if (record(0.0)) return traj;

    const double h = cfg.dt;
    for (long step = 1; step <= n_steps; ++step) {
        rhs_into(sys, phases, k1);
        for (int i = 0; i < n; ++i) tmp[i] = phases[i] + 0.5 * h * k1[i];
        rhs_into(sys, tmp, k2);
        for (int i = 0; i < n; ++i) tmp[i] = phases[i] + 0.5 * h * k2[i];
        rhs_into(sys, tmp, k3);
        for (int i = 0; i < n; ++i) tmp[i] = phases[i] + h * k3[i];
        rhs_into(sys, tmp, k4);
        for (int i = 0; i < n; ++i)
            phases[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        recenter(phases);

        for (double p : phases)
            if (!std::isfinite(p))
                throw std::runtime_error(
                    "simulate: non-finite state at t = " +
                    std::to_string(static_cast<double>(step) * h));

        const double t = static_cast<double>(step) * h;
        if (step % cfg.record_every == 0 || step == n_steps) {
            if (record(t)) break;
        }
    }
    return traj;
}

double sync_frequency(const KuramotoSystem& sys, const Trajectory& traj) {
    if (!traj.synchronized)
        throw std::logic_error("sync_frequency: trajectory is not synchronized");
    const auto& v = traj.samples.back().velocity;
    for (double vi : v)
        if (std::abs(vi) > traj.config.sync_tol)
            throw std::logic_error(
                "sync_frequency: final velocities exceed sync_tol");
    return sys.mean_omega();
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    if (traj.samples.empty()) return;
    const std::size_t n = traj.samples.front().state.phases.size();
    out << "t";
    for (std::size_t i = 1; i <= n; ++i) out << ",phi_" << i;
    for (std::size_t i = 1; i <= n; ++i) out << ",dphi_" << i;
    out << ",D_t,V\n";

    char buf[32];
    auto put = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out << buf;
    };
    for (const auto& s : traj.samples) {
        put(s.state.time);
        for (double p : s.state.phases) { out << ','; put(p); }
        for (double v : s.velocity) { out << ','; put(v); }
        out << ',';
        put(s.spread);
        out << ',';
        put(s.potential);
        out << '\n';
    }
}

}  // namespace ksync
