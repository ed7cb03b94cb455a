#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "ksync/model.hpp"

namespace ksync {

struct SimConfig {
    double dt = 0.01;
    double t_max = 100.0;
    /// Max pairwise velocity difference below which the system counts as
    /// frequency-synchronized.
    double sync_tol = 1e-6;
    /// Record every k-th integration step (the initial and final states are
    /// always recorded).
    int record_every = 10;
    /// When set, monitor the max pairwise phase difference D_t against this
    /// cap; must lie in (0, pi).
    std::optional<double> pis_bound;
    /// Consecutive recorded samples that must satisfy sync_tol before the
    /// run stops early; guards against transient near-zero velocity spreads.
    int sync_hold = 10;
};

struct TrajectorySample {
    PhaseState state;
    std::vector<double> velocity;  // dphi/dt at the state
    double spread = 0.0;           // D_t
    double potential = 0.0;        // V
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    bool synchronized = false;
    double sync_time = 0.0;  // meaningful when synchronized
    /// First recorded time with D_t > pis_bound + 1e-9, if monitoring.
    std::optional<double> pis_violated_at;
    SimConfig config;
};

/// Integrates the system with classical fixed-step RK4 from a mean-zero
/// initial state. The state is re-centered to the sum-zero hyperplane after
/// every step, so recorded phase means stay below 1e-9 in magnitude.
/// Stops early once the velocity spread has been <= sync_tol for sync_hold
/// consecutive recorded samples. Throws std::runtime_error if the state
/// becomes non-finite.
Trajectory simulate(const KuramotoSystem& sys, const PhaseState& initial,
                    const SimConfig& cfg);

/// Common locked frequency in the original (non-deviation) time frame: the
/// mean intrinsic frequency. Requires a synchronized trajectory whose final
/// velocities are within sync_tol of zero; throws std::logic_error otherwise.
double sync_frequency(const KuramotoSystem& sys, const Trajectory& traj);

/// CSV columns: t, phi_1..phi_n, dphi_1..dphi_n, D_t, V.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

}  // namespace ksync
