#pragma once

#include <span>
#include <tuple>
#include <vector>

#include "ksync/graph.hpp"

namespace ksync {

/// Phase vector at a point in time. Phases live on the real line, not on the
/// circle: boundedness of trajectories is the quantity under study, and the
/// potential below is not well-defined on the torus.
struct PhaseState {
    std::vector<double> phases;
    double time = 0.0;
};

/// Returns a copy with the mean subtracted from every component (the
/// canonical sum-zero representation). Pairwise differences are unchanged.
PhaseState mean_zero_shift(std::span<const double> phases, double time = 0.0);

/// Max minus min phase (D_t).
double phase_spread(const PhaseState& state);

/// Network of phase oscillators
///
///   dphi_i/dt = wbar_i + sum_{j ~ i} (K_ij / n) * sin(phi_j - phi_i),
///
/// where wbar_i = w_i - mean(w) are the frequency deviations. Deviations are
/// always recomputed from the raw frequencies at construction. Immutable.
class KuramotoSystem {
public:
    /// Equal coupling strength k_all on every edge.
    KuramotoSystem(Graph graph, std::vector<double> omega, double k_all);

    /// Per-edge couplings as (i, j, K_ij) triples, 0-indexed. The triples
    /// must cover the edge set exactly; values must be nonnegative.
    KuramotoSystem(Graph graph, std::vector<double> omega,
                   const std::vector<std::tuple<int, int, double>>& k_edges);

    int n() const { return graph_.n(); }
    const Graph& graph() const { return graph_; }
    const std::vector<double>& omega() const { return omega_; }
    const std::vector<double>& omega_bar() const { return omega_bar_; }
    double mean_omega() const { return mean_omega_; }

    double coupling(int i, int j) const {
        return couplings_[static_cast<std::size_t>(i) * n() + j];
    }

private:
    KuramotoSystem(Graph graph, std::vector<double> omega);
    void set_coupling(int i, int j, double k);

    Graph graph_;
    std::vector<double> omega_;
    std::vector<double> omega_bar_;
    double mean_omega_ = 0.0;
    std::vector<double> couplings_;  // n*n symmetric, zero off-edge
};

/// Right-hand side of the deviation-normalized dynamics at the given state.
/// The components always sum to zero (pairwise sine cancellation).
std::vector<double> rhs(const KuramotoSystem& sys, const PhaseState& state);

/// Allocation-free variant for integrator loops. out.size() == n.
void rhs_into(const KuramotoSystem& sys, std::span<const double> phases,
              std::span<double> out);

/// Potential  V(phi) = -sum_k wbar_k phi_k - sum_{ij in E, i<j} (K_ij/n) cos(phi_i - phi_j).
/// Non-increasing along trajectories; dV/dt = -sum_i (dphi_i/dt)^2.
double lyapunov(const KuramotoSystem& sys, const PhaseState& state);

}  // namespace ksync
