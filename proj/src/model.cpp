#include "ksync/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ksync {

PhaseState mean_zero_shift(std::span<const double> phases, double time) {
    PhaseState s;
    s.time = time;
    s.phases.assign(phases.begin(), phases.end());
    if (s.phases.empty()) return s;
    const double mean =
        std::accumulate(s.phases.begin(), s.phases.end(), 0.0) /
        static_cast<double>(s.phases.size());
    for (double& p : s.phases) p -= mean;
    return s;
}

double phase_spread(const PhaseState& state) {
    if (state.phases.empty())
        throw std::invalid_argument("phase_spread: empty state");
    const auto [lo, hi] =
        std::minmax_element(state.phases.begin(), state.phases.end());
    return *hi - *lo;
}

KuramotoSystem::KuramotoSystem(Graph graph, std::vector<double> omega)
    : graph_(std::move(graph)), omega_(std::move(omega)) {
    if (static_cast<int>(omega_.size()) != graph_.n())
        throw std::invalid_argument(
            "KuramotoSystem: omega length does not match vertex count");
    mean_omega_ = std::accumulate(omega_.begin(), omega_.end(), 0.0) /
                  static_cast<double>(graph_.n());
    omega_bar_.resize(omega_.size());
    for (std::size_t i = 0; i < omega_.size(); ++i)
        omega_bar_[i] = omega_[i] - mean_omega_;
    couplings_.assign(static_cast<std::size_t>(graph_.n()) * graph_.n(), 0.0);
}

void KuramotoSystem::set_coupling(int i, int j, double k) {
    couplings_[static_cast<std::size_t>(i) * n() + j] = k;
    couplings_[static_cast<std::size_t>(j) * n() + i] = k;
}

KuramotoSystem::KuramotoSystem(Graph graph, std::vector<double> omega,
                               double k_all)
    : KuramotoSystem(std::move(graph), std::move(omega)) {
    if (k_all < 0.0)
        throw std::invalid_argument("KuramotoSystem: negative coupling");
    for (const auto& [i, j] : graph_.edges()) set_coupling(i, j, k_all);
}

KuramotoSystem::KuramotoSystem(
    Graph graph, std::vector<double> omega,
    const std::vector<std::tuple<int, int, double>>& k_edges)
    : KuramotoSystem(std::move(graph), std::move(omega)) {
    std::vector<bool> covered(graph_.edges().size(), false);
    for (const auto& [i, j, k] : k_edges) {
        if (k < 0.0)
            throw std::invalid_argument("KuramotoSystem: negative coupling");
        const int idx = graph_.edge_index(i, j);
        if (idx < 0)
            throw std::invalid_argument(
                "KuramotoSystem: coupling specified on non-edge (" +
                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        if (covered[idx])
            throw std::invalid_argument(
                "KuramotoSystem: duplicate coupling for edge (" +
                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        covered[idx] = true;
        set_coupling(i, j, k);
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
        throw std::invalid_argument(
            "KuramotoSystem: per-edge couplings must cover the edge set");
}

void rhs_into(const KuramotoSystem& sys, std::span<const double> phases,
              std::span<double> out) {
    const int n = sys.n();
    const double inv_n = 1.0 / static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
        double acc = sys.omega_bar()[i];
        for (int j : sys.graph().neighbors(i))
            acc += sys.coupling(i, j) * inv_n * std::sin(phases[j] - phases[i]);
        out[i] = acc;
    }
}

std::vector<double> rhs(const KuramotoSystem& sys, const PhaseState& state) {
    if (static_cast<int>(state.phases.size()) != sys.n())
        throw std::invalid_argument("rhs: state size mismatch");
    std::vector<double> out(sys.n());
    rhs_into(sys, state.phases, out);
    return out;
}

double lyapunov(const KuramotoSystem& sys, const PhaseState& state) {
    if (static_cast<int>(state.phases.size()) != sys.n())
        throw std::invalid_argument("lyapunov: state size mismatch");
    const double inv_n = 1.0 / static_cast<double>(sys.n());
    double v = 0.0;
    for (int i = 0; i < sys.n(); ++i) v -= sys.omega_bar()[i] * state.phases[i];
    for (const auto& [i, j] : sys.graph().edges())
        v -= sys.coupling(i, j) * inv_n *
             std::cos(state.phases[i] - state.phases[j]);
    return v;
}

}  // namespace ksync
