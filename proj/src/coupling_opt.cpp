#include "ksync/coupling_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "ksync/simulator.hpp"

namespace ksync {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_d(double d) {
    if (!(d > 0.0 && d < kPi))
        throw std::invalid_argument("coupling_opt: D must lie in (0, pi)");
}

}  // namespace

CouplingLP generate_constraints(const KuramotoSystem& sys, double d) {
    validate_d(d);
    const int n = sys.n();
    const Graph& g = sys.graph();
    const auto& w = sys.omega_bar();
    const double sin_d = std::sin(d);

    CouplingLP lp;
    lp.variables = g.edges();
    lp.d = d;
    const int nv = static_cast<int>(lp.variables.size());

    std::map<std::pair<std::vector<double>, double>, int> seen;

    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            const double gap = std::abs(w[k] - w[l]);
            if (gap == 0.0) continue;
            const auto common = g.common_neighbors(k, l);
            if (common.size() > 20)
                throw std::invalid_argument(
                    "generate_constraints: pair (" + std::to_string(k + 1) +
                    "," + std::to_string(l + 1) + ") has " +
                    std::to_string(common.size()) +
                    " common neighbors; 2^|N_kl| constraints would overflow");

            const int kl_edge = g.edge_index(k, l);
            const std::uint32_t combos = 1u << common.size();
            for (std::uint32_t delta = 0; delta < combos; ++delta) {
                CouplingConstraint cons;
                cons.coeffs.assign(nv, 0.0);
                cons.rhs = gap;
                if (kl_edge >= 0) cons.coeffs[kl_edge] += 2.0 * sin_d / n;
                for (std::size_t m = 0; m < common.size(); ++m) {
                    const int endpoint = (delta >> m) & 1u ? k : l;
                    cons.coeffs[g.edge_index(endpoint, common[m])] += sin_d / n;
                }

                const auto key = std::make_pair(cons.coeffs, cons.rhs);
                auto it = seen.find(key);
                int row;
                if (it == seen.end()) {
                    row = static_cast<int>(lp.constraints.size());
                    lp.constraints.push_back(std::move(cons));
                    seen.emplace(key, row);
                } else {
                    row = it->second;
                }
                lp.origins.push_back({k, l, delta, row});
            }
        }
    }
    return lp;
}

LPSolution solve_lp(const CouplingLP& lp) {
    const int nv = static_cast<int>(lp.variables.size());
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    a.reserve(lp.constraints.size());
    for (const auto& cons : lp.constraints) {
        a.push_back(cons.coeffs);
        b.push_back(cons.rhs);
    }
    const std::vector<double> cost(nv, 1.0);

    const SimplexResult res = simplex_min(a, b, cost);
    LPSolution sol;
    switch (res.status) {
        case SimplexResult::Status::optimal:
            sol.status = LPSolution::Status::optimal;
            break;
        case SimplexResult::Status::infeasible:
            sol.status = LPSolution::Status::infeasible;
            return sol;
        case SimplexResult::Status::unbounded:
            sol.status = LPSolution::Status::unbounded;
            return sol;
    }
    sol.couplings = res.x;
    sol.objective = res.objective;
    return sol;
}

double solve_equal_coupling(const KuramotoSystem& sys, double d) {
    validate_d(d);
    const int n = sys.n();
    const Graph& g = sys.graph();
    const auto& w = sys.omega_bar();
    const double sin_d = std::sin(d);
    const PMatrix p = p_matrix(g);

    double best = 0.0;
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            if (w[k] == w[l]) continue;
            if (g.common_neighbors(k, l).size() > 20)
                throw std::invalid_argument(
                    "solve_equal_coupling: pair common-neighbor overflow");
            if (p(k, l) == 0) return std::numeric_limits<double>::infinity();
            best = std::max(best,
                            n * std::abs(w[k] - w[l]) / (p(k, l) * sin_d));
        }
    }
    return best;
}

VerificationReport verify_solution(const KuramotoSystem& sys,
                                   const LPSolution& sol, double d,
                                   long trials, SplitMix64& rng) {
    if (sol.status != LPSolution::Status::optimal)
        throw std::logic_error("verify_solution: solution is not optimal");
    validate_d(d);

    const int n = sys.n();
    const Graph& g = sys.graph();
    const auto& w = sys.omega_bar();
    const double sin_d = std::sin(d);

    auto coupling = [&](int i, int j) -> double {
        const int e = g.edge_index(i, j);
        return e < 0 ? 0.0 : sol.couplings[e];
    };

    // Ordered pairs with their common-neighbor lists; trial t exercises
    // pair t mod #pairs, so every orientation is visited evenly.
    struct Pair {
        int k, l;
        std::vector<int> common;
    };
    std::vector<Pair> pairs;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            if (k != l) pairs.push_back({k, l, g.common_neighbors(k, l)});

    VerificationReport rep;
    rep.boundary_trials = trials;
    if (pairs.empty()) return rep;

    for (long t = 0; t < trials; ++t) {
        const Pair& pr = pairs[static_cast<std::size_t>(t) % pairs.size()];
        // Boundary configuration: phi_k - phi_l = D, common neighbors in
        // between. Only differences enter, so phi_l = 0, phi_k = D.
        double lhs = (w[pr.k] - w[pr.l]) -
                     2.0 * coupling(pr.k, pr.l) / n * sin_d;
        for (int m : pr.common) {
            const double x = rng.uniform(0.0, d);  // phi_m - phi_l
            lhs -= coupling(pr.k, m) / n * std::sin(d - x) +
                   coupling(pr.l, m) / n * std::sin(x);
        }
        if (lhs > 1e-9) {
            rep.ok = false;
            rep.pair_k = pr.k + 1;
            rep.pair_l = pr.l + 1;
            rep.violation = lhs;
            rep.note = "boundary drift " + std::to_string(lhs) +
                       " for pair (" + std::to_string(pr.k + 1) + "," +
                       std::to_string(pr.l + 1) + ")";
            return rep;
        }
    }

    // A few end-to-end runs: random initial states with spread below D must
    // synchronize without the spread ever exceeding D.
    std::vector<std::tuple<int, int, double>> k_edges;
    for (std::size_t e = 0; e < g.edges().size(); ++e)
        k_edges.emplace_back(g.edges()[e].first, g.edges()[e].second,
                             sol.couplings[e]);
    const KuramotoSystem verified(g, sys.omega(), k_edges);

    const int n_sims = static_cast<int>(std::clamp<long>(trials / 5000, 1, 5));
    for (int s = 0; s < n_sims; ++s) {
        std::vector<double> phi(n);
        for (double& p : phi) p = rng.uniform(0.0, d);
        const PhaseState init = mean_zero_shift(phi);

        SimConfig cfg;
        cfg.t_max = 200.0;
        cfg.pis_bound = d;
        const Trajectory traj = simulate(verified, init, cfg);
        ++rep.simulations;
        if (traj.pis_violated_at) {
            rep.ok = false;
            rep.note = "simulation " + std::to_string(s) +
                       ": spread exceeded D at t = " +
                       std::to_string(*traj.pis_violated_at);
            return rep;
        }
        if (!traj.synchronized) {
            rep.ok = false;
            rep.note = "simulation " + std::to_string(s) +
                       ": no synchronization by t = " + std::to_string(cfg.t_max);
            return rep;
        }
    }
    return rep;
}

}  // namespace ksync
