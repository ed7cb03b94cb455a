#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksync/model.hpp"
#include "ksync/rng.hpp"
#include "ksync/simplex.hpp"

namespace ksync {

/// One linear inequality  sum_e coeffs[e] * K_e >= rhs  over the edge
/// couplings (coeffs indexed like CouplingLP::variables).
struct CouplingConstraint {
    std::vector<double> coeffs;
    double rhs = 0.0;
};

/// Where a generated constraint came from: the vertex pair (k,l) and the
/// per-common-neighbor selector delta (bit m set means neighbor
/// common_neighbors(k,l)[m] contributes K_{k,m}, clear means K_{l,m}).
struct ConstraintOrigin {
    int k = 0, l = 0;
    std::uint32_t delta = 0;
    int constraint_index = 0;  // row in CouplingLP::constraints after dedup
};

/// The per-edge coupling feasibility program: for every vertex pair with
/// distinct frequency deviations, one constraint per selector assignment
/// over its common neighbors (2^|N_kl| of them), deduplicated.
struct CouplingLP {
    std::vector<std::pair<int, int>> variables;   // edges, lexicographic
    std::vector<CouplingConstraint> constraints;  // deduplicated
    std::vector<ConstraintOrigin> origins;        // one per generated constraint
    double d = 0.0;                               // phase-difference cap
};

/// Builds the constraint set at cap D (0 < D < pi). Pairs with equal
/// deviations generate nothing (their inequalities hold for any nonnegative
/// couplings). A pair at distance > 2 with distinct deviations yields a
/// variable-free constraint with positive rhs, which the solver reports as
/// infeasible. Throws if any contributing pair has more than 20 common
/// neighbors (the constraint count would be 2^|N_kl|).
CouplingLP generate_constraints(const KuramotoSystem& sys, double d);

struct LPSolution {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::optimal;
    std::vector<double> couplings;  // indexed like CouplingLP::variables
    double objective = 0.0;
};

/// Minimizes the coupling total subject to the generated constraints.
LPSolution solve_lp(const CouplingLP& lp);

/// Minimal equal coupling satisfying every constraint family:
/// max over pairs of n*|wbar_k - wbar_l| / (P_kl sin D). Coincides with the
/// analytic theorem1 bound at the same D. +inf when a pair at distance > 2
/// has distinct deviations.
double solve_equal_coupling(const KuramotoSystem& sys, double d);

struct VerificationReport {
    bool ok = true;
    long boundary_trials = 0;
    int simulations = 0;
    // Populated on failure:
    int pair_k = 0, pair_l = 0;  // 1-indexed
    double violation = 0.0;
    std::string note;
};

/// Randomized check that a solved coupling vector keeps every boundary
/// configuration non-expanding: for each trial, a vertex pair is placed at
/// phase difference D with its common neighbors uniform in between, and the
/// drift of the pair difference must be <= 1e-9. Also runs a handful of full
/// simulations from random initial states with spread < D, requiring
/// synchronization with the spread never exceeding D.
VerificationReport verify_solution(const KuramotoSystem& sys,
                                   const LPSolution& sol, double d,
                                   long trials, SplitMix64& rng);

}  // namespace ksync
