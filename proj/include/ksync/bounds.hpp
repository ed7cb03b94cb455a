#pragma once

#include <map>
#include <optional>
#include <string>

#include "ksync/model.hpp"

namespace ksync {

/// The five synchronization conditions under comparison. c3, c5 and c28 are
/// published conditions for arbitrary topologies; theorem1 is the analytic
/// diameter-two condition and lp_theorem2 its per-edge optimization variant.
enum class Condition { theorem1, lp_theorem2, c3, c5, c28 };

const char* condition_name(Condition c);
std::optional<Condition> condition_from_name(const std::string& name);

/// Result of evaluating one condition on one (system, initial phases) pair.
/// `bound` is the infimum sufficient coupling strength; +inf with
/// feasible == false when the condition cannot produce a finite bound
/// (disconnected graph, far pair with distinct frequencies, sin D <= 0).
/// `phase_constraints_ok` reports the condition's own requirements on the
/// initial phases, independently of the bound value.
struct BoundReport {
    Condition condition;
    double bound = 0.0;
    bool feasible = true;
    bool phase_constraints_ok = true;
    std::map<std::string, double> details;
    std::string note;
};

/// Analytic equal-coupling bound max_{i<j} n*|wbar_i - wbar_j| / (P_ij sin D)
/// with D = max(pi/2, D0) for D0 < pi, or D = pi/2 when no D0 is given.
/// Pairs with equal deviations are skipped. Applicable when the diameter is
/// <= 2, or when every pair at distance > 2 has equal deviations; otherwise
/// returns an infeasible report naming the offending pair.
BoundReport bound_theorem1(const KuramotoSystem& sys,
                           std::optional<double> d0 = std::nullopt);

/// Spectral condition: 2n*||Bc^T wbar|| / (lambda2 * pi * sinc(gamma_max)),
/// gamma_max = max(pi/2, ||Bc^T phi0||). Phase requirement: D0 < pi and
/// ||Bc^T phi0|| < pi.
BoundReport bound_c3(const KuramotoSystem& sys, const PhaseState& initial);

/// Energy condition: sqrt(2)*sigma(wbar) / (L* sin D) with
/// D = max(pi/2, sqrt(2 E0)) and L* = 1/(1 + diam(G)*|missing edges|).
/// Phase requirement: D0 < pi, sum phi0 = 0, E0 < D^2/2 < pi^2/2.
BoundReport bound_c5(const KuramotoSystem& sys, const PhaseState& initial);

/// Two-part numerical condition with D = D0 and L = L*: the larger of
/// sigma(wbar)*D / (sqrt(E0) L sin D) and, for the extreme-phase pair (k,l),
/// n*|wbar_k - wbar_l| / (sum of neighbor sine terms at the initial phases).
/// Ties for the extreme phases are resolved by taking the largest
/// requirement over all extreme pairs. Phase requirement: E0 < D0^2 < pi^2.
BoundReport bound_c28(const KuramotoSystem& sys, const PhaseState& initial);

/// The phase-constraint verdict of the given condition, without computing
/// the bound. Depends only on the (mean-zero shifted) initial phases.
bool check_phase_constraints(Condition condition, const PhaseState& initial);

}  // namespace ksync
