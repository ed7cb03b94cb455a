#pragma once

#include <string>
#include <vector>

namespace ksync {

/// Outcome of a linear program
///   minimize c.x   subject to   A x >= b,  x >= 0.
struct SimplexResult {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::optimal;
    std::vector<double> x;   // primal solution when optimal
    double objective = 0.0;  // c.x when optimal
    int iterations = 0;
};

/// Dense two-phase primal simplex.
///
/// Rows are turned into equalities with surplus variables; phase one drives
/// out one artificial per row. Bland's smallest-index rule picks both the
/// entering and the leaving variable, so the method terminates on degenerate
/// problems. Artificial columns are never materialized: once an artificial
/// leaves the basis it cannot re-enter, so only its basis marker is tracked.
///
/// Throws std::runtime_error on numerical breakdown (best available pivot
/// below 1e-12) or when the iteration cap is exceeded.
SimplexResult simplex_min(const std::vector<std::vector<double>>& a,
                          const std::vector<double>& b,
                          const std::vector<double>& c);

}  // namespace ksync
