#include "ksync/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ksync {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

/// Unnormalized sinc: sin(x)/x, continued with 1 at x = 0.
double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double sum(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0);
}

/// sigma(wbar): Euclidean norm of the frequency deviations.
double sigma(const KuramotoSystem& sys) {
    double s = 0.0;
    for (double w : sys.omega_bar()) s += w * w;
    return std::sqrt(s);
}

/// L* = 1 / (1 + diam(G) * |edges missing from the complete graph|).
/// Requires a connected graph.
double l_star(const Graph& g, BoundReport& r) {
    const int d = diameter(g);
    if (d == kInfiniteDiameter) {
        r.feasible = false;
        r.bound = kInf;
        r.note = "graph is disconnected";
        return 0.0;
    }
    const int missing = g.n() * (g.n() - 1) / 2 - g.edge_count();
    r.details["missing_edges"] = missing;
    const double l = 1.0 / (1.0 + static_cast<double>(d) * missing);
    r.details["L_star"] = l;
    return l;
}

}  // namespace

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::theorem1: return "theorem1";
        case Condition::lp_theorem2: return "lp_theorem2";
        case Condition::c3: return "c3";
        case Condition::c5: return "c5";
        case Condition::c28: return "c28";
    }
    return "?";
}

std::optional<Condition> condition_from_name(const std::string& name) {
    for (Condition c : {Condition::theorem1, Condition::lp_theorem2,
                        Condition::c3, Condition::c5, Condition::c28})
        if (name == condition_name(c)) return c;
    return std::nullopt;
}

BoundReport bound_theorem1(const KuramotoSystem& sys,
                           std::optional<double> d0) {
    BoundReport r{Condition::theorem1};
    const int n = sys.n();
    const auto& w = sys.omega_bar();
    const PMatrix p = p_matrix(sys.graph());

    // Pairs beyond distance two carry no structural weight (P_ij = 0); they
    // are admissible only when their deviations coincide.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (p(i, j) == 0 && w[i] != w[j]) {
                r.feasible = false;
                r.bound = kInf;
                r.details["pair_i"] = i + 1;
                r.details["pair_j"] = j + 1;
                r.note = "vertices " + std::to_string(i + 1) + " and " +
                         std::to_string(j + 1) +
                         " are at distance > 2 with distinct frequency deviations";
                if (d0) r.phase_constraints_ok = *d0 < kPi;
                return r;
            }
        }
    }

    double d = kPi / 2.0;
    if (d0) {
        r.details["D0"] = *d0;
        r.phase_constraints_ok = *d0 < kPi;
        if (r.phase_constraints_ok) d = std::max(kPi / 2.0, *d0);
    }
    r.details["D"] = d;
    const double sin_d = std::sin(d);

    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (w[i] == w[j]) continue;
            const double value =
                static_cast<double>(n) * std::abs(w[i] - w[j]) / (p(i, j) * sin_d);
            if (value > best) {
                best = value;
                r.details["binding_i"] = i + 1;
                r.details["binding_j"] = j + 1;
            }
        }
    }
    r.bound = best;
    return r;
}

BoundReport bound_c3(const KuramotoSystem& sys, const PhaseState& initial) {
    BoundReport r{Condition::c3};
    const int n = sys.n();

    const double d0 = phase_spread(initial);
    const auto bc_phi = complete_incidence_transpose_apply(initial.phases);
    const double phi_norm = norm2(bc_phi);
    r.details["D0"] = d0;
    r.details["bc_phi_norm"] = phi_norm;
    r.phase_constraints_ok = d0 < kPi && phi_norm < kPi;

    const double lambda2 = algebraic_connectivity(sys.graph());
    r.details["lambda2"] = lambda2;
    if (lambda2 <= 0.0) {
        r.feasible = false;
        r.bound = kInf;
        r.note = "graph is disconnected (lambda2 = 0)";
        return r;
    }

    const double gamma_max = std::max(kPi / 2.0, phi_norm);
    r.details["gamma_max"] = gamma_max;
    const double s = sinc(gamma_max);
    if (s <= 0.0) {
        r.feasible = false;
        r.bound = kInf;
        r.note = "sinc(gamma_max) <= 0; the bound is undefined here";
        return r;
    }

    const auto bc_w = complete_incidence_transpose_apply(sys.omega_bar());
    r.details["bc_omega_norm"] = norm2(bc_w);
    r.bound = 2.0 * n * norm2(bc_w) / (lambda2 * kPi * s);
    return r;
}

BoundReport bound_c5(const KuramotoSystem& sys, const PhaseState& initial) {
    BoundReport r{Condition::c5};

    const double d0 = phase_spread(initial);
    const double e0 = std::inner_product(initial.phases.begin(),
                                         initial.phases.end(),
                                         initial.phases.begin(), 0.0);
    const double d = std::max(kPi / 2.0, std::sqrt(2.0 * e0));
    r.details["D0"] = d0;
    r.details["E0"] = e0;
    r.details["D"] = d;
    r.phase_constraints_ok = d0 < kPi &&
                             std::abs(sum(initial.phases)) <= 1e-9 &&
                             e0 < d * d / 2.0 && d * d / 2.0 < kPi * kPi / 2.0;

    const double l = l_star(sys.graph(), r);
    if (!r.feasible) return r;

    const double sin_d = std::sin(d);
    if (sin_d <= 0.0) {
        r.feasible = false;
        r.bound = kInf;
        r.note = "D >= pi, sin D <= 0; the bound is undefined here";
        return r;
    }
    r.details["sigma"] = sigma(sys);
    r.bound = std::sqrt(2.0) * sigma(sys) / (l * sin_d);
    return r;
}

BoundReport bound_c28(const KuramotoSystem& sys, const PhaseState& initial) {
    BoundReport r{Condition::c28};
    const int n = sys.n();
    const auto& w = sys.omega_bar();
    const auto& phi = initial.phases;

    const double d0 = phase_spread(initial);
    if (!(d0 > 0.0))
        throw std::invalid_argument("bound_c28: requires D0 > 0");
    const double e0 =
        std::inner_product(phi.begin(), phi.end(), phi.begin(), 0.0);
    r.details["D0"] = d0;
    r.details["E0"] = e0;
    r.phase_constraints_ok = e0 < d0 * d0 && d0 * d0 < kPi * kPi;

    const double l = l_star(sys.graph(), r);
    if (!r.feasible) return r;

    const double sin_d = std::sin(d0);
    if (sin_d <= 0.0) {
        r.feasible = false;
        r.bound = kInf;
        r.note = "D0 >= pi, sin D0 <= 0; the bound is undefined here";
        return r;
    }

    const double expr1 = sigma(sys) * d0 / (std::sqrt(e0) * l * sin_d);
    r.details["sigma"] = sigma(sys);
    r.details["expr1"] = expr1;

    // Second expression, evaluated at the initial phases for the pair(s)
    // attaining the extreme phases. Ties: take the largest requirement.
    const double hi = *std::max_element(phi.begin(), phi.end());
    const double lo = *std::min_element(phi.begin(), phi.end());
    double expr2 = 0.0;
    for (int k = 0; k < n; ++k) {
        if (phi[k] != hi) continue;
        for (int l2 = 0; l2 < n; ++l2) {
            if (phi[l2] != lo || l2 == k) continue;
            const double num = n * std::abs(w[k] - w[l2]);
            if (num == 0.0) continue;
            double den = 0.0;
            for (int i : sys.graph().neighbors(k)) den += std::sin(phi[k] - phi[i]);
            for (int j : sys.graph().neighbors(l2)) den += std::sin(phi[j] - phi[l2]);
            if (den <= 1e-15) {
                r.feasible = false;
                r.bound = kInf;
                r.details["pair_k"] = k + 1;
                r.details["pair_l"] = l2 + 1;
                r.note = "zero sine denominator for extreme pair (" +
                         std::to_string(k + 1) + "," + std::to_string(l2 + 1) + ")";
                return r;
            }
            if (num / den > expr2) {
                expr2 = num / den;
                r.details["binding_k"] = k + 1;
                r.details["binding_l"] = l2 + 1;
            }
        }
    }
    r.details["expr2"] = expr2;
    r.bound = std::max(expr1, expr2);
    return r;
}

bool check_phase_constraints(Condition condition, const PhaseState& initial) {
    const double d0 = phase_spread(initial);
    switch (condition) {
        case Condition::theorem1:
        case Condition::lp_theorem2:
            return d0 < kPi;
        case Condition::c3:
            return d0 < kPi &&
                   norm2(complete_incidence_transpose_apply(initial.phases)) < kPi;
        case Condition::c5: {
            const double e0 = std::inner_product(initial.phases.begin(),
                                                 initial.phases.end(),
                                                 initial.phases.begin(), 0.0);
            const double d = std::max(kPi / 2.0, std::sqrt(2.0 * e0));
            return d0 < kPi && std::abs(sum(initial.phases)) <= 1e-9 &&
                   e0 < d * d / 2.0 && d * d / 2.0 < kPi * kPi / 2.0;
        }
        case Condition::c28: {
            const double e0 = std::inner_product(initial.phases.begin(),
                                                 initial.phases.end(),
                                                 initial.phases.begin(), 0.0);
            return e0 < d0 * d0 && d0 * d0 < kPi * kPi;
        }
    }
    return false;
}

}  // namespace ksync
