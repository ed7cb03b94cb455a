#include "ksync/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ksync {

namespace {

constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-12;
constexpr double kFeasTol = 1e-7;

class Tableau {
public:
    Tableau(const std::vector<std::vector<double>>& a,
            const std::vector<double>& b, int nv)
        : m_(static_cast<int>(a.size())), ncols_(nv + m_), nv_(nv) {
        t_.assign(static_cast<std::size_t>(m_) * (ncols_ + 1), 0.0);
        basis_.resize(m_);
        in_basis_.assign(ncols_, false);
        for (int i = 0; i < m_; ++i) {
            const double sign = b[i] < 0.0 ? -1.0 : 1.0;
            for (int j = 0; j < nv_; ++j) at(i, j) = sign * a[i][j];
            at(i, nv_ + i) = -sign;  // surplus
            at(i, ncols_) = sign * b[i];
            basis_[i] = ncols_ + i;  // artificial marker, column not stored
        }
    }

    double& at(int i, int j) {
        return t_[static_cast<std::size_t>(i) * (ncols_ + 1) + j];
    }
    double rhs(int i) { return at(i, ncols_); }

    int rows() const { return m_; }
    int cols() const { return ncols_; }
    bool artificial_basic(int i) const { return basis_[i] >= ncols_; }

    void pivot(int r, int e, std::vector<double>& z) {
        const double piv = at(r, e);
        for (int j = 0; j <= ncols_; ++j) at(r, j) /= piv;
        at(r, e) = 1.0;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            const double f = at(i, e);
            if (f == 0.0) continue;
            for (int j = 0; j <= ncols_; ++j) at(i, j) -= f * at(r, j);
            at(i, e) = 0.0;
        }
        const double zf = z[e];
        if (zf != 0.0) {
            for (int j = 0; j <= ncols_; ++j) z[j] -= zf * at(r, j);
            z[e] = 0.0;
        }
        if (basis_[r] < ncols_) in_basis_[basis_[r]] = false;
        basis_[r] = e;
        in_basis_[e] = true;
    }

    /// Bland iteration loop on the given reduced-cost row. Returns false on
    /// an unbounded direction.
    bool iterate(std::vector<double>& z, int& iterations, int cap) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols_; ++j) {
                if (in_basis_[j]) continue;
                if (z[j] < -kReducedCostTol) { enter = j; break; }
            }
            if (enter < 0) return true;

            int leave = -1;
            double best_ratio = 0.0;
            double best_pivot = 0.0;
            for (int i = 0; i < m_; ++i) {
                const double coef = at(i, enter);
                if (coef > kPivotTol) {
                    const double ratio = rhs(i) / coef;
                    if (leave < 0 || ratio < best_ratio - 1e-12 ||
                        (std::abs(ratio - best_ratio) <= 1e-12 &&
                         basis_[i] < basis_[leave])) {
                        leave = i;
                        best_ratio = ratio;
                        best_pivot = coef;
                    }
                } else if (coef > 0.0) {
                    best_pivot = std::max(best_pivot, coef);
                }
            }
            if (leave < 0) {
                if (best_pivot > 0.0)
                    throw std::runtime_error(
                        "simplex: numerical breakdown, best pivot " +
                        std::to_string(best_pivot) + " below tolerance");
                return false;  // genuine unbounded direction
            }
            pivot(leave, enter, z);
            if (++iterations > cap)
                throw std::runtime_error("simplex: iteration cap exceeded");
        }
    }

    void drop_row(int r) {
        if (basis_[r] < ncols_) in_basis_[basis_[r]] = false;
        const int last = m_ - 1;
        if (r != last) {
            for (int j = 0; j <= ncols_; ++j) at(r, j) = at(last, j);
            basis_[r] = basis_[last];
        }
        basis_.pop_back();
        t_.resize(static_cast<std::size_t>(last) * (ncols_ + 1));
        m_ = last;
    }

    int basis(int i) const { return basis_[i]; }

private:
    int m_;
    int ncols_;
    int nv_;
    std::vector<double> t_;
    std::vector<int> basis_;
    std::vector<bool> in_basis_;
};

}  // namespace

SimplexResult simplex_min(const std::vector<std::vector<double>>& a,
                          const std::vector<double>& b,
                          const std::vector<double>& c) {
    const int m = static_cast<int>(a.size());
    const int nv = static_cast<int>(c.size());
    if (static_cast<int>(b.size()) != m)
        throw std::invalid_argument("simplex_min: |b| != rows of A");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != nv)
            throw std::invalid_argument("simplex_min: ragged constraint matrix");

    SimplexResult res;
    res.x.assign(nv, 0.0);
    if (m == 0) return res;

    Tableau t(a, b, nv);
    const int cap = 20 * (m + t.cols()) + 1000;

    // Phase one: minimize the artificial total. Reduced costs of the
    // non-artificial columns are the negated column sums while every basic
    // variable is artificial.
    std::vector<double> z(t.cols() + 1, 0.0);
    for (int j = 0; j <= t.cols(); ++j) {
        double s = 0.0;
        for (int i = 0; i < t.rows(); ++i) s += t.at(i, j);
        z[j] = -s;
    }
    if (!t.iterate(z, res.iterations, cap))
        throw std::runtime_error("simplex: unbounded phase-one objective");
    if (-z[t.cols()] > kFeasTol) {
        res.status = SimplexResult::Status::infeasible;
        return res;
    }

    // Drive leftover zero-level artificials out of the basis; rows with no
    // usable pivot are redundant and dropped.
    for (int i = 0; i < t.rows();) {
        if (!t.artificial_basic(i)) { ++i; continue; }
        int col = -1;
        for (int j = 0; j < t.cols(); ++j) {
            if (std::abs(t.at(i, j)) > 1e-9) { col = j; break; }
        }
        if (col >= 0) {
            t.pivot(i, col, z);
            ++i;
        } else {
            t.drop_row(i);
        }
    }

    // Phase two: the real objective (surplus columns cost nothing).
    std::fill(z.begin(), z.end(), 0.0);
    for (int j = 0; j < nv; ++j) z[j] = c[j];
    for (int i = 0; i < t.rows(); ++i) {
        const int bi = t.basis(i);
        const double cost = bi < nv ? c[bi] : 0.0;
        if (cost == 0.0) continue;
        for (int j = 0; j <= t.cols(); ++j) z[j] -= cost * t.at(i, j);
    }
    for (int i = 0; i < t.rows(); ++i)
        if (t.basis(i) < t.cols()) z[t.basis(i)] = 0.0;

    if (!t.iterate(z, res.iterations, cap)) {
        res.status = SimplexResult::Status::unbounded;
        return res;
    }

    for (int i = 0; i < t.rows(); ++i)
        if (t.basis(i) < nv) res.x[t.basis(i)] = std::max(0.0, t.rhs(i));
    double obj = 0.0;
    for (int j = 0; j < nv; ++j) obj += c[j] * res.x[j];
    res.objective = obj;
    return res;
}

}  // namespace ksync
