#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "idcode/errors.hpp"
#include "idcode/rational.hpp"

namespace idcode {

// Covering-style linear program:
//
//   minimize    sum of all variables
//   subject to  sum of x_i over the row's support  >=  rhs   (per row)
//               x >= 0
//
// Rows are 0/1 support sets; rhs defaults to 1. Solved exactly over the
// rationals. Internally the dual packing program (max b^T y, A^T y <= 1,
// y >= 0) is run through a dense primal simplex with Bland's rule: the slack
// basis is feasible from the start, so no phase-1 is needed, and the tableau
// has only num_vars rows. The primal point is read off the slack reduced
// costs and certified after the fact: a feasible point whose value equals a
// feasible dual value is optimal, so a passed check proves the answer.
struct LinearProgram {
    int num_vars = 0;
    std::vector<std::pair<std::vector<int>, Rational>> rows;  // (sorted support, rhs)

    void add_row(std::vector<int> support, Rational rhs = 1) {
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        for (int i : support)
            if (i < 0 || i >= num_vars) throw std::invalid_argument("variable index out of range");
        rows.push_back({std::move(support), std::move(rhs)});
    }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::optimal;
    Rational value;               // sum of the point's coordinates
    std::vector<Rational> point;  // empty unless optimal
};

inline constexpr int kLpMaxVars = 500;
inline constexpr int kLpMaxRows = 20000;
inline constexpr long long kLpMaxCells = 2'000'000;  // dense tableau guard

namespace detail {

// Maximizes b^T y subject to A^T y <= 1, y >= 0, where A is the 0/1 row
// support matrix of the covering program. Tableau rows correspond to primal
// variables, columns to y variables then slacks.
class DualSimplex {
  public:
    explicit DualSimplex(const LinearProgram& lp) : n_(lp.num_vars), m_((int)lp.rows.size()) {
        cols_ = m_ + n_;
        tab_.assign(n_, std::vector<Rational>(cols_ + 1));
        cost_.assign(cols_, Rational(0));
        basis_.assign(n_, -1);
        in_basis_.assign(cols_, false);
        for (int r = 0; r < m_; ++r) {
            for (int i : lp.rows[r].first) tab_[i][r] = 1;
            cost_[r] = lp.rows[r].second;
        }
        for (int i = 0; i < n_; ++i) {
            tab_[i][m_ + i] = 1;
            tab_[i][cols_] = 1;
            basis_[i] = m_ + i;
            in_basis_[m_ + i] = true;
        }
    }

    // Returns false when the dual is unbounded (primal infeasible).
    bool run() {
        while (true) {
            int enter = -1;
            for (int j = 0; j < cols_ && enter < 0; ++j) {
                if (in_basis_[j]) continue;
                if (reduced_cost(j) > 0) enter = j;
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < n_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rational ratio = tab_[i][cols_] / tab_[i][enter];
                if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    Rational objective() const {
        Rational v = 0;
        for (int i = 0; i < n_; ++i)
            if (cost_[basis_[i]] != 0) v += cost_[basis_[i]] * tab_[i][cols_];
        return v;
    }

    // Primal point: x_i = -reduced_cost(slack_i), nonnegative at optimality.
    std::vector<Rational> primal_point() const {
        std::vector<Rational> x(n_);
        for (int i = 0; i < n_; ++i) x[i] = -reduced_cost(m_ + i);
        return x;
    }

  private:
    Rational reduced_cost(int j) const {
        Rational d = cost_[j];
        for (int i = 0; i < n_; ++i)
            if (cost_[basis_[i]] != 0) d -= cost_[basis_[i]] * tab_[i][j];
        return d;
    }

    void pivot(int row, int col) {
        Rational inv = 1 / tab_[row][col];
        for (int j = 0; j <= cols_; ++j)
            if (tab_[row][j] != 0) tab_[row][j] *= inv;
        for (int i = 0; i < n_; ++i) {
            if (i == row || tab_[i][col] == 0) continue;
            Rational f = tab_[i][col];
            for (int j = 0; j <= cols_; ++j)
                if (tab_[row][j] != 0) tab_[i][j] -= f * tab_[row][j];
        }
        in_basis_[basis_[row]] = false;
        basis_[row] = col;
        in_basis_[col] = true;
    }

    int n_, m_, cols_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> cost_;
    std::vector<int> basis_;
    std::vector<bool> in_basis_;
};

}  // namespace detail

inline LpSolution solve_lp(const LinearProgram& lp) {
    if (lp.num_vars < 0 || lp.num_vars > kLpMaxVars)
        throw CapExceeded("solve_lp: variables > " + std::to_string(kLpMaxVars));
    if ((int)lp.rows.size() > kLpMaxRows) throw CapExceeded("solve_lp: rows > " + std::to_string(kLpMaxRows));
    long long cells = (long long)lp.num_vars * ((long long)lp.rows.size() + lp.num_vars + 1);
    if (cells > kLpMaxCells)
        throw CapExceeded("solve_lp: dense tableau would need " + std::to_string(cells) + " cells");
    for (const auto& [support, rhs] : lp.rows)
        if (support.empty() && rhs > 0) return {LpStatus::infeasible, Rational(0), {}};
    detail::DualSimplex simplex(lp);
    if (!simplex.run()) return {LpStatus::infeasible, Rational(0), {}};
    LpSolution sol{LpStatus::optimal, simplex.objective(), simplex.primal_point()};
    // Certify: the point must be feasible and match the dual value exactly;
    // by weak duality that proves optimality.
    Rational sum = 0;
    for (const Rational& x : sol.point) {
        if (x < 0) throw std::logic_error("negative coordinate in LP optimum");
        sum += x;
    }
    if (sum != sol.value) throw std::logic_error("LP value does not match its point");
    for (const auto& [support, rhs] : lp.rows) {
        Rational row = 0;
        for (int j : support) row += sol.point[j];
        if (row < rhs) throw std::logic_error("LP point violates a row");
    }
    return sol;
}

}  // namespace idcode
