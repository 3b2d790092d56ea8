#include "ricci/simplex.hpp"

#include <cstddef>

namespace ricci::lp {

namespace {

// Tableau layout: rows 0..m-1 hold B^{-1}[A | I_art | b]; row m holds the
// reduced costs and, in the last column, the negated objective value.
class Tableau {
public:
    Tableau(const Problem& p)
        : m_(p.constraints.size()), n_(p.cost.size()), cols_(n_ + m_ + 1) {
        rows_.assign(m_ + 1, std::vector<Rational>(cols_, Rational(0)));
        basis_.resize(m_);
        for (size_t i = 0; i < m_; ++i) {
            if (p.constraints[i].size() != n_) {
                throw Error("simplex: ragged constraint matrix");
            }
            bool flip = p.rhs[i] < 0;  // keep rhs >= 0 for the phase-1 start
            for (size_t j = 0; j < n_; ++j) {
                rows_[i][j] = flip ? -p.constraints[i][j] : p.constraints[i][j];
            }
            rows_[i][n_ + i] = 1;
            rows_[i][cols_ - 1] = flip ? -p.rhs[i] : p.rhs[i];
            basis_[i] = n_ + i;
        }
    }

    // Phase 1: minimize the sum of artificials, starting from the
    // all-artificial basis.
    void phase1() {
        auto& z = rows_[m_];
        for (auto& c : z) c = 0;
        for (size_t i = 0; i < m_; ++i) {
            for (size_t j = 0; j < cols_; ++j) {
                z[j] -= rows_[i][j];
            }
        }
        for (size_t i = 0; i < m_; ++i) {
            z[n_ + i] = 0;  // reduced cost of a basic artificial
        }
        iterate(cols_ - 1);
        if (rows_[m_][cols_ - 1] != 0) {
            throw Error("simplex: infeasible program");
        }
        evict_artificials();
    }

    // Phase 2 on the original objective; artificial columns stay locked out.
    Rational phase2(const std::vector<Rational>& cost) {
        auto& z = rows_[m_];
        for (auto& c : z) c = 0;
        for (size_t j = 0; j < n_; ++j) z[j] = cost[j];
        for (size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) continue;  // blanked redundant row
            const Rational& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (size_t j = 0; j < cols_; ++j) {
                z[j] -= cb * rows_[i][j];
            }
        }
        iterate(n_);
        return -rows_[m_][cols_ - 1];
    }

    std::vector<Rational> extract(size_t n) const {
        std::vector<Rational> x(n, Rational(0));
        for (size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n) {
                x[basis_[i]] = rows_[i][cols_ - 1];
            }
        }
        return x;
    }

private:
    // Bland's rule: entering = lowest-index column with negative reduced
    // cost, leaving = lowest basic index among the ratio-test minima.
    void iterate(size_t allowed_cols) {
        for (;;) {
            size_t pivot_col = allowed_cols;
            for (size_t j = 0; j < allowed_cols; ++j) {
                if (rows_[m_][j] < 0) {
                    pivot_col = j;
                    break;
                }
            }
            if (pivot_col == allowed_cols) {
                return;  // optimal
            }
            size_t pivot_row = m_;
            for (size_t i = 0; i < m_; ++i) {
                if (rows_[i][pivot_col] <= 0) continue;
                if (pivot_row == m_) {
                    pivot_row = i;
                    continue;
                }
                Rational lhs = rows_[i][cols_ - 1] * rows_[pivot_row][pivot_col];
                Rational rhs = rows_[pivot_row][cols_ - 1] * rows_[i][pivot_col];
                if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[pivot_row])) {
                    pivot_row = i;
                }
            }
            if (pivot_row == m_) {
                throw Error("simplex: unbounded program");
            }
            pivot(pivot_row, pivot_col);
        }
    }

    // Drive any artificial left basic at level zero out of the basis; a
    // row with no real pivot candidate is redundant and is blanked.
    void evict_artificials() {
        for (size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            size_t col = n_;
            for (size_t j = 0; j < n_; ++j) {
                if (rows_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col == n_) {
                for (auto& c : rows_[i]) c = 0;
            } else {
                pivot(i, col);
            }
        }
    }

    void pivot(size_t row, size_t col) {
        Rational inv = rows_[row][col];
        for (auto& c : rows_[row]) c /= inv;
        for (size_t i = 0; i <= m_; ++i) {
            if (i == row || rows_[i][col] == 0) continue;
            Rational f = rows_[i][col];
            for (size_t j = 0; j < cols_; ++j) {
                rows_[i][j] -= f * rows_[row][j];
            }
        }
        basis_[row] = col;
    }

    size_t m_, n_, cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<size_t> basis_;
};

}  // namespace

Solution solve(const Problem& problem) {
    if (problem.rhs.size() != problem.constraints.size()) {
        throw Error("simplex: rhs length does not match constraint count");
    }
    Tableau t(problem);
    t.phase1();
    Solution s;
    s.value = t.phase2(problem.cost);
    s.x = t.extract(problem.cost.size());
    return s;
}

}  // namespace ricci::lp
