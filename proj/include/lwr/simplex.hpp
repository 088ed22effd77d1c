#pragma once

// Dense two-phase simplex with Bland's anti-cycling rule. Deterministic pivot
// order, fixed tolerances, desk scale only.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "lwr/errors.hpp"

namespace lwr {

enum class LpStatus { OPTIMAL, INFEASIBLE, UNBOUNDED };

enum class LpRel { LE, GE, EQ };

struct LpRow {
    std::vector<double> coeffs;
    LpRel rel = LpRel::LE;
    double rhs = 0.0;
};

// maximize objective . x  subject to rows, x >= 0 except variables marked free.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<double> objective;
    std::vector<LpRow> rows;
    std::vector<bool> free_vars;  // empty means all non-negative

    LpRow& add_row(LpRel rel, double rhs) {
        rows.push_back(LpRow{std::vector<double>(num_vars, 0.0), rel, rhs});
        return rows.back();
    }
};

struct LpSolution {
    LpStatus status = LpStatus::INFEASIBLE;
    double objective = 0.0;
    std::vector<double> primal;  // one value per original variable
};

namespace detail {

constexpr double kLpTol = 1e-9;

class SimplexTableau {
public:
    // columns: structural vars (free vars split into +/-), slacks, artificials.
    SimplexTableau(const LinearProgram& lp) {
        n_orig_ = lp.num_vars;
        if (lp.objective.size() != n_orig_)
            throw DimensionMismatch("objective length does not match variable count");
        // Map original variables to tableau columns; free variables get a
        // second (negated) column.
        pos_col_.resize(n_orig_);
        neg_col_.assign(n_orig_, SIZE_MAX);
        std::size_t col = 0;
        for (std::size_t v = 0; v < n_orig_; ++v) pos_col_[v] = col++;
        for (std::size_t v = 0; v < n_orig_; ++v) {
            if (!lp.free_vars.empty() && lp.free_vars[v]) neg_col_[v] = col++;
        }
        n_struct_ = col;

        m_ = lp.rows.size();
        std::vector<LpRel> rels(m_);
        std::vector<double> rhs(m_);
        std::vector<std::vector<double>> body(m_, std::vector<double>(n_struct_, 0.0));
        for (std::size_t r = 0; r < m_; ++r) {
            const LpRow& row = lp.rows[r];
            if (row.coeffs.size() != n_orig_)
                throw DimensionMismatch("row length does not match variable count");
            double sign = row.rhs < 0.0 ? -1.0 : 1.0;
            rhs[r] = sign * row.rhs;
            rels[r] = row.rel;
            if (sign < 0.0) {
                if (row.rel == LpRel::LE) rels[r] = LpRel::GE;
                else if (row.rel == LpRel::GE) rels[r] = LpRel::LE;
            }
            for (std::size_t v = 0; v < n_orig_; ++v) {
                double c = sign * row.coeffs[v];
                if (!std::isfinite(c)) throw NonFiniteEntry("non-finite LP coefficient");
                body[r][pos_col_[v]] = c;
                if (neg_col_[v] != SIZE_MAX) body[r][neg_col_[v]] = -c;
            }
        }

        // Count slack/surplus and artificial columns.
        std::size_t n_slack = 0, n_art = 0;
        for (auto rel : rels) {
            if (rel != LpRel::EQ) ++n_slack;
            if (rel != LpRel::LE) ++n_art;
        }
        n_cols_ = n_struct_ + n_slack + n_art;
        art_begin_ = n_struct_ + n_slack;

        tab_.assign(m_, std::vector<double>(n_cols_ + 1, 0.0));
        basis_.assign(m_, 0);
        std::size_t slack = n_struct_, art = art_begin_;
        for (std::size_t r = 0; r < m_; ++r) {
            for (std::size_t c = 0; c < n_struct_; ++c) tab_[r][c] = body[r][c];
            tab_[r][n_cols_] = rhs[r];
            if (rels[r] == LpRel::LE) {
                tab_[r][slack] = 1.0;
                basis_[r] = slack++;
            } else if (rels[r] == LpRel::GE) {
                tab_[r][slack] = -1.0;
                ++slack;
                tab_[r][art] = 1.0;
                basis_[r] = art++;
            } else {
                tab_[r][art] = 1.0;
                basis_[r] = art++;
            }
        }

        obj_.assign(n_cols_ + 1, 0.0);
        objective_ = lp.objective;
    }

    LpSolution solve() {
        // Phase 1: maximize minus the sum of artificials.
        if (art_begin_ < n_cols_) {
            std::fill(obj_.begin(), obj_.end(), 0.0);
            for (std::size_t c = art_begin_; c < n_cols_; ++c) obj_[c] = -1.0;
            price_basis();
            iterate();
            // The z-row rhs carries minus the phase-1 objective, i.e. the
            // artificial mass still in the basis.
            if (obj_[n_cols_] > kLpTol) return LpSolution{LpStatus::INFEASIBLE, 0.0, {}};
            expel_artificials();
        }

        // Phase 2 with the real objective.
        std::fill(obj_.begin(), obj_.end(), 0.0);
        for (std::size_t v = 0; v < n_orig_; ++v) {
            obj_[pos_col_[v]] = objective_[v];
            if (neg_col_[v] != SIZE_MAX) obj_[neg_col_[v]] = -objective_[v];
        }
        price_basis();
        if (!iterate()) return LpSolution{LpStatus::UNBOUNDED, 0.0, {}};

        LpSolution sol;
        sol.status = LpStatus::OPTIMAL;
        sol.objective = -obj_[n_cols_];
        sol.primal.assign(n_orig_, 0.0);
        std::vector<double> colval(n_cols_, 0.0);
        for (std::size_t r = 0; r < m_; ++r) colval[basis_[r]] = tab_[r][n_cols_];
        for (std::size_t v = 0; v < n_orig_; ++v) {
            sol.primal[v] = colval[pos_col_[v]];
            if (neg_col_[v] != SIZE_MAX) sol.primal[v] -= colval[neg_col_[v]];
        }
        return sol;
    }

private:
    // Make reduced costs of basic columns zero.
    void price_basis() {
        for (std::size_t r = 0; r < m_; ++r) {
            double c = obj_[basis_[r]];
            if (c == 0.0) continue;
            for (std::size_t j = 0; j <= n_cols_; ++j) obj_[j] -= c * tab_[r][j];
        }
    }

    // Bland's rule: entering = lowest-index improving column; leaving = ratio
    // test with lowest basis index on ties. Returns false on unboundedness.
    bool iterate() {
        for (std::size_t iter = 0;; ++iter) {
            if (iter > 100000)
                throw NumericFailure("simplex iteration limit exceeded");
            std::size_t enter = SIZE_MAX;
            for (std::size_t j = 0; j < n_cols_; ++j) {
                if (blocked_cols_.size() > j && blocked_cols_[j]) continue;
                if (obj_[j] > kLpTol) { enter = j; break; }
            }
            if (enter == SIZE_MAX) return true;

            std::size_t leave = SIZE_MAX;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < m_; ++r) {
                double a = tab_[r][enter];
                if (a <= kLpTol) continue;
                double ratio = tab_[r][n_cols_] / a;
                if (ratio < best - kLpTol ||
                    (ratio < best + kLpTol &&
                     (leave == SIZE_MAX || basis_[r] < basis_[leave]))) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave == SIZE_MAX) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        double p = tab_[r][c];
        if (std::fabs(p) < kLpTol)
            throw NumericFailure("degenerate simplex pivot below tolerance");
        for (std::size_t j = 0; j <= n_cols_; ++j) tab_[r][j] /= p;
        tab_[r][c] = 1.0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r) continue;
            double f = tab_[i][c];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n_cols_; ++j) tab_[i][j] -= f * tab_[r][j];
            tab_[i][c] = 0.0;
        }
        double f = obj_[c];
        if (f != 0.0) {
            for (std::size_t j = 0; j <= n_cols_; ++j) obj_[j] -= f * tab_[r][j];
            obj_[c] = 0.0;
        }
        basis_[r] = c;
    }

    // After phase 1, pivot basic artificials out on any usable column; rows
    // that cannot be cleared are redundant and stay with a zero artificial.
    void expel_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < art_begin_) continue;
            std::size_t c = SIZE_MAX;
            for (std::size_t j = 0; j < art_begin_; ++j) {
                if (std::fabs(tab_[r][j]) > kLpTol) { c = j; break; }
            }
            if (c != SIZE_MAX) pivot(r, c);
        }
        // Artificials never re-enter.
        blocked_cols_.assign(n_cols_, false);
        for (std::size_t j = art_begin_; j < n_cols_; ++j) blocked_cols_[j] = true;
    }

    std::size_t n_orig_ = 0, n_struct_ = 0, n_cols_ = 0, art_begin_ = 0, m_ = 0;
    std::vector<std::size_t> pos_col_, neg_col_;
    std::vector<std::vector<double>> tab_;
    std::vector<double> obj_;
    std::vector<double> objective_;
    std::vector<std::size_t> basis_;
    std::vector<bool> blocked_cols_;
};

}  // namespace detail

inline LpSolution solve_lp(const LinearProgram& lp) {
    return detail::SimplexTableau(lp).solve();
}

}  // namespace lwr
