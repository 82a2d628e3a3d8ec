#pragma once

#include <vector>

#include "rational.hpp"

namespace exb {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;       // value of the maximized objective
    std::vector<Rational> x;  // one value per declared variable
};

// Exact-rational two-phase simplex with Bland's anti-cycling rule.
// Problem form: maximize c.x subject to rows a.x {<=,==,>=} b, x >= 0.
// Dense tableau; intended for desk-scale instances where exactness matters
// more than speed.
class LinearProgram {
  public:
    explicit LinearProgram(int nvars) : nvars_(nvars), obj_(nvars) {}

    static constexpr int LE = -1, EQ = 0, GE = 1;

    void add_row(std::vector<Rational> a, int rel, Rational b) {
        if (int(a.size()) != nvars_) throw Error("lp: row width mismatch");
        rows_.push_back(std::move(a));
        rels_.push_back(rel);
        rhs_.push_back(std::move(b));
    }

    void set_objective(std::vector<Rational> c) {
        if (int(c.size()) != nvars_) throw Error("lp: objective width mismatch");
        obj_ = std::move(c);
    }

    LpResult solve() const {
        const int m = int(rows_.size());
        // column layout: [structural | slack/surplus | artificial | rhs]
        int nslack = 0;
        for (int rel : rels_)
            if (rel != EQ) ++nslack;
        int slack0 = nvars_, art0 = nvars_ + nslack;

        // artificial needed unless the row's slack can start basic
        std::vector<int> slack_col(m, -1), art_col(m, -1);
        int nart = 0, si = 0;
        for (int i = 0; i < m; ++i) {
            bool bneg = rhs_[i] < 0;
            if (rels_[i] != EQ) slack_col[i] = slack0 + si++;
            bool slack_basic = rels_[i] != EQ && ((rels_[i] == LE) != bneg);
            if (!slack_basic) art_col[i] = art0 + nart++;
        }
        const int ncols = nvars_ + nslack + nart;

        std::vector<std::vector<Rational>> t(m, std::vector<Rational>(ncols + 1));
        std::vector<int> basis(m);
        for (int i = 0; i < m; ++i) {
            Rational s = rhs_[i] < 0 ? Rational(-1) : Rational(1);
            for (int j = 0; j < nvars_; ++j) t[i][j] = s * rows_[i][j];
            if (slack_col[i] >= 0) t[i][slack_col[i]] = s * (rels_[i] == LE ? Rational(1) : Rational(-1));
            if (art_col[i] >= 0) t[i][art_col[i]] = 1;
            t[i][ncols] = s * rhs_[i];
            basis[i] = art_col[i] >= 0 ? art_col[i] : slack_col[i];
        }

        // phase 1: minimize sum of artificials
        if (nart > 0) {
            std::vector<Rational> z(ncols + 1);
            for (int i = 0; i < m; ++i)
                if (basis[i] >= art0)
                    for (int j = 0; j <= ncols; ++j) z[j] -= t[i][j];
            if (!pivot_loop(t, z, basis, ncols, art0)) throw Error("lp: phase 1 unbounded");  // cannot happen
            if (-z[ncols] != 0) return {LpStatus::Infeasible, Rational(0), {}};
            // drive surviving artificials out of the basis
            for (int i = 0; i < m; ++i) {
                if (basis[i] < art0) continue;
                int j = 0;
                while (j < art0 && t[i][j] == 0) ++j;
                if (j < art0) {
                    pivot(t, basis, i, j, ncols);
                } else {
                    basis[i] = -1;  // redundant row
                }
            }
        }

        // phase 2: minimize -objective
        std::vector<Rational> z(ncols + 1);
        for (int j = 0; j < nvars_; ++j) z[j] = -obj_[j];
        for (int i = 0; i < m; ++i) {
            if (basis[i] < 0 || z[basis[i]] == 0) continue;
            Rational f = z[basis[i]];
            for (int j = 0; j <= ncols; ++j) z[j] -= f * t[i][j];
        }
        if (!pivot_loop(t, z, basis, ncols, art0)) return {LpStatus::Unbounded, Rational(0), {}};

        LpResult res;
        res.status = LpStatus::Optimal;
        res.x.assign(nvars_, Rational(0));
        for (int i = 0; i < m; ++i)
            if (basis[i] >= 0 && basis[i] < nvars_) res.x[basis[i]] = t[i][ncols];
        for (int j = 0; j < nvars_; ++j) res.objective += obj_[j] * res.x[j];
        return res;
    }

  private:
    // Bland: entering = lowest eligible column, leaving = lowest basis index
    // among minimal ratios.  Columns >= forbid_from never enter (artificials
    // in phase 2).  Returns false on unboundedness.
    static bool pivot_loop(std::vector<std::vector<Rational>>& t, std::vector<Rational>& z,
                           std::vector<int>& basis, int ncols, int forbid_from) {
        const int m = int(t.size());
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols && enter == -1; ++j)
                if (j < forbid_from && z[j] < 0) enter = j;
            if (enter == -1) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (basis[i] < 0 || !(t[i][enter] > 0)) continue;
                Rational ratio = t[i][ncols] / t[i][enter];
                if (leave == -1 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == -1) return false;
            pivot_with_z(t, z, basis, leave, enter, ncols);
        }
    }

    static void pivot(std::vector<std::vector<Rational>>& t, std::vector<int>& basis, int row, int col, int ncols) {
        Rational piv = t[row][col];
        for (int j = 0; j <= ncols; ++j) t[row][j] /= piv;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (int(i) == row || t[i][col] == 0) continue;
            Rational f = t[i][col];
            for (int j = 0; j <= ncols; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    static void pivot_with_z(std::vector<std::vector<Rational>>& t, std::vector<Rational>& z,
                             std::vector<int>& basis, int row, int col, int ncols) {
        pivot(t, basis, row, col, ncols);
        if (z[col] != 0) {
            Rational f = z[col];
            for (int j = 0; j <= ncols; ++j) z[j] -= f * t[row][j];
        }
    }

    int nvars_;
    std::vector<Rational> obj_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> rels_;
    std::vector<Rational> rhs_;
};

}  // namespace exb
