#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <vector>

#include "exactbench/rng.hpp"
#include "exactbench/simplex.hpp"

using namespace exb;

namespace {

Rational Q(long n, long d = 1) { return Rational(Int(n), Int(d)); }

// Solves A x = b by exact Gaussian elimination; nullopt if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const int n = int(a.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n && piv == -1; ++r)
            if (a[r][col] != 0) piv = r;
        if (piv == -1) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        Rational p = a[col][col];
        for (int j = 0; j < n; ++j) a[col][j] /= p;
        b[col] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int j = 0; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

}  // namespace

TEST_CASE("simplex: textbook optimum") {
    LinearProgram lp(2);
    lp.set_objective({Q(3), Q(2)});
    lp.add_row({Q(1), Q(1)}, LinearProgram::LE, Q(4));
    lp.add_row({Q(1), Q(3)}, LinearProgram::LE, Q(6));
    auto r = lp.solve();
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == Q(12));
    CHECK(r.x == std::vector<Rational>{Q(4), Q(0)});
}

TEST_CASE("simplex: infeasible and unbounded detection") {
    LinearProgram bad(1);
    bad.set_objective({Q(1)});
    bad.add_row({Q(1)}, LinearProgram::GE, Q(2));
    bad.add_row({Q(1)}, LinearProgram::LE, Q(1));
    CHECK(bad.solve().status == LpStatus::Infeasible);

    LinearProgram unb(1);
    unb.set_objective({Q(1)});
    unb.add_row({Q(1)}, LinearProgram::GE, Q(1));
    CHECK(unb.solve().status == LpStatus::Unbounded);
}

TEST_CASE("simplex: equality rows and negative rhs") {
    LinearProgram lp(2);
    lp.set_objective({Q(-1), Q(-1)});
    lp.add_row({Q(1), Q(2)}, LinearProgram::EQ, Q(3));
    auto r = lp.solve();
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == Q(-3, 2));

    // same constraint written with a negative rhs
    LinearProgram lp2(2);
    lp2.set_objective({Q(-1), Q(-1)});
    lp2.add_row({Q(-1), Q(-2)}, LinearProgram::EQ, Q(-3));
    auto r2 = lp2.solve();
    REQUIRE(r2.status == LpStatus::Optimal);
    CHECK(r2.objective == Q(-3, 2));
}

TEST_CASE("simplex: Beale's cycling instance terminates under Bland") {
    LinearProgram lp(4);
    lp.set_objective({Q(3, 4), Q(-150), Q(1, 50), Q(-6)});
    lp.add_row({Q(1, 4), Q(-60), Q(-1, 25), Q(9)}, LinearProgram::LE, Q(0));
    lp.add_row({Q(1, 2), Q(-90), Q(-1, 50), Q(3)}, LinearProgram::LE, Q(0));
    lp.add_row({Q(0), Q(0), Q(1), Q(0)}, LinearProgram::LE, Q(1));
    auto r = lp.solve();
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == Q(1, 20));
}

TEST_CASE("simplex: degenerate zero-margin optimum") {
    // max d with x >= d, y >= d, x + y = 1, x = 1  ->  y = 0 forces d* = 0
    LinearProgram lp(3);  // x, y, d
    lp.set_objective({Q(0), Q(0), Q(1)});
    lp.add_row({Q(1), Q(0), Q(-1)}, LinearProgram::GE, Q(0));
    lp.add_row({Q(0), Q(1), Q(-1)}, LinearProgram::GE, Q(0));
    lp.add_row({Q(1), Q(1), Q(0)}, LinearProgram::EQ, Q(1));
    lp.add_row({Q(1), Q(0), Q(0)}, LinearProgram::EQ, Q(1));
    auto r = lp.solve();
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == Q(0));
}

TEST_CASE("simplex agrees with vertex-enumeration brute force") {
    Rng rng(101);
    for (int iter = 0; iter < 120; ++iter) {
        int nv = int(rng.uniform(2, 3));
        int nr = int(rng.uniform(1, 4));
        LinearProgram lp(nv);
        std::vector<Rational> obj(nv);
        for (auto& o : obj) o = Q(rng.uniform(-3, 3));
        lp.set_objective(obj);

        // collected as a.x <= b rows (bounding box keeps everything finite)
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (int i = 0; i < nr; ++i) {
            std::vector<Rational> a(nv);
            bool nonzero = false;
            for (auto& ai : a) {
                ai = Q(rng.uniform(-3, 3));
                if (ai != 0) nonzero = true;
            }
            if (!nonzero) a[0] = Q(1);
            Rational b = Q(rng.uniform(-2, 6));
            int rel = int(rng.uniform(0, 2));  // LE or GE (flip)
            if (rel == 0) {
                lp.add_row(a, LinearProgram::LE, b);
            } else {
                lp.add_row(a, LinearProgram::GE, b);
                for (auto& ai : a) ai = -ai;
                b = -b;
            }
            rows.push_back(a);
            rhs.push_back(b);
        }
        {
            std::vector<Rational> box(nv, Q(1));
            lp.add_row(box, LinearProgram::LE, Q(10));
            rows.push_back(box);
            rhs.push_back(Q(10));
        }
        // nonnegativity as explicit rows for the oracle
        for (int j = 0; j < nv; ++j) {
            std::vector<Rational> a(nv);
            a[j] = Q(-1);
            rows.push_back(a);
            rhs.push_back(Q(0));
        }

        auto feasible = [&](const std::vector<Rational>& x) {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                Rational lhs;
                for (int j = 0; j < nv; ++j) lhs += rows[i][j] * x[j];
                if (lhs > rhs[i]) return false;
            }
            return true;
        };

        // enumerate candidate vertices: every nv-subset of tight rows
        std::optional<Rational> best;
        int m = int(rows.size());
        std::vector<int> idx(nv);
        auto consider = [&](const std::vector<int>& pick) {
            std::vector<std::vector<Rational>> a(nv, std::vector<Rational>(nv));
            std::vector<Rational> b(nv);
            for (int i = 0; i < nv; ++i) {
                a[i] = rows[pick[i]];
                b[i] = rhs[pick[i]];
            }
            auto x = solve_square(a, b);
            if (!x || !feasible(*x)) return;
            Rational val;
            for (int j = 0; j < nv; ++j) val += obj[j] * (*x)[j];
            if (!best || val > *best) best = val;
        };
        std::vector<int> pick;
        auto rec = [&](auto&& self, int from) -> void {
            if (int(pick.size()) == nv) {
                consider(pick);
                return;
            }
            for (int i = from; i < m; ++i) {
                pick.push_back(i);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);

        auto r = lp.solve();
        if (best) {
            REQUIRE(r.status == LpStatus::Optimal);
            CHECK(r.objective == *best);
        } else {
            CHECK(r.status == LpStatus::Infeasible);
        }
    }
}
