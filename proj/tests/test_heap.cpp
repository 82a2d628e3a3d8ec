#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "exactbench/heap.hpp"
#include "exactbench/logbounds.hpp"

using namespace exb;
using namespace exb::heap;
using Catch::Matchers::ContainsSubstring;

namespace {

HeapTrace make(std::initializer_list<std::pair<char, int>> ops) {
    HeapTrace tr;
    for (auto [kind, id] : ops) tr.ops.push_back({kind == 'I', id});
    return tr;
}

// Independent definitional recomputation of K: replay the alive sets and
// count, at every time in the lifetime, the alive elements inserted later.
std::map<int, long long> oracle_k(const HeapTrace& tr) {
    int m = tr.m();
    std::map<int, int> t_in, t_out;
    std::vector<std::set<int>> alive(m + 1);
    std::set<int> cur;
    for (int t = 1; t <= m; ++t) {
        const Op& op = tr.ops[t - 1];
        if (op.insert) {
            t_in[op.id] = t;
            cur.insert(op.id);
        } else {
            t_out[op.id] = t;
            cur.erase(op.id);
        }
        alive[t] = cur;
    }
    std::map<int, long long> k;
    for (auto& [id, tx] : t_out) {
        long long peak = 0;
        for (int t = t_in[id]; t < tx; ++t) {
            long long w = 0;
            for (int y : alive[t])
                if (t_in[y] > t_in[id]) ++w;
            peak = std::max(peak, w);
        }
        k[id] = peak + 1;
    }
    return k;
}

void full_battery(const HeapTrace& tr) {
    TraceAnalysis an = analyze_trace(tr);
    auto ok = oracle_k(tr);
    REQUIRE(an.extracted.size() == ok.size());
    for (const ElementStats& st : an.extracted) {
        REQUIRE(st.k == ok.at(st.id));
        REQUIRE(st.k >= 1);
        REQUIRE(st.k <= st.l);
        REQUIRE(st.l == st.t_extract - st.t_insert + 1);
    }
    REQUIRE_FALSE(packing_check(tr).has_value());
    for (Rational eps : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
        for (const LevelRow& row : level_area_check(tr, eps)) REQUIRE(row.holds);
        REQUIRE(explicit_inequality_check(tr, eps).holds);
    }
}

}  // namespace

TEST_CASE("trace stats on frozen examples") {
    {
        TraceAnalysis an = analyze_trace(make({{'I', 0}, {'E', 0}}));
        REQUIRE(an.extracted.size() == 1);
        CHECK(an.extracted[0].l == 2);
        CHECK(an.extracted[0].k == 1);
        CHECK(an.never_extracted.empty());
    }
    {
        TraceAnalysis an = analyze_trace(make({{'I', 0}, {'I', 1}, {'E', 1}, {'E', 0}}));
        REQUIRE(an.extracted.size() == 2);
        CHECK(an.extracted[0].id == 0);
        CHECK(an.extracted[0].l == 4);
        CHECK(an.extracted[0].k == 2);
        CHECK(an.extracted[1].id == 1);
        CHECK(an.extracted[1].l == 2);
        CHECK(an.extracted[1].k == 1);
    }
    {
        // FIFO of three: the first element sees two younger coexisting ones
        TraceAnalysis an =
            analyze_trace(make({{'I', 0}, {'I', 1}, {'I', 2}, {'E', 0}, {'E', 1}, {'E', 2}}));
        REQUIRE(an.extracted.size() == 3);
        CHECK(an.extracted[0].k == 3);
        CHECK(an.extracted[1].k == 2);
        CHECK(an.extracted[2].k == 1);
        CHECK(an.extracted[0].l == 4);
        CHECK(an.extracted[1].l == 4);
        CHECK(an.extracted[2].l == 4);
        CHECK(an.alive[3] == std::vector<int>{0, 1, 2});
        CHECK(an.alive[4] == std::vector<int>{1, 2});
        CHECK(an.alive[6].empty());
    }
    {
        TraceAnalysis an = analyze_trace(make({{'I', 7}, {'I', 3}, {'E', 7}}));
        REQUIRE(an.extracted.size() == 1);
        CHECK(an.extracted[0].id == 7);
        CHECK(an.never_extracted == std::vector<int>{3});
    }
    CHECK(analyze_trace(HeapTrace{}).extracted.empty());
}

TEST_CASE("trace validation errors name the offending time") {
    CHECK_THROWS_WITH(analyze_trace(make({{'I', 0}, {'I', 0}})), ContainsSubstring("time 2"));
    CHECK_THROWS_WITH(analyze_trace(make({{'E', 5}})), ContainsSubstring("time 1"));
    CHECK_THROWS_WITH(analyze_trace(make({{'I', 0}, {'E', 0}, {'E', 0}})),
                      ContainsSubstring("time 3"));
    CHECK_THROWS_WITH(analyze_trace(make({{'I', 0}, {'E', 0}, {'I', 0}})),
                      ContainsSubstring("duplicate insert"));
}

TEST_CASE("packing bound is tight on a stack") {
    HeapTrace tr = random_trace(0, 10, TracePolicy::Stack);
    TraceAnalysis an = analyze_trace(tr);
    REQUIRE(an.extracted.size() == 5);
    std::map<int, long long> k;
    for (auto& st : an.extracted) k[st.id] = st.k;
    CHECK(k[4] == 1);  // top of the stack never coexists with younger elements
    CHECK(k[0] == 5);
    CHECK_FALSE(packing_check(tr).has_value());
    // at the full stack, exactly one alive element has K <= 1, two have K <= 2, ...
    std::vector<long long> ks;
    for (int id : an.alive[5]) ks.push_back(k[id]);
    std::sort(ks.begin(), ks.end());
    CHECK(ks == std::vector<long long>{1, 2, 3, 4, 5});
}

TEST_CASE("explicit inequality frozen arithmetic") {
    HeapTrace tr = make({{'I', 0}, {'E', 0}});
    InequalityReport rep = explicit_inequality_check(tr, Rational(1));
    CHECK(rep.b == 1);
    CHECK(rep.prod_l_pow_b == 2);
    CHECK(rep.prod_k_pow_b1 == 1);
    CHECK(rep.exponent == Rational(44427, 5000));  // 2 * (3 + 14427/10000)
    CHECK(rep.holds);

    InequalityReport rep4 = explicit_inequality_check(tr, Rational(1, 4));
    CHECK(rep4.b == 4);
    CHECK(rep4.prod_l_pow_b == 16);
    CHECK(rep4.exponent == Rational(2) * (Rational(4) * (Rational(6) + Rational(14427, 10000))));

    CHECK(explicit_inequality_check(HeapTrace{}, Rational(1)).holds);
    CHECK_THROWS_AS(explicit_inequality_check(tr, Rational(2)), Error);
    CHECK_THROWS_AS(explicit_inequality_check(tr, Rational(0)), Error);
    CHECK_THROWS_AS(explicit_inequality_check(tr, Rational(-1, 2)), Error);
}

TEST_CASE("b is the ceiling of 1/eps") {
    CHECK(level_b(Rational(1)) == 1);
    CHECK(level_b(Rational(1, 2)) == 2);
    CHECK(level_b(Rational(1, 3)) == 3);
    CHECK(level_b(Rational(2, 5)) == 3);
    CHECK(level_b(Rational(3, 7)) == 3);
    CHECK(level_b(Rational(1, 4)) == 4);
}

TEST_CASE("level area rows on the FIFO trace") {
    HeapTrace tr = random_trace(0, 6, TracePolicy::Fifo);
    std::vector<LevelRow> rows = level_area_check(tr, Rational(1));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].j == 0);  // K = 1
    CHECK(rows[0].count == 1);
    CHECK(rows[0].sum_l == 4);
    CHECK(rows[0].cap == 24);
    CHECK(rows[0].holds);
    CHECK(rows[1].j == 1);  // K in [2, 4)
    CHECK(rows[1].count == 2);
    CHECK(rows[1].sum_l == 8);
    CHECK(rows[1].cap == 48);
    CHECK(rows[1].holds);
}

TEST_CASE("trace generators") {
    HeapTrace fifo = random_trace(1, 4, TracePolicy::Fifo);
    REQUIRE(fifo.ops.size() == 4);
    CHECK(fifo.ops[0].insert);
    CHECK(fifo.ops[0].id == 0);
    CHECK(fifo.ops[1].id == 1);
    CHECK_FALSE(fifo.ops[2].insert);
    CHECK(fifo.ops[2].id == 0);
    CHECK(fifo.ops[3].id == 1);

    HeapTrace stack = random_trace(1, 5, TracePolicy::Stack);
    REQUIRE(stack.ops.size() == 5);
    CHECK(stack.ops[3].id == 2);  // pops come in reverse order
    CHECK(stack.ops[4].id == 1);

    CHECK(random_trace(1, 0, TracePolicy::RandomPresent).ops.empty());
    HeapTrace a = random_trace(42, 50, TracePolicy::RandomPresent);
    HeapTrace b = random_trace(42, 50, TracePolicy::RandomPresent);
    REQUIRE(a.ops.size() == 50);
    for (int i = 0; i < 50; ++i) {
        CHECK(a.ops[i].insert == b.ops[i].insert);
        CHECK(a.ops[i].id == b.ops[i].id);
    }
    CHECK_NOTHROW(analyze_trace(a));
}

TEST_CASE("exhaustive traces up to eight operations") {
    long long count = 0;
    // grow a trace one op at a time: insert a fresh id or extract any present
    std::vector<Op> ops;
    std::vector<int> present;
    int next_id = 0;
    auto rec = [&](auto&& self) -> void {
        HeapTrace tr;
        tr.ops = ops;
        full_battery(tr);
        ++count;
        if (ops.size() == 8) return;
        ops.push_back({true, next_id});
        present.push_back(next_id);
        ++next_id;
        self(self);
        --next_id;
        present.pop_back();
        ops.pop_back();
        for (std::size_t i = 0; i < present.size(); ++i) {
            int id = present[i];
            ops.push_back({false, id});
            present.erase(present.begin() + i);
            self(self);
            present.insert(present.begin() + i, id);
            ops.pop_back();
        }
    };
    rec(rec);
    // telephone numbers: 1+1+2+4+10+26+76+232+764 valid traces with m <= 8
    CHECK(count == 1116);
}

TEST_CASE("random trace sweep") {
    for (unsigned long long seed = 1; seed <= 60; ++seed) {
        full_battery(random_trace(seed, 20 + int(seed % 5) * 25, TracePolicy::RandomPresent));
    }
    full_battery(random_trace(0, 120, TracePolicy::Fifo));
    full_battery(random_trace(0, 121, TracePolicy::Fifo));
    full_battery(random_trace(0, 120, TracePolicy::Stack));
    full_battery(random_trace(0, 121, TracePolicy::Stack));
}

TEST_CASE("certified log comparison") {
    CHECK(cmp_log2_ratio(8, 1, Rational(3)) == 0);
    CHECK(cmp_log2_ratio(8, 1, Rational(5, 2)) == 1);
    CHECK(cmp_log2_ratio(8, 1, Rational(7, 2)) == -1);
    CHECK(cmp_log2_ratio(1, 8, Rational(-3)) == 0);
    CHECK(cmp_log2_ratio(6, 3, Rational(1)) == 0);

    // log2(3) = 1.5849625007... against nearby rationals
    CHECK(cmp_log2_ratio(3, 1, Rational(19, 12)) == 1);
    CHECK(cmp_log2_ratio(3, 1, Rational(27, 17)) == -1);
    CHECK(cmp_log2_ratio(3, 1, Rational(317, 200)) == -1);
    // continued-fraction convergents straddle it tightly
    CHECK(cmp_log2_ratio(3, 1, Rational(1054, 665)) == 1);
    CHECK(cmp_log2_ratio(3, 1, Rational(24727, 15601)) == -1);

    CHECK(cmp_log2_ratio(1, 3, Rational(-1054, 665)) == -1);
    CHECK_THROWS_AS(cmp_log2_ratio(0, 1, Rational(0)), Error);
    CHECK_THROWS_AS(cmp_log2_ratio(1, 0, Rational(0)), Error);

    // against a double oracle away from ties
    for (long long a = 2; a <= 40; ++a) {
        for (long long b = 1; b <= 7; ++b) {
            double v = std::log2(double(a) / double(b));
            Rational above{Int(llround(v * 1000) + 7), Int(1000)};
            Rational below{Int(llround(v * 1000) - 7), Int(1000)};
            CHECK(cmp_log2_ratio(a, b, above) <= 0);
            CHECK(cmp_log2_ratio(a, b, below) >= 0);
        }
    }
}
