#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "exactbench/rng.hpp"
#include "exactbench/wilber.hpp"

using namespace exb;
using namespace exb::wilber;

namespace {

// Independent oracle: restrict to every internal interval and recount.
long long naive_wilber(const std::vector<int>& s, int n) {
    long long total = 0;
    for (DyadicInterval iv : internal_intervals(n)) {
        int prev_side = -1;
        for (int k : s) {
            if (k < iv.lo || k > iv.hi) continue;
            int side = k > iv.mid() ? 1 : 0;
            if (prev_side != -1 && side != prev_side) ++total;
            prev_side = side;
        }
    }
    return total;
}

struct BatteryStats {
    long long instances = 0;
    long long failures = 0;
    long long case_a = 0, case_b = 0, with_new = 0;
};

// Every per-interval invariant at once; cheap enough for exhaustive sweeps.
void battery(const ColoredSequence& z, BatteryStats& st) {
    ++st.instances;
    bool ok = true;
    long long sum_alpha = 0, sum_mi = 0, sum_new = 0;
    for (const IntervalReport& r : full_decomposition(z)) {
        ok &= r.alpha == r.mono + r.m_i;
        ok &= r.identity_holds;
        ok &= r.c_left == r.c_ll + r.new_l;
        ok &= r.c_right == r.c_rr + r.new_r;
        ok &= r.charging_holds;
        ok &= r.charge_targets_valid;
        ok &= r.max_preimages_one_side <= 1;
        ok &= r.max_preimages_total <= 2;
        ok &= r.mono <= r.alpha_r + r.alpha_b;
        sum_alpha += r.alpha;
        sum_mi += r.m_i;
        sum_new += r.new_l + r.new_r;
        st.case_a += r.case_a;
        st.case_b += r.case_b;
        if (r.new_l + r.new_r > 0) ++st.with_new;
    }
    ok &= sum_alpha == wilber_bound(z.keys(), z.n);
    ok &= sum_mi <= (long long)z.items.size() + sum_new;
    ok &= merge_report(z).holds;
    if (!ok) ++st.failures;
}

ColoredSequence random_sequence(Rng& rng, int n, int len) {
    ColoredSequence z;
    z.n = n;
    for (int i = 0; i < len; ++i)
        z.items.push_back({(int)rng.uniform(1, n), rng.coin() ? Color::Red : Color::Blue});
    return z;
}

}  // namespace

TEST_CASE("interval bound on frozen sequences") {
    CHECK(wilber_bound({1, 1, 1}, 2) == 0);
    CHECK(wilber_bound({1, 2, 1, 2}, 2) == 3);
    CHECK(wilber_bound({1, 3, 2, 4}, 4) == 5);
    CHECK(wilber_bound({}, 1) == 0);
    CHECK(wilber_bound({1, 1}, 1) == 0);
    CHECK(wilber_bound({1, 3, 2}, 3) == 3);  // key space padded to 4
    CHECK_THROWS_AS(wilber_bound({0}, 2), Error);
    CHECK_THROWS_AS(wilber_bound({3}, 2), Error);
    CHECK_THROWS_AS(wilber_bound({1}, 0), Error);

    // per-interval contributions of (1,3,2,4)
    ColoredSequence s;
    s.n = 4;
    for (int k : {1, 3, 2, 4}) s.items.push_back({k, Color::Red});
    CHECK(alternation_decomposition(s, {1, 4}).alpha == 3);
    CHECK(alternation_decomposition(s, {1, 2}).alpha == 1);
    CHECK(alternation_decomposition(s, {3, 4}).alpha == 1);
}

TEST_CASE("internal dyadic intervals") {
    CHECK(internal_intervals(1).empty());
    CHECK(internal_intervals(2) == std::vector<DyadicInterval>{{1, 2}});
    CHECK(internal_intervals(3) == std::vector<DyadicInterval>{{1, 4}, {1, 2}, {3, 4}});
    CHECK(internal_intervals(8) ==
          std::vector<DyadicInterval>{{1, 8}, {1, 4}, {1, 2}, {3, 4}, {5, 8}, {5, 6}, {7, 8}});
    ColoredSequence z;
    z.n = 4;
    z.items = {{1, Color::Red}};
    CHECK_THROWS_AS(alternation_decomposition(z, {2, 3}), Error);  // misaligned
    CHECK_THROWS_AS(alternation_decomposition(z, {1, 3}), Error);  // size not a power of two
    CHECK_THROWS_AS(alternation_decomposition(z, {1, 1}), Error);  // leaf
    CHECK_THROWS_AS(alternation_decomposition(z, {1, 8}), Error);  // outside padded space
}

TEST_CASE("interleave and color split") {
    ColoredSequence z = interleave({1, 2}, {3, 4}, 4);
    REQUIRE(z.items.size() == 4);
    CHECK(z.items[0] == std::pair<int, Color>{1, Color::Red});
    CHECK(z.items[1] == std::pair<int, Color>{3, Color::Blue});
    CHECK(z.items[2] == std::pair<int, Color>{2, Color::Red});
    CHECK(z.items[3] == std::pair<int, Color>{4, Color::Blue});
    auto [r, b] = split_by_color(z);
    CHECK(r == std::vector<int>{1, 2});
    CHECK(b == std::vector<int>{3, 4});
    CHECK_THROWS_AS(interleave({1}, {}, 2), Error);
    CHECK_THROWS_AS(interleave({1}, {5}, 4), Error);
}

TEST_CASE("merge report frozen") {
    ColoredSequence z = interleave({1, 1}, {2, 2}, 2);  // (1r, 2b, 1r, 2b)
    MergeReport rep = merge_report(z);
    CHECK(rep.w_z == 3);
    CHECK(rep.w_r == 0);
    CHECK(rep.w_b == 0);
    CHECK(rep.bound == 4);
    CHECK(rep.holds);

    MergeReport rep2 = merge_report(interleave({1, 2, 1}, {2, 1, 2}, 2));
    CHECK(rep2.w_z == 3);
    CHECK(rep2.w_r == 2);
    CHECK(rep2.w_b == 2);
    CHECK(rep2.bound == 18);
    CHECK(rep2.holds);

    MergeReport empty = merge_report(ColoredSequence{4, {}});
    CHECK(empty.w_z == 0);
    CHECK(empty.bound == 0);
    CHECK(empty.holds);
}

TEST_CASE("root decomposition frozen: no new color changes") {
    ColoredSequence z;
    z.n = 4;
    z.items = {{1, Color::Red}, {3, Color::Blue}, {1, Color::Red}};
    IntervalReport r = alternation_decomposition(z, {1, 4});
    CHECK(r.alpha == 2);
    CHECK(r.mono == 0);
    CHECK(r.m_i == 2);
    CHECK(r.c_z == 2);
    CHECK(r.c_ll == 0);
    CHECK(r.c_rr == 0);
    CHECK(r.c_left == 0);
    CHECK(r.c_right == 0);
    CHECK(r.new_l == 0);
    CHECK(r.new_r == 0);
    CHECK(r.identity_holds);
    CHECK(r.charging_holds);
    CHECK(r.max_preimages_total == 0);
}

TEST_CASE("charge map: middle block all opposite color") {
    // left-child pair (1r, 2b) becomes adjacent only after removing 3b; the
    // middle block {3b} is all blue, so the last blue point is charged to 2b
    ColoredSequence z;
    z.n = 4;
    z.items = {{1, Color::Red}, {3, Color::Blue}, {2, Color::Blue}};
    IntervalReport r = alternation_decomposition(z, {1, 4});
    CHECK(r.alpha == 2);
    CHECK(r.mono == 1);
    CHECK(r.m_i == 1);
    CHECK(r.c_z == 1);
    CHECK(r.c_left == 1);
    CHECK(r.new_l == 1);
    CHECK(r.new_r == 0);
    CHECK(r.case_a == 0);
    CHECK(r.case_b == 1);
    CHECK(r.alpha_r == 0);
    CHECK(r.alpha_b == 1);
    CHECK(r.identity_holds);
    CHECK(r.charging_holds);
    CHECK(r.charge_targets_valid);
    CHECK(r.max_preimages_one_side == 1);
    CHECK(r.max_preimages_total == 1);
}

TEST_CASE("charge map: middle block contains the first color") {
    // middle block {3r} contains red = col(u), so u=1r is charged to 3r
    ColoredSequence z;
    z.n = 4;
    z.items = {{1, Color::Red}, {3, Color::Red}, {2, Color::Blue}};
    IntervalReport r = alternation_decomposition(z, {1, 4});
    CHECK(r.new_l == 1);
    CHECK(r.case_a == 1);
    CHECK(r.case_b == 0);
    CHECK(r.alpha_r == 1);
    CHECK(r.identity_holds);
    CHECK(r.charging_holds);
    CHECK(r.charge_targets_valid);
    CHECK(r.max_preimages_total == 1);
}

TEST_CASE("tree recursion matches per-interval recount") {
    Rng rng(20260823);
    for (int it = 0; it < 300; ++it) {
        int n = (int)rng.uniform(1, 64);
        int len = (int)rng.uniform(0, 200);
        std::vector<int> s;
        for (int i = 0; i < len; ++i) s.push_back((int)rng.uniform(1, n));
        CAPTURE(n, len, it);
        REQUIRE(wilber_bound(s, n) == naive_wilber(s, n));
    }
}

TEST_CASE("per-interval invariants on random sequences") {
    Rng rng(7);
    BatteryStats st;
    for (int it = 0; it < 300; ++it) {
        int n = (int)rng.uniform(1, 32);
        int len = (int)rng.uniform(0, 96);
        battery(random_sequence(rng, n, len), st);
    }
    CHECK(st.instances == 300);
    CHECK(st.failures == 0);
    CHECK(st.case_a > 0);
    CHECK(st.case_b > 0);
    CHECK(st.with_new > 50);
}

TEST_CASE("exhaustive small sequences") {
    BatteryStats st;
    auto sweep = [&](int n, int maxlen) {
        int alphabet = 2 * n;
        for (int len = 0; len <= maxlen; ++len) {
            long long total = 1;
            for (int i = 0; i < len; ++i) total *= alphabet;
            for (long long code = 0; code < total; ++code) {
                ColoredSequence z;
                z.n = n;
                long long c = code;
                for (int i = 0; i < len; ++i) {
                    int sym = int(c % alphabet);
                    c /= alphabet;
                    z.items.push_back({sym / 2 + 1, sym % 2 ? Color::Blue : Color::Red});
                }
                battery(z, st);
            }
        }
    };
    sweep(2, 8);  // every colored sequence of length <= 8 over two keys
    sweep(4, 5);
    sweep(8, 4);
    CHECK(st.failures == 0);
    CHECK(st.case_a > 0);
    CHECK(st.case_b > 0);
    INFO("instances swept: " << st.instances);
    CHECK(st.instances == 87381 + 37449 + 69905);
}

TEST_CASE("color swap and key mirror preserve the merge bound") {
    Rng rng(99);
    for (int it = 0; it < 200; ++it) {
        int n = (int)rng.uniform(1, 32);
        int len = (int)rng.uniform(0, 64);
        ColoredSequence z = random_sequence(rng, n, len);
        MergeReport base = merge_report(z);

        ColoredSequence swapped = z;
        for (auto& [k, c] : swapped.items) c = c == Color::Red ? Color::Blue : Color::Red;
        MergeReport sw = merge_report(swapped);
        CHECK(sw.w_z == base.w_z);
        CHECK(sw.w_r == base.w_b);
        CHECK(sw.w_b == base.w_r);
        CHECK(sw.bound == base.bound);
        CHECK(sw.holds == base.holds);

        int p = pad_to_pow2(n);
        ColoredSequence mirrored = z;
        mirrored.n = p;
        for (auto& [k, c] : mirrored.items) k = p + 1 - k;
        MergeReport mi = merge_report(mirrored);
        CHECK(mi.w_z == base.w_z);
        CHECK(mi.w_r == base.w_r);
        CHECK(mi.w_b == base.w_b);
        CHECK(mi.holds == base.holds);
    }
}
