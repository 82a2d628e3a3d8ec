#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"

namespace exb::wilber {

enum class Color : unsigned char { Red, Blue };

// Access sequence over keys [1, n], each item colored red or blue.
struct ColoredSequence {
    int n = 1;
    std::vector<std::pair<int, Color>> items;

    void validate() const {
        if (n < 1) throw Error("wilber: key-space size must be >= 1");
        for (auto [k, c] : items)
            if (k < 1 || k > n) throw Error("wilber: key " + std::to_string(k) + " out of range [1," + std::to_string(n) + "]");
    }
    std::vector<int> keys() const {
        std::vector<int> out;
        out.reserve(items.size());
        for (auto [k, c] : items) out.push_back(k);
        return out;
    }
};

inline int pad_to_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Internal dyadic interval [lo, hi] (1-based, inclusive); size is a power of
// two >= 2, children split at the midpoint.
struct DyadicInterval {
    int lo = 1, hi = 2;
    int mid() const { return lo + (hi - lo) / 2; }  // left child is [lo, mid]
    DyadicInterval left() const { return {lo, mid()}; }
    DyadicInterval right() const { return {mid() + 1, hi}; }
    int size() const { return hi - lo + 1; }
    friend bool operator==(const DyadicInterval& a, const DyadicInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

// All internal dyadic intervals of the padded key space, root first.
inline std::vector<DyadicInterval> internal_intervals(int n) {
    int p = pad_to_pow2(n);
    std::vector<DyadicInterval> out;
    if (p < 2) return out;
    std::vector<DyadicInterval> queue{{1, p}};
    while (!queue.empty()) {
        DyadicInterval i = queue.back();
        queue.pop_back();
        out.push_back(i);
        if (i.size() > 2) {
            queue.push_back(i.right());
            queue.push_back(i.left());
        }
    }
    return out;
}

// Wilber's first bound: over every internal dyadic interval, count the
// consecutive pairs of the restricted sequence that fall in opposite
// children.  Tree recursion, O(|s| log n).
inline long long wilber_bound(const std::vector<int>& s, int n) {
    if (n < 1) throw Error("wilber: key-space size must be >= 1");
    for (int k : s)
        if (k < 1 || k > n) throw Error("wilber: key " + std::to_string(k) + " out of range [1," + std::to_string(n) + "]");
    int p = pad_to_pow2(n);

    // recursion on (interval, index subsequence)
    struct Rec {
        long long total = 0;
        void go(int lo, int hi, const std::vector<int>& keys) {
            if (lo == hi || keys.empty()) return;
            int mid = lo + (hi - lo) / 2;
            std::vector<int> left, right;
            bool prev_right = false;
            bool have_prev = false;
            for (int k : keys) {
                bool r = k > mid;
                if (have_prev && r != prev_right) ++total;
                prev_right = r;
                have_prev = true;
                (r ? right : left).push_back(k);
            }
            go(lo, mid, left);
            go(mid + 1, hi, right);
        }
    } rec;
    rec.go(1, p, s);
    return rec.total;
}

// Alternating merge: x items red, y items blue.
inline ColoredSequence interleave(const std::vector<int>& x, const std::vector<int>& y, int n) {
    if (x.size() != y.size()) throw Error("wilber interleave: length mismatch");
    ColoredSequence z;
    z.n = n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        z.items.push_back({x[i], Color::Red});
        z.items.push_back({y[i], Color::Blue});
    }
    z.validate();
    return z;
}

inline std::pair<std::vector<int>, std::vector<int>> split_by_color(const ColoredSequence& z) {
    std::pair<std::vector<int>, std::vector<int>> out;
    for (auto [k, c] : z.items) (c == Color::Red ? out.first : out.second).push_back(k);
    return out;
}

struct MergeReport {
    long long w_z = 0, w_r = 0, w_b = 0;
    long long bound = 0;  // 3 w_r + 3 w_b + |Z|
    bool holds = false;
};

inline MergeReport merge_report(const ColoredSequence& z) {
    z.validate();
    auto [r, b] = split_by_color(z);
    MergeReport rep;
    rep.w_z = wilber_bound(z.keys(), z.n);
    rep.w_r = wilber_bound(r, z.n);
    rep.w_b = wilber_bound(b, z.n);
    rep.bound = 3 * rep.w_r + 3 * rep.w_b + (long long)z.items.size();
    rep.holds = rep.w_z <= rep.bound;
    return rep;
}

// Per-interval diagnostic counters, all computed directly from definitions.
struct IntervalReport {
    DyadicInterval interval;
    long long alpha = 0;       // alternations of the uncolored restriction
    long long mono = 0;        // monochromatic alternations
    long long m_i = 0;         // bichromatic alternations
    long long c_z = 0;         // color changes of Z|_I
    long long c_ll = 0, c_rr = 0;
    long long c_left = 0, c_right = 0;  // color changes of the child restrictions
    long long new_l = 0, new_r = 0;
    long long alpha_r = 0, alpha_b = 0;  // alternations of the color restrictions
    bool identity_holds = false;   // m_i == c_z - c_left - c_right + new_l + new_r
    bool charging_holds = false;   // new_l + new_r <= 2 (alpha_r + alpha_b)
    bool charge_targets_valid = false;  // every charge lands on an alternation of a color restriction
    long long case_a = 0, case_b = 0;   // middle block contains col(u) / is all col(v)
    int max_preimages_one_side = 0;     // per charge target, from one of New_L / New_R
    int max_preimages_total = 0;
};

inline IntervalReport alternation_decomposition(const ColoredSequence& z, DyadicInterval iv) {
    z.validate();
    int p = pad_to_pow2(z.n);
    if (iv.lo < 1 || iv.hi > p || iv.size() < 2 || (iv.size() & (iv.size() - 1)) != 0 ||
        (iv.lo - 1) % iv.size() != 0)
        throw Error("wilber: not an internal dyadic interval of [1," + std::to_string(p) + "]");

    IntervalReport rep;
    rep.interval = iv;

    // restriction Z|_I as (side, color); side 0 = left child
    struct Item {
        int side;
        Color color;
    };
    std::vector<Item> zi;
    for (auto [k, c] : z.items)
        if (iv.lo <= k && k <= iv.hi) zi.push_back({k > iv.mid() ? 1 : 0, c});
    const int len = int(zi.size());

    for (int i = 0; i + 1 < len; ++i) {
        bool cross = zi[i].side != zi[i + 1].side;
        bool change = zi[i].color != zi[i + 1].color;
        if (cross) {
            ++rep.alpha;
            (change ? rep.m_i : rep.mono)++;
        }
        if (change) {
            ++rep.c_z;
            if (!cross) (zi[i].side == 0 ? rep.c_ll : rep.c_rr)++;
        }
    }

    // child restrictions as index lists into zi
    std::vector<int> left_idx, right_idx, red_idx, blue_idx;
    for (int i = 0; i < len; ++i) {
        (zi[i].side == 0 ? left_idx : right_idx).push_back(i);
        (zi[i].color == Color::Red ? red_idx : blue_idx).push_back(i);
    }
    auto color_changes = [&](const std::vector<int>& idx) {
        long long c = 0;
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
            if (zi[idx[i]].color != zi[idx[i + 1]].color) ++c;
        return c;
    };
    rep.c_left = color_changes(left_idx);
    rep.c_right = color_changes(right_idx);
    auto alternations = [&](const std::vector<int>& idx) {
        long long a = 0;
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
            if (zi[idx[i]].side != zi[idx[i + 1]].side) ++a;
        return a;
    };
    rep.alpha_r = alternations(red_idx);
    rep.alpha_b = alternations(blue_idx);

    // the charge map, implemented literally; targets are consecutive pairs of
    // a color restriction, keyed by (color, first index, second index)
    std::map<std::tuple<int, int, int>, std::pair<int, int>> charges;  // target -> (from New_L, from New_R)
    bool targets_valid = true;

    auto next_same_color = [&](int i) {
        for (int j = i + 1; j < len; ++j)
            if (zi[j].color == zi[i].color) return j;
        return -1;
    };
    auto run_side = [&](const std::vector<int>& idx, int side, long long& counter, int slot) {
        for (std::size_t t = 0; t + 1 < idx.size(); ++t) {
            int u = idx[t], v = idx[t + 1];
            if (zi[u].color == zi[v].color) continue;  // not a color change
            if (v == u + 1) continue;                  // adjacent in Z|_I: inherited, not new
            ++counter;
            // the middle block must be nonempty and lie entirely in the
            // opposite child (u, v adjacent in this child's restriction)
            for (int j = u + 1; j < v; ++j)
                if (zi[j].side == side) targets_valid = false;
            int target_color, ta = -1, tb = -1;
            int first_colu = -1, last_mid = v - 1;
            for (int j = u + 1; j < v && first_colu == -1; ++j)
                if (zi[j].color == zi[u].color) first_colu = j;
            if (first_colu != -1) {  // case (a): charge u -> first point of col(u) in M
                target_color = int(zi[u].color);
                ta = u;
                tb = first_colu;
                ++rep.case_a;
            } else {  // case (b): charge last point of M -> v
                target_color = int(zi[v].color);
                ta = last_mid;
                tb = v;
                ++rep.case_b;
            }
            // target validity: same color, opposite children, consecutive in
            // that color's restriction of Z|_I
            bool ok = zi[ta].side != zi[tb].side && zi[ta].color == zi[tb].color &&
                      zi[ta].color == Color(target_color) && next_same_color(ta) == tb;
            if (!ok) targets_valid = false;
            auto& slots = charges[{target_color, ta, tb}];
            (slot == 0 ? slots.first : slots.second)++;
        }
    };
    run_side(left_idx, 0, rep.new_l, 0);
    run_side(right_idx, 1, rep.new_r, 1);

    for (auto& [key, cnt] : charges) {
        rep.max_preimages_one_side = std::max({rep.max_preimages_one_side, cnt.first, cnt.second});
        rep.max_preimages_total = std::max(rep.max_preimages_total, cnt.first + cnt.second);
    }
    rep.charge_targets_valid = targets_valid;
    rep.identity_holds = rep.m_i == rep.c_z - rep.c_left - rep.c_right + rep.new_l + rep.new_r;
    rep.charging_holds = rep.new_l + rep.new_r <= 2 * (rep.alpha_r + rep.alpha_b);
    return rep;
}

// Every internal interval's report for one sequence.
inline std::vector<IntervalReport> full_decomposition(const ColoredSequence& z) {
    std::vector<IntervalReport> out;
    for (DyadicInterval iv : internal_intervals(z.n)) out.push_back(alternation_decomposition(z, iv));
    return out;
}

}  // namespace exb::wilber
