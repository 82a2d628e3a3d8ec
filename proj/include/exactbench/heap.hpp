#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "logbounds.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace exb::heap {

struct Op {
    bool insert = true;
    int id = 0;
};

// Sequence of insert / extract operations at times 1..m.
struct HeapTrace {
    std::vector<Op> ops;
    int m() const { return int(ops.size()); }
};

struct ElementStats {
    int id = 0;
    int t_insert = 0;
    int t_extract = 0;   // 0 when never extracted
    long long l = 0;     // lifetime t' - t + 1
    long long k = 0;     // 1 + peak number of younger coexisting elements
};

struct TraceAnalysis {
    std::vector<ElementStats> extracted;    // in insertion order
    std::vector<int> never_extracted;       // ids, in insertion order
    std::vector<std::vector<int>> alive;    // alive[t] = ids present after op t, t = 0..m
};

inline TraceAnalysis analyze_trace(const HeapTrace& trace) {
    const int m = trace.m();
    std::map<int, int> seen;  // id -> first insert time, forever
    struct Elem {
        int id, t_in, t_out;  // t_out = 0 while present
    };
    std::vector<Elem> elems;                 // insertion order
    std::map<int, int> present;              // id -> index into elems
    std::vector<std::vector<int>> alive_idx(m + 1);
    for (int t = 1; t <= m; ++t) {
        const Op& op = trace.ops[t - 1];
        if (op.insert) {
            if (seen.count(op.id))
                throw Error("heap trace: duplicate insert of element " + std::to_string(op.id) +
                            " at time " + std::to_string(t));
            seen[op.id] = t;
            present[op.id] = int(elems.size());
            elems.push_back({op.id, t, 0});
        } else {
            auto it = present.find(op.id);
            if (it == present.end())
                throw Error("heap trace: extract of absent element " + std::to_string(op.id) +
                            " at time " + std::to_string(t));
            elems[it->second].t_out = t;
            present.erase(it);
        }
        alive_idx[t].reserve(present.size());
        for (auto& [id, idx] : present) alive_idx[t].push_back(idx);
    }

    // suffix counts: suf[t][i] = number of alive-at-t elements with insertion
    // index >= i, so |W_{t,x}| = suf[t][idx_x + 1]
    const int ne = int(elems.size());
    std::vector<std::vector<int>> suf(m + 1, std::vector<int>(ne + 1, 0));
    for (int t = 1; t <= m; ++t) {
        std::vector<char> here(ne, 0);
        for (int idx : alive_idx[t]) here[idx] = 1;
        for (int i = ne - 1; i >= 0; --i) suf[t][i] = suf[t][i + 1] + here[i];
    }

    TraceAnalysis out;
    out.alive.assign(m + 1, {});
    for (int t = 1; t <= m; ++t) {
        for (int idx : alive_idx[t]) out.alive[t].push_back(elems[idx].id);
        std::sort(out.alive[t].begin(), out.alive[t].end());
    }
    for (int i = 0; i < ne; ++i) {
        const Elem& e = elems[i];
        if (e.t_out == 0) {
            out.never_extracted.push_back(e.id);
            continue;
        }
        ElementStats st;
        st.id = e.id;
        st.t_insert = e.t_in;
        st.t_extract = e.t_out;
        st.l = e.t_out - e.t_in + 1;
        long long peak = 0;
        for (int t = e.t_in; t < e.t_out; ++t) peak = std::max<long long>(peak, suf[t][i + 1]);
        st.k = peak + 1;
        out.extracted.push_back(st);
    }
    return out;
}

// For every time t and every k >= 1, at most k of the eventually-extracted
// elements alive at t have K <= k.
struct PackingWitness {
    int t = 0;
    long long k = 0;
    std::vector<int> ids;  // the > k offending elements
};

inline std::optional<PackingWitness> packing_check(const HeapTrace& trace) {
    TraceAnalysis an = analyze_trace(trace);
    std::map<int, const ElementStats*> by_id;
    for (const ElementStats& st : an.extracted) by_id[st.id] = &st;
    for (int t = 1; t <= trace.m(); ++t) {
        std::vector<std::pair<long long, int>> ks;  // (K, id), extracted elements only
        for (int id : an.alive[t])
            if (auto it = by_id.find(id); it != by_id.end()) ks.push_back({it->second->k, id});
        std::sort(ks.begin(), ks.end());
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (ks[i].first < (long long)i + 1) {  // i+1 elements with K <= ks[i].first
                PackingWitness w;
                w.t = t;
                w.k = ks[i].first;
                for (std::size_t j = 0; j <= i; ++j) w.ids.push_back(ks[j].second);
                return w;
            }
        }
    }
    return std::nullopt;
}

// Per-level check: with b = ceil(1/eps) and X_j = {x : 2^(bj) <= K < 2^(b(j+1))},
// the lifetimes in X_j sum to at most 2m * 2^(b(j+1)).
struct LevelRow {
    long long j = 0;
    long long count = 0;
    Int sum_l = 0;
    Int cap = 0;
    bool holds = false;
};

inline long long level_b(const Rational& eps) {
    if (eps.sign() <= 0 || eps > Rational(1)) throw Error("heap: epsilon must be in (0, 1]");
    Int b = (eps.den() + eps.num() - 1) / eps.num();  // ceil(1/eps)
    return b.convert_to<long long>();
}

inline std::vector<LevelRow> level_area_check(const HeapTrace& trace, const Rational& eps) {
    long long b = level_b(eps);
    TraceAnalysis an = analyze_trace(trace);
    std::map<long long, LevelRow> rows;
    for (const ElementStats& st : an.extracted) {
        long long j = st.k == 1 ? 0 : floor_log2(Int(st.k)) / b;  // 2^(bj) <= K < 2^(b(j+1))
        if ((Int(1) << (b * (j + 1))) <= st.k) ++j;               // guard exact boundary
        LevelRow& r = rows[j];
        r.j = j;
        r.count += 1;
        r.sum_l += st.l;
    }
    std::vector<LevelRow> out;
    for (auto& [j, r] : rows) {
        r.cap = Int(2) * trace.m() * (Int(1) << (b * (j + 1)));
        r.holds = r.sum_l <= r.cap;
        out.push_back(r);
    }
    return out;
}

// Checks sum(log2 L) <= (1 + 1/b) sum(log2 K) + m (b + 2 + 14427/10000),
// with b = ceil(1/eps).  Scaled by b, this compares log2 of an integer ratio
// against a rational, which is decided exactly.
struct InequalityReport {
    long long b = 0;
    Int prod_l_pow_b = 1;      // 2^(b * lhs)
    Int prod_k_pow_b1 = 1;     // 2^((b+1) * sum log2 K)
    Rational exponent;         // b * m * (b + 2 + 14427/10000)
    double lhs_log2 = 0;       // display only
    double rhs_log2 = 0;       // display only
    bool holds = false;
};

inline InequalityReport explicit_inequality_check(const HeapTrace& trace, const Rational& eps) {
    InequalityReport rep;
    rep.b = level_b(eps);
    TraceAnalysis an = analyze_trace(trace);
    double sum_log_l = 0, sum_log_k = 0;
    for (const ElementStats& st : an.extracted) {
        rep.prod_l_pow_b *= boost::multiprecision::pow(Int(st.l), unsigned(rep.b));
        rep.prod_k_pow_b1 *= boost::multiprecision::pow(Int(st.k), unsigned(rep.b + 1));
        sum_log_l += std::log2(double(st.l));
        sum_log_k += std::log2(double(st.k));
    }
    Rational coeff = Rational(rep.b + 2) + Rational(14427, 10000);
    rep.exponent = Rational(rep.b) * Rational(trace.m()) * coeff;
    rep.lhs_log2 = sum_log_l;
    rep.rhs_log2 = (1.0 + 1.0 / double(rep.b)) * sum_log_k +
                   double(trace.m()) * (double(rep.b) + 2 + 1.4427);

    // tier 1: floor(exponent) already suffices
    Int lo_shift = rep.exponent.floor();
    if (rep.prod_l_pow_b <= (rep.prod_k_pow_b1 << lo_shift.convert_to<unsigned>())) {
        rep.holds = true;
        return rep;
    }
    // tier 2: even ceil(exponent) fails
    Int hi_shift = rep.exponent.ceil();
    if (rep.prod_l_pow_b > (rep.prod_k_pow_b1 << hi_shift.convert_to<unsigned>())) {
        rep.holds = false;
        return rep;
    }
    // tier 3: certified comparison of log2(prod ratio) with the exponent
    rep.holds = cmp_log2_ratio(rep.prod_l_pow_b, rep.prod_k_pow_b1, rep.exponent) <= 0;
    return rep;
}

enum class TracePolicy { Fifo, Stack, RandomPresent };

inline HeapTrace random_trace(unsigned long long seed, int m, TracePolicy policy) {
    if (m < 0) throw Error("heap random_trace: m must be >= 0");
    HeapTrace tr;
    if (policy == TracePolicy::Fifo || policy == TracePolicy::Stack) {
        int inserts = (m + 1) / 2;
        for (int i = 0; i < inserts; ++i) tr.ops.push_back({true, i});
        for (int i = 0; int(tr.ops.size()) < m; ++i)
            tr.ops.push_back({false, policy == TracePolicy::Fifo ? i : inserts - 1 - i});
        return tr;
    }
    Rng rng(seed);
    int next_id = 0;
    std::vector<int> present;
    for (int t = 0; t < m; ++t) {
        if (present.empty() || rng.coin()) {
            present.push_back(next_id);
            tr.ops.push_back({true, next_id++});
        } else {
            std::size_t pick = std::size_t(rng.uniform(0, (long long)present.size() - 1));
            tr.ops.push_back({false, present[pick]});
            present.erase(present.begin() + pick);
        }
    }
    return tr;
}

}  // namespace exb::heap
