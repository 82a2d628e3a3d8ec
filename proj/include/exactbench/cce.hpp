#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace exb::cce {

// Players are ordered pairs (i, j), i != j, over [1, s], in lexicographic
// order; n = s(s-1).  S_i = {(i, j) : j != i} and the pair set for {i, j} is
// (S_i symmetric-difference S_j) minus {(i,j), (j,i)}.
struct GameSpec {
    int s = 2;
    std::vector<std::pair<int, int>> players;
    std::map<std::pair<int, int>, int> index;
    std::vector<std::vector<int>> s_sets;                        // S_i, player indices, i in [1, s]
    std::map<std::pair<int, int>, std::vector<int>> pair_sets;   // {i<j} -> S_{{i,j}}
    std::map<std::pair<int, int>, std::vector<int>> sym_diffs;   // {i<j} -> S_i sym-diff S_j

    int n() const { return int(players.size()); }
};

inline GameSpec build_game(int s) {
    if (s < 2) throw Error("cce: s must be >= 2");
    GameSpec g;
    g.s = s;
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j)
            if (i != j) {
                g.index[{i, j}] = int(g.players.size());
                g.players.push_back({i, j});
            }
    g.s_sets.assign(s + 1, {});
    for (int p = 0; p < g.n(); ++p) g.s_sets[g.players[p].first].push_back(p);
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j) {
            std::vector<int> diff;  // S_i and S_j are disjoint, so the symmetric
            for (int p : g.s_sets[i]) diff.push_back(p);  // difference is the union
            for (int p : g.s_sets[j]) diff.push_back(p);
            std::sort(diff.begin(), diff.end());
            g.sym_diffs[{i, j}] = diff;
            std::vector<int> trimmed;
            for (int p : diff)
                if (p != g.index[{i, j}] && p != g.index[{j, i}]) trimmed.push_back(p);
            g.pair_sets[{i, j}] = trimmed;
        }
    return g;
}

using ActionProfile = std::vector<int>;  // entries in {-1, +1}

inline void validate_profile(const GameSpec& g, const ActionProfile& a) {
    if (int(a.size()) != g.n()) throw Error("cce: profile has wrong length");
    for (int v : a)
        if (v != 1 && v != -1) throw Error("cce: profile entries must be +1 or -1");
}

inline int chi(const std::vector<int>& T, const ActionProfile& a) {
    int prod = 1;
    for (int p : T) {
        if (p < 0 || p >= int(a.size())) throw Error("cce: chi index out of range");
        prod *= a[p];
    }
    return prod;
}

// (1 + a_(i,j) a_(j,i) chi(pair set)) / 2 when i < j; sign flipped when i > j
inline int payoff(const GameSpec& g, std::pair<int, int> player, const ActionProfile& a) {
    validate_profile(g, a);
    auto it = g.index.find(player);
    if (it == g.index.end()) throw Error("cce: no such player");
    auto [i, j] = player;
    int self = a[it->second];
    int other = a[g.index.at({j, i})];
    const std::vector<int>& T = g.pair_sets.at({std::min(i, j), std::max(i, j)});
    int signed_term = self * other * chi(T, a);
    int num = i < j ? 1 + signed_term : 1 - signed_term;
    return num / 2;
}

struct UniformDistribution {
    std::vector<ActionProfile> profiles;  // repeats allowed; k = profiles.size()
};

struct RegretReport {
    Rational max_regret;
    std::pair<int, int> worst_player;
    int worst_deviation = 1;
};

inline RegretReport max_regret(const GameSpec& g, const UniformDistribution& dist) {
    if (dist.profiles.empty()) throw Error("cce: distribution must have at least one profile");
    for (const ActionProfile& a : dist.profiles) validate_profile(g, a);
    const long long k = (long long)dist.profiles.size();
    RegretReport rep;
    bool first = true;
    for (int p = 0; p < g.n(); ++p) {
        for (int dv : {-1, 1}) {
            long long total = 0;  // sum over profiles of u(dv; a_-p) - u(a)
            for (const ActionProfile& a : dist.profiles) {
                ActionProfile dev = a;
                dev[p] = dv;
                total += payoff(g, g.players[p], dev) - payoff(g, g.players[p], a);
            }
            Rational value{Int(total), Int(k)};
            if (first || value > rep.max_regret) {
                rep.max_regret = value;
                rep.worst_player = g.players[p];
                rep.worst_deviation = dv;
                first = false;
            }
        }
    }
    return rep;
}

inline bool is_epsilon_cce(const GameSpec& g, const UniformDistribution& dist, const Rational& eps) {
    return max_regret(g, dist).max_regret <= eps;
}

struct CorrelationReport {
    // per player (i, j): E[a_(i,j) a_(j,i) chi(pair set)]
    std::vector<std::pair<std::pair<int, int>, Rational>> per_player;
    // per unordered pair {i, j}: E[chi(S_i sym-diff S_j)]
    std::vector<std::pair<std::pair<int, int>, Rational>> per_pair;
    bool identity_holds = false;  // the two expectations coincide pairwise
};

inline CorrelationReport correlation_report(const GameSpec& g, const UniformDistribution& dist) {
    if (dist.profiles.empty()) throw Error("cce: distribution must have at least one profile");
    for (const ActionProfile& a : dist.profiles) validate_profile(g, a);
    const long long k = (long long)dist.profiles.size();
    CorrelationReport rep;
    rep.identity_holds = true;
    for (int p = 0; p < g.n(); ++p) {
        auto [i, j] = g.players[p];
        const std::vector<int>& T = g.pair_sets.at({std::min(i, j), std::max(i, j)});
        long long total = 0;
        for (const ActionProfile& a : dist.profiles)
            total += a[p] * a[g.index.at({j, i})] * chi(T, a);
        rep.per_player.push_back({g.players[p], Rational(Int(total), Int(k))});
    }
    for (const auto& [pair, diff] : g.sym_diffs) {
        long long total = 0;
        for (const ActionProfile& a : dist.profiles) total += chi(diff, a);
        rep.per_pair.push_back({pair, Rational(Int(total), Int(k))});
    }
    for (const auto& [pair, value] : rep.per_pair) {
        Rational a = rep.per_player[g.index.at(pair)].second;
        Rational b = rep.per_player[g.index.at({pair.second, pair.first})].second;
        rep.identity_holds = rep.identity_holds && a == value && b == value;
    }
    return rep;
}

struct SignatureReport {
    std::vector<std::vector<int>> vectors;  // v_l in {-1,+1}^k
    struct PairEntry {
        int l1 = 0, l2 = 0;
        long long inner = 0, hamming = 0;
        bool identity = false;  // |inner| == |k - 2 hamming|
    };
    std::vector<PairEntry> pairs;
    bool identity_holds = true;
};

inline SignatureReport signature_vectors(const std::vector<ActionProfile>& profiles,
                                         const std::vector<std::vector<int>>& sets) {
    SignatureReport rep;
    for (const auto& set : sets) {
        std::vector<int> v;
        for (const ActionProfile& a : profiles) v.push_back(chi(set, a));
        rep.vectors.push_back(v);
    }
    const long long k = (long long)profiles.size();
    for (std::size_t x = 0; x < sets.size(); ++x)
        for (std::size_t y = x + 1; y < sets.size(); ++y) {
            SignatureReport::PairEntry e;
            e.l1 = int(x);
            e.l2 = int(y);
            for (long long t = 0; t < k; ++t) {
                e.inner += rep.vectors[x][t] * rep.vectors[y][t];
                e.hamming += rep.vectors[x][t] != rep.vectors[y][t];
            }
            e.identity = std::abs(e.inner) == std::abs(k - 2 * e.hamming);
            rep.identity_holds = rep.identity_holds && e.identity;
            rep.pairs.push_back(e);
        }
    return rep;
}

struct MinKResult {
    long long k = 0;
    std::vector<int> witness_codes;  // profile bit codes, non-decreasing
    Rational witness_regret;
};

inline ActionProfile decode_profile(int n, int code) {
    ActionProfile a(n);
    for (int p = 0; p < n; ++p) a[p] = (code >> p) & 1 ? 1 : -1;
    return a;
}

// Smallest k <= k_max such that some k-element profile multiset is an
// eps-CCE; plain exhaustion over multisets in colex order, no pruning.
inline std::optional<MinKResult> brute_min_k(const GameSpec& g, const Rational& eps, int k_max) {
    if (g.n() > 8) throw Error("cce brute_min_k: guard requires n <= 8 players");
    if (k_max < 1) throw Error("cce brute_min_k: k_max must be >= 1");
    const int n = g.n();
    const int profiles = 1 << n;
    // delta[p][d][code]: payoff change for player p deviating to action d
    std::vector<std::vector<std::vector<int>>> delta(
        n, std::vector<std::vector<int>>(2, std::vector<int>(profiles)));
    for (int code = 0; code < profiles; ++code) {
        ActionProfile a = decode_profile(n, code);
        for (int p = 0; p < n; ++p) {
            int base = payoff(g, g.players[p], a);
            for (int d = 0; d < 2; ++d) {
                ActionProfile dev = a;
                dev[p] = d ? 1 : -1;
                delta[p][d][code] = payoff(g, g.players[p], dev) - base;
            }
        }
    }
    std::vector<long long> acc(2 * n, 0);
    std::vector<int> chosen;
    const Int en = eps.num();
    const Int ed = eps.den();
    auto feasible = [&](long long k) {
        for (int t = 0; t < 2 * n; ++t)
            if (Int(acc[t]) * ed > en * k) return false;
        return true;
    };
    // colex: the largest profile code is chosen at the outermost level
    auto rec = [&](auto&& self, int slots, int hi) -> bool {
        if (slots == 0) return feasible((long long)chosen.size());
        for (int v = 0; v <= hi; ++v) {
            for (int p = 0; p < n; ++p) {
                acc[2 * p] += delta[p][0][v];
                acc[2 * p + 1] += delta[p][1][v];
            }
            chosen.push_back(v);
            if (self(self, slots - 1, v)) return true;
            chosen.pop_back();
            for (int p = 0; p < n; ++p) {
                acc[2 * p] -= delta[p][0][v];
                acc[2 * p + 1] -= delta[p][1][v];
            }
        }
        return false;
    };
    for (int k = 1; k <= k_max; ++k) {
        if (rec(rec, k, profiles - 1)) {
            MinKResult res;
            res.k = k;
            res.witness_codes = chosen;
            std::sort(res.witness_codes.begin(), res.witness_codes.end());
            UniformDistribution dist;
            for (int code : res.witness_codes) dist.profiles.push_back(decode_profile(n, code));
            res.witness_regret = max_regret(g, dist).max_regret;
            return res;
        }
    }
    return std::nullopt;
}

// Certified rational upper bound on 2 (ln m + ln n) / eps^2, using
// ln x <= ceil(log2 x) * 0.6931472 and 0.6931472 > ln 2; weakly monotone.
inline Rational babichenko_upper_bound(long long m, long long n, const Rational& eps) {
    if (m < 1 || n < 1) throw Error("cce babichenko_upper_bound: m, n must be >= 1");
    if (eps.sign() <= 0) throw Error("cce babichenko_upper_bound: eps must be positive");
    auto ceil_log2 = [](long long x) {
        long long e = 0;
        while ((1ll << e) < x) ++e;
        return e;
    };
    Rational ln2_ub(6931472, 10000000);
    Rational lnm = Rational(ceil_log2(m)) * ln2_ub;
    Rational lnn = Rational(ceil_log2(n)) * ln2_ub;
    return Rational(2) * (lnm + lnn) / (eps * eps);
}

}  // namespace exb::cce
