#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace exb::partition {

// k functions [0, size_e) -> [0, size_f), required to be pointwise distinct.
struct FunctionSystem {
    int size_e = 0, size_f = 0, k = 0;
    std::vector<std::vector<int>> f;

    void validate_shape() const {
        if (size_e < 0 || size_f < 0 || k < 0) throw Error("function system: negative sizes");
        if (int(f.size()) != k) throw Error("function system: expected " + std::to_string(k) + " functions");
        for (const auto& fi : f) {
            if (int(fi.size()) != size_e) throw Error("function system: wrong domain size");
            for (int v : fi)
                if (v < 0 || v >= size_f) throw Error("function system: value out of range");
        }
    }
    // first (x, i, j) with f_i(x) == f_j(x), i < j
    std::optional<std::tuple<int, int, int>> distinctness_witness() const {
        for (int x = 0; x < size_e; ++x)
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (f[i][x] == f[j][x]) return std::tuple{x, i, j};
        return std::nullopt;
    }
    long long fiber_size(int i, int z) const {
        long long c = 0;
        for (int v : f[i])
            if (v == z) ++c;
        return c;
    }
};

// vertices = E; edge xy iff two different functions collide: f_p(x) = f_q(y)
inline Graph build_conflict_graph(const FunctionSystem& sys) {
    sys.validate_shape();
    if (auto w = sys.distinctness_witness()) {
        auto [x, i, j] = *w;
        throw Error("function system: pointwise distinctness fails at x=" + std::to_string(x) +
                    " for functions " + std::to_string(i) + " and " + std::to_string(j));
    }
    std::vector<std::vector<std::pair<int, int>>> occ(sys.size_f);  // z -> (function, element)
    for (int p = 0; p < sys.k; ++p)
        for (int x = 0; x < sys.size_e; ++x) occ[sys.f[p][x]].push_back({p, x});
    std::set<std::pair<int, int>> edges;
    for (const auto& hits : occ)
        for (const auto& [p, x] : hits)
            for (const auto& [q, y] : hits)
                if (p != q && x != y) edges.insert({std::min(x, y), std::max(x, y)});
    Graph g(sys.size_e);
    for (auto [x, y] : edges) g.add_edge(x, y);
    return g;
}

enum class Mode { Original, Pairwise, Uniform };

struct ValidationResult {
    bool ok = true;
    int z = -1;       // violating value
    int p = -1, q = -1;  // violating function(s); q used in pairwise mode only
};

// original: every value has some function with fiber <= n
// pairwise: for every value and function pair, the smaller fiber is <= n
// uniform:  every fiber of every function is <= n
inline ValidationResult validate_system(const FunctionSystem& sys, long long n, Mode mode) {
    sys.validate_shape();
    std::vector<std::vector<long long>> fiber(sys.k, std::vector<long long>(sys.size_f, 0));
    for (int i = 0; i < sys.k; ++i)
        for (int x = 0; x < sys.size_e; ++x) ++fiber[i][sys.f[i][x]];
    for (int z = 0; z < sys.size_f; ++z) {
        if (mode == Mode::Original) {
            bool some = sys.k == 0;
            for (int i = 0; i < sys.k && !some; ++i) some = fiber[i][z] <= n;
            if (!some) return {false, z, -1, -1};
        } else if (mode == Mode::Uniform) {
            for (int i = 0; i < sys.k; ++i)
                if (fiber[i][z] > n) return {false, z, i, -1};
        } else {
            for (int p = 0; p < sys.k; ++p)
                for (int q = p + 1; q < sys.k; ++q)
                    if (std::min(fiber[p][z], fiber[q][z]) > n) return {false, z, p, q};
        }
    }
    return {};
}

struct ColoringResult {
    std::vector<int> colors;  // per element of E
    int palette = 0;
    long long palette_bound = 0;
    // pairwise mode extras
    std::vector<std::pair<int, int>> orientation;  // directed edges (from, to)
    long long max_indegree = 0;
    long long indegree_bound = 0;
    std::vector<int> elimination_order;
};

namespace detail {

inline std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n), order;
    std::vector<char> gone(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = int(g.neighbors(v).size());
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
        order.push_back(best);
        gone[best] = 1;
        for (int u : g.neighbors(best))
            if (!gone[u]) --deg[u];
    }
    return order;
}

inline int greedy_color(const Graph& g, const std::vector<int>& order, std::vector<int>& colors) {
    colors.assign(g.n(), -1);
    int palette = g.n() > 0 ? 1 : 0;
    for (int v : order) {
        std::set<int> used;
        for (int u : g.neighbors(v))
            if (colors[u] >= 0) used.insert(colors[u]);
        int c = 0;
        while (used.count(c)) ++c;
        colors[v] = c;
        palette = std::max(palette, c + 1);
    }
    return palette;
}

}  // namespace detail

inline ColoringResult color_system(const FunctionSystem& sys, long long n, Mode mode) {
    if (mode == Mode::Original) throw Error("color_system: only pairwise and uniform modes");
    ValidationResult val = validate_system(sys, n, mode);
    if (!val.ok)
        throw Error("color_system: system is not " +
                    std::string(mode == Mode::Pairwise ? "pairwise" : "uniformly") + " " +
                    std::to_string(n) + "-bounded at value " + std::to_string(val.z));
    Graph g = build_conflict_graph(sys);
    ColoringResult out;
    long long kk = (long long)sys.k * (sys.k - 1);
    if (mode == Mode::Uniform) {
        out.palette_bound = n * kk + 1;
        std::vector<int> order(g.n());
        for (int v = 0; v < g.n(); ++v) order[v] = v;
        out.palette = detail::greedy_color(g, order, out.colors);
        return out;
    }

    // pairwise: orient each edge out of an endpoint whose witnessing fiber is
    // small; ties toward the second endpoint
    out.palette_bound = 2 * n * kk + 1;
    out.indegree_bound = n * kk;
    std::vector<std::vector<long long>> fiber(sys.k, std::vector<long long>(sys.size_f, 0));
    for (int i = 0; i < sys.k; ++i)
        for (int x = 0; x < sys.size_e; ++x) ++fiber[i][sys.f[i][x]];
    auto small_side = [&](int x, int y) {  // witness with fiber(p, f_p(x)) <= n, f_p(x)=f_q(y)
        for (int p = 0; p < sys.k; ++p)
            for (int q = 0; q < sys.k; ++q)
                if (p != q && sys.f[p][x] == sys.f[q][y] && fiber[p][sys.f[p][x]] <= n) return true;
        return false;
    };
    std::vector<long long> indeg(g.n(), 0);
    for (auto [x, y] : g.edges()) {
        bool xy = small_side(x, y);
        if (!xy && !small_side(y, x))
            throw Error("color_system: internal error, no small-fiber witness on a conflict edge");
        if (xy) {
            out.orientation.push_back({x, y});
            ++indeg[y];
        } else {
            out.orientation.push_back({y, x});
            ++indeg[x];
        }
    }
    for (long long d : indeg) out.max_indegree = std::max(out.max_indegree, d);
    out.elimination_order = detail::degeneracy_order(g);
    std::vector<int> reverse(out.elimination_order.rbegin(), out.elimination_order.rend());
    out.palette = detail::greedy_color(g, reverse, out.colors);
    return out;
}

// f1(i,j) = i, f2(i,j) = j, f3 = 0 on E = {(i,j) : 1 <= i < j <= m}; extra
// functions (k > 3) are injective with fresh disjoint ranges
struct ShiftSystem {
    FunctionSystem sys;
    std::vector<std::pair<int, int>> labels;  // element index -> (i, j)
};

inline ShiftSystem shift_counterexample(int m, int k = 3) {
    if (m < 2) throw Error("shift_counterexample: m must be >= 2");
    if (k < 3) throw Error("shift_counterexample: k must be >= 3");
    ShiftSystem out;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) out.labels.push_back({i, j});
    int ne = int(out.labels.size());
    FunctionSystem& s = out.sys;
    s.size_e = ne;
    s.k = k;
    s.size_f = m + 1 + (k - 3) * ne;
    s.f.assign(k, std::vector<int>(ne));
    for (int x = 0; x < ne; ++x) {
        s.f[0][x] = out.labels[x].first;
        s.f[1][x] = out.labels[x].second;
        s.f[2][x] = 0;
        for (int t = 3; t < k; ++t) s.f[t][x] = m + 1 + (t - 3) * ne + x;
    }
    return out;
}

// k bijections f_i(x) = x + i on Z_{2k-1}; conflict graph is complete
inline FunctionSystem cyclic_construction(int k) {
    if (k < 2) throw Error("cyclic_construction: k must be >= 2");
    int nn = 2 * k - 1;
    FunctionSystem s;
    s.size_e = s.size_f = nn;
    s.k = k;
    s.f.assign(k, std::vector<int>(nn));
    for (int i = 1; i <= k; ++i)
        for (int x = 0; x < nn; ++x) s.f[i - 1][x] = (x + i) % nn;
    return s;
}

// exact chromatic number via branch and bound; guard |V| <= 32
inline int chromatic_number(const Graph& g) {
    const int n = g.n();
    if (n > 32) throw Error("chromatic_number: graph has more than 32 vertices");
    if (n == 0) return 0;
    if (g.edges().empty()) return 1;

    int lower = g.max_clique_size();
    // order vertices by degree, largest first, for earlier pruning
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.neighbors(a).size() != g.neighbors(b).size()
                   ? g.neighbors(a).size() > g.neighbors(b).size()
                   : a < b;
    });
    std::vector<int> color(n, -1);
    auto feasible = [&](auto&& self, int pos, int cmax, int used) -> bool {
        if (pos == n) return true;
        int v = order[pos];
        unsigned long long taken = 0;
        for (int u : g.neighbors(v))
            if (color[u] >= 0) taken |= 1ull << color[u];
        int limit = std::min(cmax - 1, used);  // new color only one step beyond used ones
        for (int c = 0; c <= limit; ++c) {
            if (taken & (1ull << c)) continue;
            color[v] = c;
            if (self(self, pos + 1, cmax, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    for (int c = lower;; ++c) {
        std::fill(color.begin(), color.end(), -1);
        if (feasible(feasible, 0, c, 0)) return c;
    }
}

// proper on the conflict graph iff the color classes satisfy
// f_p(class) disjoint from f_q(class) for every p != q
inline bool partition_property(const FunctionSystem& sys, const std::vector<int>& colors) {
    if (int(colors.size()) != sys.size_e) throw Error("partition_property: wrong coloring size");
    std::map<int, std::vector<int>> classes;
    for (int x = 0; x < sys.size_e; ++x) classes[colors[x]].push_back(x);
    for (const auto& [c, members] : classes)
        for (int p = 0; p < sys.k; ++p)
            for (int q = 0; q < sys.k; ++q) {
                if (p == q) continue;
                std::set<int> vp;
                for (int x : members) vp.insert(sys.f[p][x]);
                for (int y : members)
                    if (vp.count(sys.f[q][y])) {
                        // same element collisions are excluded by distinctness
                        for (int x : members)
                            if (x != y && sys.f[p][x] == sys.f[q][y]) return false;
                    }
            }
    return true;
}

inline bool is_proper(const Graph& g, const std::vector<int>& colors) {
    for (auto [x, y] : g.edges())
        if (colors[x] == colors[y]) return false;
    return true;
}

}  // namespace exb::partition
