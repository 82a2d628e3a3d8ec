#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"

namespace exb {

// Simple undirected graph: no loops, no parallel edges, vertices 0..n-1.
// Keeps a sorted edge list (canonical) plus adjacency lists; for n <= 64 a
// bitmask adjacency is maintained for the subset-heavy algorithms.
class Graph {
  public:
    explicit Graph(int n = 0) : n_(n) {
        if (n < 0) throw Error("graph: negative vertex count");
        adj_.resize(n);
        if (n <= 64) mask_.assign(n, 0);
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error("graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (has_edge(u, v)) throw Error("graph: duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v)), {u, v});
        adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
        if (!mask_.empty()) {
            mask_[u] |= std::uint64_t(1) << v;
            mask_[v] |= std::uint64_t(1) << u;
        }
    }

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { check_vertex(v); return adj_[v]; }
    int degree(int v) const { check_vertex(v); return int(adj_[v].size()); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (!mask_.empty()) return (mask_[u] >> v) & 1;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    // Open/closed neighborhoods as bitmasks; only valid when n <= 64.
    std::uint64_t adj_mask(int v) const { require_mask(); check_vertex(v); return mask_[v]; }
    std::uint64_t closed_mask(int v) const { return adj_mask(v) | (std::uint64_t(1) << v); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw Error("graph: vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

    // Acyclicity witness: some cycle as a vertex list, or absent.  Proper DFS
    // (gray/black) so a gray neighbor is always an ancestor on the parent chain.
    std::optional<std::vector<int>> find_cycle() const {
        std::vector<int> state(n_, 0), parent(n_, -1), idx(n_, 0);
        for (int root = 0; root < n_; ++root) {
            if (state[root]) continue;
            std::vector<int> stack{root};
            state[root] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                if (idx[v] == int(adj_[v].size())) {
                    state[v] = 2;
                    stack.pop_back();
                    continue;
                }
                int w = adj_[v][idx[v]++];
                if (w == parent[v]) continue;
                if (state[w] == 0) {
                    state[w] = 1;
                    parent[w] = v;
                    stack.push_back(w);
                } else if (state[w] == 1) {
                    std::vector<int> cyc{w};
                    for (int x = v; x != w; x = parent[x]) cyc.push_back(x);
                    return cyc;
                }
            }
        }
        return std::nullopt;
    }

    bool is_forest() const { return !find_cycle().has_value(); }

    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(n_, 0);
        for (int root = 0; root < n_; ++root) {
            if (seen[root]) continue;
            std::vector<int> comp, stack{root};
            seen[root] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int w : adj_[v])
                    if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool is_clique_mask(std::uint64_t s) const {
        require_mask();
        for (std::uint64_t t = s; t; t &= t - 1) {
            int v = __builtin_ctzll(t);
            if ((s & ~closed_mask(v)) != 0) return false;
        }
        return true;
    }

    int max_clique_size() const {
        require_mask();
        int best = 0;
        std::uint64_t all = n_ == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n_) - 1);
        max_clique_rec(0, all, best);
        return best;
    }

    std::uint64_t full_mask() const {
        require_mask();
        return n_ == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n_) - 1);
    }

    // Maximum-cardinality search + perfect-elimination check.
    bool is_chordal() const {
        require_mask();
        std::vector<int> weight(n_, 0), order;
        std::vector<char> used(n_, 0);
        for (int step = 0; step < n_; ++step) {
            int pick = -1;
            for (int v = 0; v < n_; ++v)
                if (!used[v] && (pick == -1 || weight[v] > weight[pick])) pick = v;
            used[pick] = 1;
            order.push_back(pick);
            for (int w : adj_[pick])
                if (!used[w]) ++weight[w];
        }
        // reverse of MCS order is a candidate perfect elimination ordering
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[order[i]] = i;
        for (int i = n_ - 1; i >= 0; --i) {
            int v = order[i];
            std::uint64_t earlier = 0;
            for (int w : adj_[v])
                if (pos[w] < i) earlier |= std::uint64_t(1) << w;
            if (!earlier) continue;
            int u = -1;  // latest-ordered earlier neighbor
            for (std::uint64_t t = earlier; t; t &= t - 1) {
                int w = __builtin_ctzll(t);
                if (u == -1 || pos[w] > pos[u]) u = w;
            }
            if ((earlier & ~closed_mask(u)) != 0) return false;
        }
        return true;
    }

  private:
    void require_mask() const {
        if (n_ > 64) throw Error("graph: operation requires n <= 64 (n = " + std::to_string(n_) + ")");
    }

    void max_clique_rec(int cur, std::uint64_t cand, int& best) const {
        if (cur > best) best = cur;
        while (cand) {
            if (cur + __builtin_popcountll(cand) <= best) return;
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            max_clique_rec(cur + 1, cand & mask_[v], best);
        }
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> mask_;
};

// Decodes a Pruefer sequence (values in [0,n)) into the labeled tree on n >= 2
// vertices; the standard bijection, used to enumerate all labeled trees.
inline Graph tree_from_pruefer(const std::vector<int>& code, int n) {
    if (n < 2) throw Error("pruefer: need n >= 2");
    if (int(code.size()) != n - 2) throw Error("pruefer: code length must be n-2");
    std::vector<int> deg(n, 1);
    for (int v : code) {
        if (v < 0 || v >= n) throw Error("pruefer: label out of range");
        ++deg[v];
    }
    Graph g(n);
    std::vector<char> used(n, 0);
    int leaf = -1, ptr = 0;
    auto next_leaf = [&] {
        while (deg[ptr] != 1 || used[ptr]) ++ptr;
        return ptr;
    };
    leaf = next_leaf();
    for (int v : code) {
        g.add_edge(leaf, v);
        used[leaf] = 1;
        if (--deg[v] == 1 && v < ptr) {
            leaf = v;  // v became the smallest leaf
        } else {
            leaf = next_leaf();
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[v] && deg[v] == 1) (a == -1 ? a : b) = v;
    g.add_edge(a, b);
    return g;
}

}  // namespace exb
