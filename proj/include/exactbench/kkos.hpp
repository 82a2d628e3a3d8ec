#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"
#include "simplex.hpp"

namespace exb::kkos {

// Equilibrium-cost instance: graph with implicit self-loops, initial
// distribution y, per-vertex movement costs c, optional cost threshold B.
struct KkosInstance {
    Graph graph;
    std::vector<Rational> y;
    std::vector<Rational> c;
    std::optional<Rational> B;

    void validate() const {
        const int n = graph.n();
        if (int(y.size()) != n || int(c.size()) != n) throw Error("kkos: y/c dimension mismatch");
        Rational total;
        for (int v = 0; v < n; ++v) {
            if (y[v] < 0) throw Error("kkos: y[" + std::to_string(v) + "] negative");
            if (c[v] < 0) throw Error("kkos: c[" + std::to_string(v) + "] negative");
            total += y[v];
        }
        if (total != Rational(1)) throw Error("kkos: y sums to " + total.str() + ", expected 1");
    }
};

struct EquilibriumSolution {
    std::vector<Rational> x;
    std::vector<int> support;  // {v : x_v > 0}, ascending
    Rational cost;
};

inline void check_distribution(const std::vector<Rational>& x, int n, const char* what) {
    if (int(x.size()) != n) throw Error(std::string(what) + ": dimension mismatch");
    Rational total;
    for (const auto& xi : x) {
        if (xi < 0) throw Error(std::string(what) + ": negative entry");
        total += xi;
    }
    if (total != Rational(1)) throw Error(std::string(what) + ": entries sum to " + total.str() + ", expected 1");
}

// Mass at v: total weight in the closed neighborhood (self-loop included).
inline Rational mass(const KkosInstance& inst, const std::vector<Rational>& x, int v) {
    if (int(x.size()) != inst.graph.n()) throw Error("kkos mass: dimension mismatch");
    inst.graph.check_vertex(v);
    Rational m = x[v];
    for (int u : inst.graph.neighbors(v)) m += x[u];
    return m;
}

struct FeasibilityResult {
    bool feasible = true;
    std::optional<std::pair<int, int>> violating_edge;  // first support edge with unequal masses
};

// x is a feasible equilibrium candidate iff masses agree across every edge
// whose two endpoints both carry weight.
inline FeasibilityResult is_feasible(const KkosInstance& inst, const std::vector<Rational>& x) {
    check_distribution(x, inst.graph.n(), "kkos is_feasible");
    for (auto [u, v] : inst.graph.edges()) {
        if (x[u] > 0 && x[v] > 0 && mass(inst, x, u) != mass(inst, x, v)) return {false, {{u, v}}};
    }
    return {};
}

// First adjacent pair (u,v) with N[u] strictly contained in N[v]; such a pair
// rules out any strictly positive feasible vector on the graph.
inline std::optional<std::pair<int, int>> dominated_edge(const Graph& g) {
    auto closed = [&](int v) {
        std::vector<int> nb = g.neighbors(v);
        nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
        return nb;
    };
    for (int u = 0; u < g.n(); ++u) {
        std::vector<int> nu = closed(u);
        for (int v : g.neighbors(u)) {
            std::vector<int> nv = closed(v);
            if (nu.size() < nv.size() && std::includes(nv.begin(), nv.end(), nu.begin(), nu.end()))
                return {{u, v}};
        }
    }
    return std::nullopt;
}

inline bool is_dissociation_set(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in(g.n(), 0);
    for (int v : s) {
        g.check_vertex(v);
        in[v] = 1;
    }
    for (int v : s) {
        int deg = 0;
        for (int u : g.neighbors(v))
            if (in[u]) ++deg;
        if (deg > 1) return false;
    }
    return true;
}

struct FixedSupportResult {
    Rational cost;
    std::vector<Rational> x;  // witnessing distribution supported inside S
};

// Closed-form minimum L1 movement cost onto support S, with its witness:
// keep y on S, zero it elsewhere, and let the cheapest vertex of S absorb
// the missing probability mass.
inline FixedSupportResult fixed_support_cost(const KkosInstance& inst, const std::vector<int>& s_in) {
    if (s_in.empty()) throw Error("kkos fixed_support_cost: empty support");
    std::vector<int> s(s_in);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s) inst.graph.check_vertex(v);

    std::vector<char> in(inst.graph.n(), 0);
    for (int v : s) in[v] = 1;

    Rational off_cost, y_s;
    for (int v = 0; v < inst.graph.n(); ++v) {
        if (in[v]) y_s += inst.y[v];
        else off_cost += inst.c[v] * inst.y[v];
    }
    int anchor = s[0];
    for (int v : s)
        if (inst.c[v] < inst.c[anchor]) anchor = v;  // ties: smallest id wins by scan order

    FixedSupportResult res;
    res.cost = off_cost + (Rational(1) - y_s) * inst.c[anchor];
    res.x.assign(inst.graph.n(), Rational(0));
    for (int v : s) res.x[v] = inst.y[v];
    res.x[anchor] += Rational(1) - y_s;
    return res;
}

// Clique-gadget instance: H plus a universal vertex z (id m), unit costs,
// y_z = 2/3, y_u = 1/(3m), threshold B = 2/3 - 2k/(3m).  The instance's
// threshold decision encodes "H has a k-clique".
inline KkosInstance clique_reduction(const Graph& h, int k) {
    const int m = h.n();
    if (k < 1) throw Error("kkos clique_reduction: k must be >= 1");
    if (m < 1) throw Error("kkos clique_reduction: H must be nonempty");
    Graph g(m + 1, h.edges());
    for (int u = 0; u < m; ++u) g.add_edge(u, m);
    KkosInstance inst;
    inst.graph = std::move(g);
    inst.y.assign(m, Rational(Int(1), Int(3) * m));
    inst.y.push_back(Rational(2, 3));
    inst.c.assign(m + 1, Rational(1));
    inst.B = Rational(2, 3) - Rational(Int(2) * k, Int(3) * m);
    return inst;
}

// Decision procedure the reduction is about: scan cliques C of H and test
// whether the support {z} u C meets the threshold.  Returns the winning
// support if any.  Exponential in |H|; oracle use only.
inline std::optional<std::vector<int>> clique_decision_via_reduction(const Graph& h, int k) {
    KkosInstance inst = clique_reduction(h, k);
    const int m = h.n();
    if (m > 20) throw Error("kkos clique_decision: H too large for subset scan");
    for (std::uint64_t cbits = 0; cbits < (std::uint64_t(1) << m); ++cbits) {
        if (cbits != 0 && !h.is_clique_mask(cbits)) continue;
        std::vector<int> s;
        for (int u = 0; u < m; ++u)
            if ((cbits >> u) & 1) s.push_back(u);
        s.push_back(m);  // z
        if (fixed_support_cost(inst, s).cost <= *inst.B) return s;
    }
    return std::nullopt;
}

enum class CertStatus { Certified, ZeroMargin, Infeasible };

struct SupportCertificate {
    CertStatus status = CertStatus::Infeasible;
    std::vector<Rational> x;  // full-length distribution, zero off S
    Rational delta;           // optimal margin; positive iff Certified
    Rational cost;            // exact L1 movement cost of x under c
};

// Max-margin LP for "feasible distribution with support exactly S and cost
// at most B": variables u (on S), t (|u - y| majorants, present when B is
// set), margin d.  Certified iff the optimal margin is strictly positive.
inline SupportCertificate support_feasibility_lp(const KkosInstance& inst, const std::vector<int>& s_in) {
    if (s_in.empty()) throw Error("kkos support_feasibility_lp: empty support");
    std::vector<int> s(s_in);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s) inst.graph.check_vertex(v);

    const int n = inst.graph.n();
    const bool with_cost = inst.B.has_value();
    std::vector<int> upos(n, -1);
    for (int i = 0; i < int(s.size()); ++i) upos[s[i]] = i;

    const int nu = int(s.size());
    const int nt = with_cost ? n : 0;
    const int dvar = nu + nt;
    LinearProgram lp(nu + nt + 1);

    auto row = [&] { return std::vector<Rational>(nu + nt + 1); };

    // margin rows: u_i - d >= 0 on S
    for (int i = 0; i < nu; ++i) {
        auto a = row();
        a[i] = Rational(1);
        a[dvar] = Rational(-1);
        lp.add_row(a, LinearProgram::GE, Rational(0));
    }
    // total probability
    {
        auto a = row();
        for (int i = 0; i < nu; ++i) a[i] = Rational(1);
        lp.add_row(a, LinearProgram::EQ, Rational(1));
    }
    // mass equalities on support edges (off-S vertices carry no weight)
    for (auto [a_, b_] : inst.graph.edges()) {
        if (upos[a_] == -1 || upos[b_] == -1) continue;
        auto a = row();
        auto add_closed = [&](int v, const Rational& sign) {
            if (upos[v] >= 0) a[upos[v]] += sign;
            for (int w : inst.graph.neighbors(v))
                if (upos[w] >= 0) a[upos[w]] += sign;
        };
        add_closed(a_, Rational(1));
        add_closed(b_, Rational(-1));
        lp.add_row(a, LinearProgram::EQ, Rational(0));
    }
    if (with_cost) {
        // t_v >= u_v - y_v and t_v >= y_v - u_v  (u_v = 0 off S)
        for (int v = 0; v < n; ++v) {
            auto a = row();
            a[nu + v] = Rational(1);
            if (upos[v] >= 0) a[upos[v]] = Rational(-1);
            lp.add_row(a, LinearProgram::GE, -inst.y[v]);
            auto b = row();
            b[nu + v] = Rational(1);
            if (upos[v] >= 0) b[upos[v]] = Rational(1);
            lp.add_row(b, LinearProgram::GE, inst.y[v]);
        }
        auto a = row();
        for (int v = 0; v < n; ++v) a[nu + v] = inst.c[v];
        lp.add_row(a, LinearProgram::LE, *inst.B);
    }
    auto obj = row();
    obj[dvar] = Rational(1);
    lp.set_objective(obj);

    auto r = lp.solve();
    if (r.status == LpStatus::Unbounded) throw Error("kkos support_feasibility_lp: unbounded (bug)");
    SupportCertificate cert;
    if (r.status == LpStatus::Infeasible) return cert;
    cert.delta = r.objective;
    if (!(cert.delta > 0)) {
        cert.status = CertStatus::ZeroMargin;
        return cert;
    }
    cert.status = CertStatus::Certified;
    cert.x.assign(n, Rational(0));
    for (int i = 0; i < nu; ++i) cert.x[s[i]] = r.x[i];
    for (int v = 0; v < n; ++v) cert.cost += inst.c[v] * abs(cert.x[v] - inst.y[v]);
    return cert;
}

namespace detail {

// Three-state subtree optimum for max-weight dissociation sets:
//   P = v excluded;  Q = v in S with no chosen child;  R = v in S matched to
//   exactly one child.  R is impossible at leaves (kept as optional).
struct Dp {
    Rational p;
    Rational q;
    std::optional<Rational> r;
};

struct RootedForest {
    // children lists per vertex restricted to V_r, roots per component
    std::vector<std::vector<int>> children;
    std::vector<int> roots;
    std::vector<int> order;  // post-order over all components
};

inline RootedForest root_forest(const Graph& g, const std::vector<char>& keep, int anchor) {
    const int n = g.n();
    RootedForest f;
    f.children.assign(n, {});
    std::vector<char> seen(n, 0);
    auto bfs = [&](int root) {
        f.roots.push_back(root);
        std::vector<int> stack{root}, local;
        seen[root] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            local.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!keep[w] || seen[w]) continue;
                seen[w] = 1;
                f.children[v].push_back(w);
                stack.push_back(w);
            }
        }
        // children pushed in ascending order already (neighbors sorted), but
        // stack traversal may reorder the post-order; rebuild it explicitly
        for (auto it = local.rbegin(); it != local.rend(); ++it) f.order.push_back(*it);
    };
    if (anchor >= 0 && keep[anchor]) bfs(anchor);
    for (int v = 0; v < n; ++v)
        if (keep[v] && !seen[v]) bfs(v);
    return f;
}

}  // namespace detail

// O(n^2) exact optimizer over forests: anchor at each vertex r, keep only
// vertices at least as expensive as r, and maximize the anchored weight
// w_i = (c_i + c_r) y_i over dissociation sets containing r.
inline EquilibriumSolution forest_optimize(const KkosInstance& inst) {
    inst.validate();
    const Graph& g = inst.graph;
    if (auto cyc = g.find_cycle()) {
        std::string msg = "kkos forest_optimize: graph has a cycle:";
        for (int v : *cyc) msg += " " + std::to_string(v);
        throw Error(msg);
    }
    const int n = g.n();
    if (n == 0) throw Error("kkos forest_optimize: empty graph");

    Rational k_total;
    for (int v = 0; v < n; ++v) k_total += inst.c[v] * inst.y[v];

    std::optional<Rational> best_cost;
    std::vector<int> best_support;

    for (int r = 0; r < n; ++r) {
        std::vector<char> keep(n, 0);
        for (int v = 0; v < n; ++v) keep[v] = inst.c[v] >= inst.c[r];
        std::vector<Rational> w(n);
        for (int v = 0; v < n; ++v)
            if (keep[v]) w[v] = (inst.c[v] + inst.c[r]) * inst.y[v];

        auto forest = detail::root_forest(g, keep, r);
        std::vector<detail::Dp> dp(n);
        for (int v : forest.order) {
            detail::Dp d;
            d.q = w[v];
            std::optional<Rational> best_gain;
            for (int ch : forest.children[v]) {
                const auto& cd = dp[ch];
                Rational best_child = cd.p;
                if (cd.q > best_child) best_child = cd.q;
                if (cd.r && *cd.r > best_child) best_child = *cd.r;
                d.p += best_child;
                d.q += cd.p;
                Rational gain = cd.q - cd.p;
                if (!best_gain || gain > *best_gain) best_gain = gain;
            }
            if (best_gain) d.r = d.q + *best_gain;
            dp[v] = std::move(d);
        }

        Rational m_r;
        for (std::size_t ci = 0; ci < forest.roots.size(); ++ci) {
            int root = forest.roots[ci];
            const auto& d = dp[root];
            Rational val;
            if (ci == 0) {  // anchor's component: root r must be chosen
                val = d.q;
                if (d.r && *d.r > val) val = *d.r;
            } else {
                val = d.p;
                if (d.q > val) val = d.q;
                if (d.r && *d.r > val) val = *d.r;
            }
            m_r += val;
        }

        Rational cost = k_total + inst.c[r] - m_r;
        if (!best_cost || cost < *best_cost) {
            best_cost = cost;
            // reconstruct S for this anchor
            std::vector<int> support;
            enum { SP, SQ, SR };
            std::vector<int> state(n, -1);
            std::vector<int> stack;
            for (std::size_t ci = 0; ci < forest.roots.size(); ++ci) {
                int root = forest.roots[ci];
                const auto& d = dp[root];
                int st;
                if (ci == 0) {
                    st = (d.r && *d.r > d.q) ? SR : SQ;
                } else {
                    st = SP;
                    if (d.q > d.p) st = SQ;
                    if (d.r && *d.r > (st == SQ ? d.q : d.p)) st = SR;
                }
                state[root] = st;
                stack.push_back(root);
            }
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                int st = state[v];
                if (st != SP) support.push_back(v);
                int rchild = -1;
                if (st == SR) {
                    std::optional<Rational> best_gain;
                    for (int ch : forest.children[v]) {
                        Rational gain = dp[ch].q - dp[ch].p;
                        if (!best_gain || gain > *best_gain) {
                            best_gain = gain;
                            rchild = ch;
                        }
                    }
                }
                for (int ch : forest.children[v]) {
                    if (st == SP) {
                        const auto& cd = dp[ch];
                        int cs = SP;
                        Rational bestv = cd.p;
                        if (cd.q > bestv) { cs = SQ; bestv = cd.q; }
                        if (cd.r && *cd.r > bestv) cs = SR;
                        state[ch] = cs;
                    } else if (st == SQ) {
                        state[ch] = SP;
                    } else {
                        state[ch] = ch == rchild ? SQ : SP;
                    }
                    stack.push_back(ch);
                }
            }
            std::sort(support.begin(), support.end());
            best_support = std::move(support);
        }
    }

    auto fixed = fixed_support_cost(inst, best_support);
    EquilibriumSolution sol;
    sol.x = std::move(fixed.x);
    sol.cost = fixed.cost;
    for (int v = 0; v < n; ++v)
        if (sol.x[v] > 0) sol.support.push_back(v);
    return sol;
}

}  // namespace exb::kkos
