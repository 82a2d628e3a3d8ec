#pragma once

#include <fstream>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cce.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "heap.hpp"
#include "kkos.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "surd.hpp"
#include "tiling.hpp"
#include "wilber.hpp"

namespace exb::io {

// ordered_json keeps insertion order, so every serializer below emits one
// canonical byte form per value and roundtrips are exact.
using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

[[noreturn]] inline void fail(const std::string& loc, const std::string& msg) {
    throw ParseError(loc, msg);
}

inline const Json& member(const Json& j, const std::string& loc, const std::string& key) {
    if (!j.is_object()) fail(loc, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(loc, "missing required field \"" + key + "\"");
    return *it;
}

inline void check_keys(const Json& j, const std::string& loc,
                       std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(loc, "expected an object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) fail(loc, "unknown field \"" + key + "\"");
    }
}

inline long long get_int(const Json& j, const std::string& loc, long long lo, long long hi) {
    if (!j.is_number_integer()) fail(loc, "expected an integer");
    long long v = j.get<long long>();
    if (v < lo || v > hi)
        fail(loc, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
    return v;
}

inline Rational get_rational(const Json& j, const std::string& loc) {
    if (!j.is_string()) fail(loc, "expected a rational as a \"num/den\" string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(loc, e.what());
    }
}

inline Json put_rational(const Rational& r) { return Json(r.str()); }

// Big integers ride as canonical decimal strings so they never overflow
// a JSON number.
inline Int get_bigint(const Json& j, const std::string& loc) {
    Rational r = get_rational(j, loc);
    if (!r.is_integer()) fail(loc, "expected an integer string");
    return r.num();
}

inline Surd get_surd(const Json& j, const std::string& loc) {
    check_keys(j, loc, {"p", "q", "r", "d"});
    Int p = get_bigint(member(j, loc, "p"), loc + "/p");
    Int q = get_bigint(member(j, loc, "q"), loc + "/q");
    Int r = get_bigint(member(j, loc, "r"), loc + "/r");
    Int d = get_bigint(member(j, loc, "d"), loc + "/d");
    if (!Surd::is_canonical(p, q, r, d))
        fail(loc, "surd {p=" + p.str() + ", q=" + q.str() + ", r=" + r.str() + ", d=" + d.str() +
                      "} is not canonical (need r >= 1, gcd(p,q,r) = 1, square-free d > 1 "
                      "exactly when q != 0)");
    return Surd(p, q, r, d);
}

inline Json put_surd(const Surd& s) {
    Json j = Json::object();
    j["p"] = s.p().str();
    j["q"] = s.q().str();
    j["r"] = s.r().str();
    j["d"] = s.d().str();
    return j;
}

// ---------------------------------------------------------------------------
// Instance envelope

inline const std::set<std::string>& instance_kinds() {
    static const std::set<std::string> kinds = {"kkos",      "wilber", "heap",
                                               "partition", "tiling", "cce"};
    return kinds;
}

struct Instance {
    int format = kFormatVersion;
    std::string kind;
    Json payload;
};

inline Instance parse_instance_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail("", std::string("malformed JSON: ") + e.what());
    }
    check_keys(j, "", {"format", "kind", "payload"});
    Instance inst;
    inst.format = int(get_int(member(j, "", "format"), "/format", 1, 1000000));
    if (inst.format != kFormatVersion)
        fail("/format", "unsupported format version " + std::to_string(inst.format));
    const Json& kind = member(j, "", "kind");
    if (!kind.is_string()) fail("/kind", "expected a string");
    inst.kind = kind.get<std::string>();
    if (!instance_kinds().count(inst.kind)) fail("/kind", "unknown kind \"" + inst.kind + "\"");
    inst.payload = member(j, "", "payload");
    return inst;
}

inline Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_instance_text(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + (e.location.empty() ? "" : ":" + e.location),
                         e.location.empty() ? e.what()
                                            : std::string(e.what()).substr(e.location.size() + 2));
    }
}

inline Json envelope(const std::string& kind, Json payload) {
    Json j = Json::object();
    j["format"] = kFormatVersion;
    j["kind"] = kind;
    j["payload"] = std::move(payload);
    return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// kkos payload: a graph with optional distribution/cost data plus optional
// reduction (k) and certification (support) fields

struct KkosPayload {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::optional<std::vector<Rational>> y, c;
    std::optional<Rational> B;
    std::optional<int> k;
    std::optional<std::vector<int>> support;

    Graph graph() const { return Graph(n, edges); }
    kkos::KkosInstance instance() const {
        if (!y || !c) throw Error("kkos payload: y and c are required for this operation");
        kkos::KkosInstance inst;
        inst.graph = graph();
        inst.y = *y;
        inst.c = *c;
        inst.B = B;
        inst.validate();
        return inst;
    }
};

inline std::vector<Rational> get_rational_vector(const Json& j, const std::string& loc,
                                                 std::size_t want) {
    if (!j.is_array()) fail(loc, "expected an array");
    if (j.size() != want)
        fail(loc, "expected " + std::to_string(want) + " entries, got " + std::to_string(j.size()));
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(get_rational(j[i], loc + "/" + std::to_string(i)));
    return out;
}

inline KkosPayload decode_kkos(const Json& j, const std::string& loc) {
    check_keys(j, loc, {"n", "edges", "y", "c", "B", "k", "support"});
    KkosPayload out;
    out.n = int(get_int(member(j, loc, "n"), loc + "/n", 0, 1000000));
    const Json& edges = member(j, loc, "edges");
    if (!edges.is_array()) fail(loc + "/edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Json& e = edges[i];
        std::string eloc = loc + "/edges/" + std::to_string(i);
        if (!e.is_array() || e.size() != 2) fail(eloc, "expected a [u, v] pair");
        int u = int(get_int(e[0], eloc + "/0", 0, out.n - 1));
        int v = int(get_int(e[1], eloc + "/1", 0, out.n - 1));
        out.edges.push_back({u, v});
    }
    try {
        Graph g = out.graph();  // rejects self-loops and duplicate edges
        if (j.contains("y")) out.y = get_rational_vector(j["y"], loc + "/y", g.n());
        if (j.contains("c")) out.c = get_rational_vector(j["c"], loc + "/c", g.n());
        if (j.contains("B")) out.B = get_rational(j["B"], loc + "/B");
        if (out.y.has_value() != out.c.has_value())
            fail(loc, "fields y and c must be given together");
        if (out.y) out.instance();  // exact invariant checks (y sums to 1, ...)
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        fail(loc, e.what());
    }
    if (j.contains("k")) out.k = int(get_int(j["k"], loc + "/k", 1, 1000000));
    if (j.contains("support")) {
        const Json& s = j["support"];
        if (!s.is_array()) fail(loc + "/support", "expected an array");
        std::vector<int> sup;
        for (std::size_t i = 0; i < s.size(); ++i)
            sup.push_back(int(get_int(s[i], loc + "/support/" + std::to_string(i), 0, out.n - 1)));
        out.support = sup;
    }
    return out;
}

inline Json encode_kkos(const KkosPayload& p) {
    Json j = Json::object();
    j["n"] = p.n;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : p.edges) edges.push_back({std::min(u, v), std::max(u, v)});
    std::sort(edges.begin(), edges.end());
    Json je = Json::array();
    for (auto [u, v] : edges) je.push_back(Json::array({u, v}));
    j["edges"] = std::move(je);
    auto vec = [](const std::vector<Rational>& v) {
        Json a = Json::array();
        for (const Rational& r : v) a.push_back(put_rational(r));
        return a;
    };
    if (p.y) j["y"] = vec(*p.y);
    if (p.c) j["c"] = vec(*p.c);
    if (p.B) j["B"] = put_rational(*p.B);
    if (p.k) j["k"] = *p.k;
    if (p.support) {
        std::vector<int> s = *p.support;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        j["support"] = s;
    }
    return j;
}

// ---------------------------------------------------------------------------
// wilber payload: colored access sequence

inline wilber::ColoredSequence decode_wilber(const Json& j, const std::string& loc) {
    check_keys(j, loc, {"n", "items"});
    wilber::ColoredSequence z;
    z.n = int(get_int(member(j, loc, "n"), loc + "/n", 1, 1 << 20));
    const Json& items = member(j, loc, "items");
    if (!items.is_array()) fail(loc + "/items", "expected an array");
    for (std::size_t i = 0; i < items.size(); ++i) {
        const Json& it = items[i];
        std::string iloc = loc + "/items/" + std::to_string(i);
        if (!it.is_array() || it.size() != 2) fail(iloc, "expected a [key, color] pair");
        int key = int(get_int(it[0], iloc + "/0", 1, z.n));
        if (!it[1].is_string()) fail(iloc + "/1", "expected \"red\" or \"blue\"");
        std::string color = it[1].get<std::string>();
        if (color != "red" && color != "blue") fail(iloc + "/1", "expected \"red\" or \"blue\"");
        z.items.push_back({key, color == "red" ? wilber::Color::Red : wilber::Color::Blue});
    }
    try {
        z.validate();
    } catch (const Error& e) {
        fail(loc, e.what());
    }
    return z;
}

inline Json encode_wilber(const wilber::ColoredSequence& z) {
    Json j = Json::object();
    j["n"] = z.n;
    Json items = Json::array();
    for (auto [key, color] : z.items)
        items.push_back(Json::array({key, color == wilber::Color::Red ? "red" : "blue"}));
    j["items"] = std::move(items);
    return j;
}

// ---------------------------------------------------------------------------
// heap payload: insert/extract trace

inline heap::HeapTrace decode_heap(const Json& j, const std::string& loc) {
    check_keys(j, loc, {"ops"});
    heap::HeapTrace trace;
    const Json& ops = member(j, loc, "ops");
    if (!ops.is_array()) fail(loc + "/ops", "expected an array");
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const Json& op = ops[i];
        std::string oloc = loc + "/ops/" + std::to_string(i);
        if (!op.is_array() || op.size() != 2) fail(oloc, "expected an [action, id] pair");
        if (!op[0].is_string()) fail(oloc + "/0", "expected \"insert\" or \"extract\"");
        std::string action = op[0].get<std::string>();
        if (action != "insert" && action != "extract")
            fail(oloc + "/0", "expected \"insert\" or \"extract\"");
        int id = int(get_int(op[1], oloc + "/1", 0, 1000000000));
        trace.ops.push_back({action == "insert", id});
    }
    return trace;
}

inline Json encode_heap(const heap::HeapTrace& trace) {
    Json j = Json::object();
    Json ops = Json::array();
    for (const heap::Op& op : trace.ops)
        ops.push_back(Json::array({op.insert ? "insert" : "extract", op.id}));
    j["ops"] = std::move(ops);
    return j;
}

// ---------------------------------------------------------------------------
// partition payload: function system plus optional bound/mode for coloring

struct PartitionPayload {
    partition::FunctionSystem sys;
    std::optional<long long> n;
    std::optional<partition::Mode> mode;
};

inline PartitionPayload decode_partition(const Json& j, const std::string& loc) {
    check_keys(j, loc, {"size_e", "size_f", "functions", "n", "mode"});
    PartitionPayload out;
    out.sys.size_e = int(get_int(member(j, loc, "size_e"), loc + "/size_e", 0, 100000));
    out.sys.size_f = int(get_int(member(j, loc, "size_f"), loc + "/size_f", 0, 100000));
    const Json& fns = member(j, loc, "functions");
    if (!fns.is_array()) fail(loc + "/functions", "expected an array of arrays");
    out.sys.k = int(fns.size());
    for (std::size_t i = 0; i < fns.size(); ++i) {
        const Json& fi = fns[i];
        std::string floc = loc + "/functions/" + std::to_string(i);
        if (!fi.is_array()) fail(floc, "expected an array");
        std::vector<int> vals;
        for (std::size_t x = 0; x < fi.size(); ++x)
            vals.push_back(int(get_int(fi[x], floc + "/" + std::to_string(x), 0,
                                       out.sys.size_f - 1)));
        out.sys.f.push_back(std::move(vals));
    }
    try {
        out.sys.validate_shape();
    } catch (const Error& e) {
        fail(loc, e.what());
    }
    if (j.contains("n")) out.n = get_int(j["n"], loc + "/n", 0, 1000000000);
    if (j.contains("mode")) {
        const Json& m = j["mode"];
        if (!m.is_string()) fail(loc + "/mode", "expected \"pairwise\" or \"uniform\"");
        std::string s = m.get<std::string>();
        if (s == "pairwise")
            out.mode = partition::Mode::Pairwise;
        else if (s == "uniform")
            out.mode = partition::Mode::Uniform;
        else
            fail(loc + "/mode", "expected \"pairwise\" or \"uniform\"");
    }
    return out;
}

inline Json encode_partition(const PartitionPayload& p) {
    Json j = Json::object();
    j["size_e"] = p.sys.size_e;
    j["size_f"] = p.sys.size_f;
    Json fns = Json::array();
    for (const auto& fi : p.sys.f) fns.push_back(fi);
    j["functions"] = std::move(fns);
    if (p.n) j["n"] = *p.n;
    if (p.mode) j["mode"] = *p.mode == partition::Mode::Pairwise ? "pairwise" : "uniform";
    return j;
}

// ---------------------------------------------------------------------------
// tiling payload: either a concrete tile plus translate-system parameters, or
// a construction request {"epsilon": surd}

struct TilingPayload {
    std::optional<Surd> epsilon;  // construction request form
    tiling::ColumnTile tile;      // concrete form
    tiling::TilingSpec spec;
};

inline TilingPayload decode_tiling(const Json& j, const std::string& loc) {
    TilingPayload out;
    if (j.is_object() && j.contains("epsilon")) {
        check_keys(j, loc, {"epsilon"});
        out.epsilon = get_surd(member(j, loc, "epsilon"), loc + "/epsilon");
        return out;
    }
    check_keys(j, loc, {"fibers", "q", "beta", "alpha"});
    const Json& fibers = member(j, loc, "fibers");
    if (!fibers.is_array()) fail(loc + "/fibers", "expected an array");
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        const Json& f = fibers[i];
        std::string floc = loc + "/fibers/" + std::to_string(i);
        check_keys(f, floc, {"h", "intervals"});
        int h = int(get_int(member(f, floc, "h"), floc + "/h", -1000000, 1000000));
        if (out.tile.fibers.count(h)) fail(floc + "/h", "duplicate fiber height");
        const Json& ivs = member(f, floc, "intervals");
        if (!ivs.is_array()) fail(floc + "/intervals", "expected an array");
        std::vector<tiling::RawInterval> raw;
        for (std::size_t t = 0; t < ivs.size(); ++t) {
            const Json& iv = ivs[t];
            std::string ivloc = floc + "/intervals/" + std::to_string(t);
            if (!iv.is_array() || iv.size() != 2) fail(ivloc, "expected an [a, b] pair of surds");
            raw.push_back({get_surd(iv[0], ivloc + "/0"), get_surd(iv[1], ivloc + "/1")});
        }
        try {
            out.tile.fibers[h] = tiling::CircleIntervalSet::normalize(raw);
        } catch (const Error& e) {
            fail(floc + "/intervals", e.what());
        }
    }
    out.spec.q = int(get_int(member(j, loc, "q"), loc + "/q", 1, 1000000));
    const Json& beta = member(j, loc, "beta");
    const Json& alpha = member(j, loc, "alpha");
    if (!beta.is_array()) fail(loc + "/beta", "expected an array");
    if (!alpha.is_array()) fail(loc + "/alpha", "expected an array");
    for (std::size_t i = 0; i < beta.size(); ++i)
        out.spec.beta.push_back(get_surd(beta[i], loc + "/beta/" + std::to_string(i)));
    for (std::size_t i = 0; i < alpha.size(); ++i)
        out.spec.alpha.push_back(get_surd(alpha[i], loc + "/alpha/" + std::to_string(i)));
    try {
        out.tile.validate();
        out.spec.validate();
    } catch (const Error& e) {
        fail(loc, e.what());
    }
    return out;
}

inline Json encode_tiling(const TilingPayload& p) {
    Json j = Json::object();
    if (p.epsilon) {
        j["epsilon"] = put_surd(*p.epsilon);
        return j;
    }
    Json fibers = Json::array();
    for (const auto& [h, set] : p.tile.fibers) {
        Json f = Json::object();
        f["h"] = h;
        Json ivs = Json::array();
        for (const auto& [lo, hi] : set.intervals())
            ivs.push_back(Json::array({put_surd(lo), put_surd(hi)}));
        f["intervals"] = std::move(ivs);
        fibers.push_back(std::move(f));
    }
    j["fibers"] = std::move(fibers);
    j["q"] = p.spec.q;
    Json beta = Json::array(), alpha = Json::array();
    for (const Surd& b : p.spec.beta) beta.push_back(put_surd(b));
    for (const Surd& a : p.spec.alpha) alpha.push_back(put_surd(a));
    j["beta"] = std::move(beta);
    j["alpha"] = std::move(alpha);
    return j;
}

// ---------------------------------------------------------------------------
// cce payload: game size plus optional profile multiset

struct CcePayload {
    int s = 2;
    std::optional<std::vector<cce::ActionProfile>> profiles;
};

inline CcePayload decode_cce(const Json& j, const std::string& loc) {
    check_keys(j, loc, {"s", "profiles"});
    CcePayload out;
    out.s = int(get_int(member(j, loc, "s"), loc + "/s", 2, 100));
    if (j.contains("profiles")) {
        const Json& ps = j["profiles"];
        if (!ps.is_array()) fail(loc + "/profiles", "expected an array");
        int n = out.s * (out.s - 1);
        std::vector<cce::ActionProfile> profiles;
        for (std::size_t t = 0; t < ps.size(); ++t) {
            const Json& p = ps[t];
            std::string ploc = loc + "/profiles/" + std::to_string(t);
            if (!p.is_array() || int(p.size()) != n)
                fail(ploc, "expected an array of " + std::to_string(n) + " actions");
            cce::ActionProfile a;
            for (std::size_t i = 0; i < p.size(); ++i) {
                long long v = get_int(p[i], ploc + "/" + std::to_string(i), -1, 1);
                if (v == 0) fail(ploc + "/" + std::to_string(i), "actions are +1 or -1");
                a.push_back(int(v));
            }
            profiles.push_back(std::move(a));
        }
        out.profiles = std::move(profiles);
    }
    return out;
}

inline Json encode_cce(const CcePayload& p) {
    Json j = Json::object();
    j["s"] = p.s;
    if (p.profiles) {
        Json ps = Json::array();
        for (const auto& a : *p.profiles) ps.push_back(a);
        j["profiles"] = std::move(ps);
    }
    return j;
}

// ---------------------------------------------------------------------------
// Seeded instance generators (payload form {"generate": {...}}): every
// generator is a pure function of (parameters, seed)

inline bool is_generator_payload(const Json& j) { return j.is_object() && j.contains("generate"); }

inline Json generate_payload(const std::string& kind, const Json& payload, const std::string& loc,
                             std::uint64_t seed) {
    check_keys(payload, loc, {"generate"});
    const Json& g = payload["generate"];
    std::string gloc = loc + "/generate";
    Rng rng(seed);
    if (kind == "kkos") {
        check_keys(g, gloc, {"n"});
        int n = int(get_int(member(g, gloc, "n"), gloc + "/n", 1, 64));
        KkosPayload p;
        p.n = n;
        for (int v = 1; v < n; ++v)  // random forest: each non-root picks an
            if (rng.coin()) p.edges.push_back({int(rng.uniform(0, v - 1)), v});  // earlier parent
        std::vector<Rational> y = rng.distribution(n);
        std::vector<Rational> c;
        for (int v = 0; v < n; ++v) c.push_back(rng.rational(6, 3));
        p.y = y;
        p.c = c;
        return encode_kkos(p);
    }
    if (kind == "wilber") {
        check_keys(g, gloc, {"n", "length"});
        int n = int(get_int(member(g, gloc, "n"), gloc + "/n", 1, 4096));
        int len = int(get_int(member(g, gloc, "length"), gloc + "/length", 0, 100000));
        wilber::ColoredSequence z;
        z.n = n;
        for (int i = 0; i < len; ++i)
            z.items.push_back({int(rng.uniform(1, n)),
                               rng.coin() ? wilber::Color::Red : wilber::Color::Blue});
        return encode_wilber(z);
    }
    if (kind == "heap") {
        check_keys(g, gloc, {"m", "policy"});
        int m = int(get_int(member(g, gloc, "m"), gloc + "/m", 0, 100000));
        const Json& pol = member(g, gloc, "policy");
        if (!pol.is_string()) fail(gloc + "/policy", "expected a policy name");
        std::string s = pol.get<std::string>();
        heap::TracePolicy policy = heap::TracePolicy::Fifo;
        if (s == "fifo")
            policy = heap::TracePolicy::Fifo;
        else if (s == "stack")
            policy = heap::TracePolicy::Stack;
        else if (s == "random-present")
            policy = heap::TracePolicy::RandomPresent;
        else
            fail(gloc + "/policy", "expected \"fifo\", \"stack\" or \"random-present\"");
        return encode_heap(heap::random_trace(seed, m, policy));
    }
    if (kind == "partition") {
        check_keys(g, gloc, {"size_e", "size_f", "k"});
        int size_e = int(get_int(member(g, gloc, "size_e"), gloc + "/size_e", 1, 2000));
        int size_f = int(get_int(member(g, gloc, "size_f"), gloc + "/size_f", 1, 2000));
        int k = int(get_int(member(g, gloc, "k"), gloc + "/k", 1, 20));
        if (size_f < k) fail(gloc, "need size_f >= k for pointwise distinct functions");
        PartitionPayload p;
        p.sys.size_e = size_e;
        p.sys.size_f = size_f;
        p.sys.k = k;
        p.sys.f.assign(k, std::vector<int>(size_e));
        std::vector<int> vals(size_f);
        for (int i = 0; i < size_f; ++i) vals[i] = i;
        for (int x = 0; x < size_e; ++x) {  // distinct values per element
            rng.shuffle(vals);
            for (int i = 0; i < k; ++i) p.sys.f[i][x] = vals[i];
        }
        return encode_partition(p);
    }
    if (kind == "cce") {
        check_keys(g, gloc, {"s", "k"});
        CcePayload p;
        p.s = int(get_int(member(g, gloc, "s"), gloc + "/s", 2, 3));
        int k = int(get_int(member(g, gloc, "k"), gloc + "/k", 1, 4096));
        int n = p.s * (p.s - 1);
        std::vector<cce::ActionProfile> profiles;
        for (int t = 0; t < k; ++t)
            profiles.push_back(cce::decode_profile(n, int(rng.uniform(0, (1 << n) - 1))));
        p.profiles = std::move(profiles);
        return encode_cce(p);
    }
    fail(loc, "kind \"" + kind + "\" has no generator");
}

// Canonical serialization of a parsed instance: decode, then re-encode.  The
// result is byte-stable, so serialize(parse(x)) is the identity on canonical
// inputs and canonicalizes everything else.
inline Json canonical_instance(const Instance& inst) {
    const std::string loc = "/payload";
    if (is_generator_payload(inst.payload)) {
        generate_payload(inst.kind, inst.payload, loc, 0);  // validate parameters
        Json payload = Json::object();
        payload["generate"] = inst.payload["generate"];
        return envelope(inst.kind, std::move(payload));
    }
    if (inst.kind == "kkos") return envelope(inst.kind, encode_kkos(decode_kkos(inst.payload, loc)));
    if (inst.kind == "wilber")
        return envelope(inst.kind, encode_wilber(decode_wilber(inst.payload, loc)));
    if (inst.kind == "heap") return envelope(inst.kind, encode_heap(decode_heap(inst.payload, loc)));
    if (inst.kind == "partition")
        return envelope(inst.kind, encode_partition(decode_partition(inst.payload, loc)));
    if (inst.kind == "tiling")
        return envelope(inst.kind, encode_tiling(decode_tiling(inst.payload, loc)));
    return envelope(inst.kind, encode_cce(decode_cce(inst.payload, loc)));
}

}  // namespace exb::io
