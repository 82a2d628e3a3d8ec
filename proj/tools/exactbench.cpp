// Command-line front end: every module behind one binary, JSON in, JSON out.
// Exit codes: 0 = verdict holds / solved, 1 = violation or infeasibility
// (always with a witness), 2 = input or usage error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exactbench/io.hpp"

namespace {

using exb::Error;
using exb::ParseError;
using exb::Rational;
using exb::Surd;
using Json = exb::io::Json;

struct Options {
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string format = "json";
    std::optional<std::string> epsilon;      // rational text, e.g. "1/2"
    std::optional<long long> assert_greater;
    std::optional<int> kmax;
    bool decide = false;                     // kkos reduce: also run the decision oracle
    std::vector<std::string> inputs;
};

struct Report {
    std::string verdict = "holds";  // holds | violated | infeasible | error
    Json quantities = Json::object();
    std::optional<Json> witness;

    int exit_code() const {
        if (verdict == "holds") return 0;
        if (verdict == "error") return 2;
        return 1;
    }
};

Report error_report(const std::string& message, const std::string& location = "") {
    Report rep;
    rep.verdict = "error";
    rep.quantities = Json::object();
    rep.quantities["message"] = message;
    if (!location.empty()) rep.quantities["location"] = location;
    return rep;
}

Rational require_epsilon(const Options& opt) {
    if (!opt.epsilon) throw Error("this subcommand requires --epsilon (a rational such as 1/2)");
    return Rational::parse(*opt.epsilon);
}

Json rat(const Rational& r) { return exb::io::put_rational(r); }
Json srd(const Surd& s) { return exb::io::put_surd(s); }

Json rat_vec(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(rat(r));
    return a;
}

// ---------------------------------------------------------------------------
// kkos

Report run_kkos_solve(const exb::io::KkosPayload& p) {
    exb::kkos::KkosInstance inst = p.instance();
    exb::kkos::EquilibriumSolution sol = exb::kkos::forest_optimize(inst);
    Report rep;
    rep.quantities["cost"] = rat(sol.cost);
    rep.quantities["support"] = sol.support;
    rep.quantities["x"] = rat_vec(sol.x);
    if (inst.B) {
        rep.quantities["threshold"] = rat(*inst.B);
        if (sol.cost > *inst.B) {
            rep.verdict = "violated";  // optimum exceeds the requested budget
            Json w = Json::object();
            w["cost"] = rat(sol.cost);
            w["threshold"] = rat(*inst.B);
            rep.witness = w;
        }
    }
    return rep;
}

Report run_kkos_reduce(const exb::io::KkosPayload& p, const Options& opt) {
    if (!p.k) throw Error("kkos reduce requires field \"k\" in the payload");
    exb::Graph h = p.graph();
    exb::kkos::KkosInstance inst = exb::kkos::clique_reduction(h, *p.k);
    exb::io::KkosPayload out;
    out.n = inst.graph.n();
    out.edges = inst.graph.edges();
    out.y = inst.y;
    out.c = inst.c;
    out.B = inst.B;
    Report rep;
    rep.quantities["instance"] = exb::io::envelope("kkos", exb::io::encode_kkos(out));
    if (opt.decide) {
        auto sup = exb::kkos::clique_decision_via_reduction(h, *p.k);
        rep.quantities["clique_decision"] = sup.has_value();
        if (sup) rep.quantities["winning_support"] = *sup;
    }
    return rep;
}

Report run_kkos_certify(const exb::io::KkosPayload& p) {
    if (!p.support) throw Error("kkos certify requires field \"support\" in the payload");
    exb::kkos::KkosInstance inst = p.instance();
    exb::kkos::SupportCertificate cert = exb::kkos::support_feasibility_lp(inst, *p.support);
    Report rep;
    rep.quantities["margin"] = rat(cert.delta);
    switch (cert.status) {
        case exb::kkos::CertStatus::Certified:
            rep.quantities["x"] = rat_vec(cert.x);
            rep.quantities["cost"] = rat(cert.cost);
            break;
        case exb::kkos::CertStatus::ZeroMargin: {
            rep.verdict = "infeasible";
            Json w = Json::object();
            w["reason"] = "no strictly positive distribution on the support satisfies the "
                          "mass equalities within budget";
            w["margin"] = rat(cert.delta);
            rep.witness = w;
            break;
        }
        case exb::kkos::CertStatus::Infeasible: {
            rep.verdict = "infeasible";
            Json w = Json::object();
            w["reason"] = "the support LP is infeasible";
            rep.witness = w;
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// wilber

Report run_wilber_bound(const exb::wilber::ColoredSequence& z) {
    Report rep;
    rep.quantities["w"] = exb::wilber::wilber_bound(z.keys(), z.n);
    auto [zr, zb] = exb::wilber::split_by_color(z);
    rep.quantities["w_red"] = exb::wilber::wilber_bound(zr, z.n);
    rep.quantities["w_blue"] = exb::wilber::wilber_bound(zb, z.n);
    rep.quantities["length"] = z.items.size();
    return rep;
}

Report run_wilber_merge_check(const exb::wilber::ColoredSequence& z) {
    exb::wilber::MergeReport m = exb::wilber::merge_report(z);
    Report rep;
    rep.quantities["w"] = m.w_z;
    rep.quantities["w_red"] = m.w_r;
    rep.quantities["w_blue"] = m.w_b;
    rep.quantities["bound"] = m.bound;
    if (!m.holds) {
        rep.verdict = "violated";
        Json w = Json::object();
        w["w"] = m.w_z;
        w["bound"] = m.bound;
        rep.witness = w;
    }
    return rep;
}

Report run_wilber_decompose(const exb::wilber::ColoredSequence& z) {
    std::vector<exb::wilber::IntervalReport> rows = exb::wilber::full_decomposition(z);
    Report rep;
    Json out = Json::array();
    long long total = 0;
    for (const auto& r : rows) {
        Json row = Json::object();
        row["interval"] = Json::array({r.interval.lo, r.interval.hi});
        row["alpha"] = r.alpha;
        row["mono"] = r.mono;
        row["m_i"] = r.m_i;
        row["new_left"] = r.new_l;
        row["new_right"] = r.new_r;
        row["alpha_red"] = r.alpha_r;
        row["alpha_blue"] = r.alpha_b;
        row["identity"] = r.identity_holds;
        row["charging"] = r.charging_holds;
        bool ok = r.identity_holds && r.charging_holds && r.charge_targets_valid;
        if (!ok && !rep.witness) {
            rep.verdict = "violated";
            rep.witness = row;
        }
        total += r.alpha;
        out.push_back(std::move(row));
    }
    rep.quantities["intervals"] = std::move(out);
    rep.quantities["w"] = total;
    return rep;
}

// ---------------------------------------------------------------------------
// heap

Report run_heap_analyze(const exb::heap::HeapTrace& trace) {
    exb::heap::TraceAnalysis a = exb::heap::analyze_trace(trace);
    Report rep;
    Json rows = Json::array();
    for (const auto& e : a.extracted) {
        Json row = Json::object();
        row["id"] = e.id;
        row["insert"] = e.t_insert;
        row["extract"] = e.t_extract;
        row["lifetime"] = e.l;
        row["peak_younger"] = e.k;
        rows.push_back(std::move(row));
    }
    rep.quantities["extracted"] = std::move(rows);
    rep.quantities["never_extracted"] = a.never_extracted;
    rep.quantities["m"] = trace.m();
    return rep;
}

Report run_heap_check(const exb::heap::HeapTrace& trace, const Options& opt) {
    Rational eps = require_epsilon(opt);
    Report rep;
    rep.quantities["epsilon"] = rat(eps);
    rep.quantities["b"] = exb::heap::level_b(eps);

    if (auto w = exb::heap::packing_check(trace)) {
        rep.verdict = "violated";
        Json jw = Json::object();
        jw["lemma"] = "packing";
        jw["time"] = w->t;
        jw["k"] = w->k;
        jw["ids"] = w->ids;
        rep.witness = jw;
        return rep;
    }
    rep.quantities["packing"] = "holds";

    Json levels = Json::array();
    for (const auto& row : exb::heap::level_area_check(trace, eps)) {
        Json jr = Json::object();
        jr["level"] = row.j;
        jr["count"] = row.count;
        jr["lifetime_sum"] = row.sum_l.str();
        jr["cap"] = row.cap.str();
        jr["holds"] = row.holds;
        if (!row.holds && !rep.witness) {
            rep.verdict = "violated";
            Json jw = jr;
            jw["lemma"] = "level-area";
            rep.witness = jw;
        }
        levels.push_back(std::move(jr));
    }
    rep.quantities["levels"] = std::move(levels);
    if (rep.verdict != "holds") return rep;

    exb::heap::InequalityReport ineq = exb::heap::explicit_inequality_check(trace, eps);
    rep.quantities["lifetime_log_sum"] = ineq.lhs_log2;
    rep.quantities["peak_log_bound"] = ineq.rhs_log2;
    if (!ineq.holds) {
        rep.verdict = "violated";
        Json jw = Json::object();
        jw["lemma"] = "log-sum";
        jw["lifetime_log_sum"] = ineq.lhs_log2;
        jw["peak_log_bound"] = ineq.rhs_log2;
        rep.witness = jw;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// partition

Report run_partition_color(const exb::io::PartitionPayload& p) {
    if (!p.n || !p.mode)
        throw Error("partition color requires fields \"n\" and \"mode\" in the payload");
    exb::partition::ValidationResult val = exb::partition::validate_system(p.sys, *p.n, *p.mode);
    Report rep;
    if (!val.ok) {
        rep.verdict = "infeasible";
        Json w = Json::object();
        w["reason"] = "the system is not " +
                      std::string(*p.mode == exb::partition::Mode::Pairwise ? "pairwise" : "uniformly") +
                      " bounded";
        w["value"] = val.z;
        w["function"] = val.p;
        if (val.q >= 0) w["other_function"] = val.q;
        rep.witness = w;
        return rep;
    }
    exb::partition::ColoringResult col = exb::partition::color_system(p.sys, *p.n, *p.mode);
    rep.quantities["palette"] = col.palette;
    rep.quantities["palette_bound"] = col.palette_bound;
    rep.quantities["colors"] = col.colors;
    if (*p.mode == exb::partition::Mode::Pairwise) {
        rep.quantities["max_indegree"] = col.max_indegree;
        rep.quantities["indegree_bound"] = col.indegree_bound;
    }
    exb::Graph g = exb::partition::build_conflict_graph(p.sys);
    bool proper = exb::partition::is_proper(g, col.colors);
    bool partitioned = exb::partition::partition_property(p.sys, col.colors);
    rep.quantities["proper"] = proper;
    rep.quantities["partition_property"] = partitioned;
    if (!proper || !partitioned || col.palette > col.palette_bound) {
        rep.verdict = "violated";
        Json w = Json::object();
        w["proper"] = proper;
        w["partition_property"] = partitioned;
        w["palette"] = col.palette;
        w["palette_bound"] = col.palette_bound;
        rep.witness = w;
    }
    return rep;
}

Report run_partition_counterexample(const Json& payload) {
    exb::io::check_keys(payload, "/payload", {"m", "k"});
    int m = int(exb::io::get_int(exb::io::member(payload, "/payload", "m"), "/payload/m", 2, 200));
    int k = 3;
    if (payload.contains("k")) k = int(exb::io::get_int(payload["k"], "/payload/k", 3, 20));
    exb::partition::ShiftSystem shift = exb::partition::shift_counterexample(m, k);
    exb::io::PartitionPayload out;
    out.sys = shift.sys;
    Report rep;
    rep.quantities["instance"] = exb::io::envelope("partition", exb::io::encode_partition(out));
    Json labels = Json::array();
    for (auto [i, j] : shift.labels) labels.push_back(Json::array({i, j}));
    rep.quantities["labels"] = std::move(labels);
    return rep;
}

Report run_partition_chi(const exb::io::PartitionPayload& p, const Options& opt) {
    exb::Graph g = exb::partition::build_conflict_graph(p.sys);
    int chi = exb::partition::chromatic_number(g);
    Report rep;
    rep.quantities["chi"] = chi;
    rep.quantities["vertices"] = g.n();
    rep.quantities["edges"] = g.edges().size();
    if (opt.assert_greater) {
        rep.quantities["asserted_greater_than"] = *opt.assert_greater;
        if (!(chi > *opt.assert_greater)) {
            rep.verdict = "violated";
            Json w = Json::object();
            w["chi"] = chi;
            w["required_greater_than"] = *opt.assert_greater;
            rep.witness = w;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// tiling

Json split_report_json(const exb::tiling::SplitReport& split) {
    Json residues = Json::array();
    for (const auto& r : split.residues) {
        Json jr = Json::object();
        jr["r"] = r.r;
        jr["ok"] = r.check.ok;
        if (r.check.overlap)
            jr["overlap"] = Json::array({srd(r.check.overlap->first), srd(r.check.overlap->second)});
        if (r.check.uncovered)
            jr["uncovered"] =
                Json::array({srd(r.check.uncovered->first), srd(r.check.uncovered->second)});
        residues.push_back(std::move(jr));
    }
    return residues;
}

Report run_tiling_verify(const exb::io::TilingPayload& p) {
    if (p.epsilon) throw Error("tiling verify needs a concrete tile, not a construction request");
    exb::tiling::SplitReport split = exb::tiling::splitting_criterion(p.tile, p.spec);
    Report rep;
    rep.quantities["residues"] = split_report_json(split);
    exb::tiling::FiberReport fib = exb::tiling::column_tile_necessary_check(p.tile);
    Json measures = Json::array();
    for (const auto& [h, mu] : fib.measures)
        measures.push_back(Json::array({h, srd(mu)}));
    rep.quantities["fiber_measures"] = std::move(measures);
    rep.quantities["column_tile_candidate"] = fib.passes;
    if (!split.ok) {
        rep.verdict = "violated";
        for (const auto& r : split.residues)
            if (!r.check.ok) {
                Json w = Json::object();
                w["r"] = r.r;
                if (r.check.overlap)
                    w["overlap"] =
                        Json::array({srd(r.check.overlap->first), srd(r.check.overlap->second)});
                if (r.check.uncovered)
                    w["uncovered"] = Json::array(
                        {srd(r.check.uncovered->first), srd(r.check.uncovered->second)});
                rep.witness = w;
                break;
            }
    }
    return rep;
}

Report run_tiling_construct(const exb::io::TilingPayload& p) {
    if (!p.epsilon)
        throw Error("tiling construct needs a construction request payload {\"epsilon\": ...}");
    auto [tile, spec] = exb::tiling::build_alpha_construction(*p.epsilon);
    exb::io::TilingPayload out;
    out.tile = tile;
    out.spec = spec;
    Report rep;
    rep.quantities["instance"] = exb::io::envelope("tiling", exb::io::encode_tiling(out));
    exb::tiling::SplitReport split = exb::tiling::splitting_criterion(tile, spec);
    rep.quantities["residues"] = split_report_json(split);
    if (!split.ok) {  // cannot happen for a valid epsilon; report it if it does
        rep.verdict = "violated";
        rep.witness = rep.quantities["residues"];
    }
    return rep;
}

// ---------------------------------------------------------------------------
// cce

Report run_cce_build(const exb::io::CcePayload& p) {
    exb::cce::GameSpec g = exb::cce::build_game(p.s);
    Report rep;
    rep.quantities["s"] = g.s;
    rep.quantities["players"] = [&] {
        Json a = Json::array();
        for (auto [i, j] : g.players) a.push_back(Json::array({i, j}));
        return a;
    }();
    Json pairs = Json::array();
    for (const auto& [pr, set] : g.pair_sets) {
        Json jp = Json::object();
        jp["pair"] = Json::array({pr.first, pr.second});
        Json members = Json::array();
        for (int idx : set)
            members.push_back(Json::array({g.players[idx].first, g.players[idx].second}));
        jp["shared_set"] = std::move(members);
        pairs.push_back(std::move(jp));
    }
    rep.quantities["pair_sets"] = std::move(pairs);
    return rep;
}

Report run_cce_check(const exb::io::CcePayload& p, const Options& opt) {
    if (!p.profiles) throw Error("cce check requires field \"profiles\" in the payload");
    Rational eps = require_epsilon(opt);
    exb::cce::GameSpec g = exb::cce::build_game(p.s);
    exb::cce::UniformDistribution dist{*p.profiles};
    exb::cce::RegretReport reg = exb::cce::max_regret(g, dist);
    exb::cce::CorrelationReport cor = exb::cce::correlation_report(g, dist);
    Report rep;
    rep.quantities["k"] = p.profiles->size();
    rep.quantities["epsilon"] = rat(eps);
    rep.quantities["max_regret"] = rat(reg.max_regret);
    Json per_player = Json::array();
    for (const auto& [player, value] : cor.per_player)
        per_player.push_back(Json::array({Json::array({player.first, player.second}), rat(value)}));
    rep.quantities["player_correlations"] = std::move(per_player);
    Json per_pair = Json::array();
    for (const auto& [pair, value] : cor.per_pair)
        per_pair.push_back(Json::array({Json::array({pair.first, pair.second}), rat(value)}));
    rep.quantities["pair_correlations"] = std::move(per_pair);
    rep.quantities["correlation_identity"] = cor.identity_holds;
    if (reg.max_regret > eps) {
        rep.verdict = "violated";
        Json w = Json::object();
        w["max_regret"] = rat(reg.max_regret);
        w["player"] = Json::array({reg.worst_player.first, reg.worst_player.second});
        w["deviation"] = reg.worst_deviation;
        rep.witness = w;
    }
    return rep;
}

Report run_cce_search(const exb::io::CcePayload& p, const Options& opt) {
    Rational eps = require_epsilon(opt);
    if (!opt.kmax) throw Error("cce search requires --kmax");
    exb::cce::GameSpec g = exb::cce::build_game(p.s);
    auto res = exb::cce::brute_min_k(g, eps, *opt.kmax);
    Report rep;
    rep.quantities["epsilon"] = rat(eps);
    rep.quantities["kmax"] = *opt.kmax;
    if (eps.sign() > 0)
        rep.quantities["support_size_context_bound"] =
            rat(exb::cce::babichenko_upper_bound(2, g.n(), eps));
    if (res) {
        rep.quantities["k"] = res->k;
        Json profs = Json::array();
        for (int code : res->witness_codes) profs.push_back(exb::cce::decode_profile(g.n(), code));
        rep.quantities["witness"] = std::move(profs);
        rep.quantities["witness_regret"] = rat(res->witness_regret);
    } else {
        rep.verdict = "infeasible";
        Json w = Json::object();
        w["reason"] = "no k-uniform distribution with k <= kmax meets the regret target";
        w["kmax"] = *opt.kmax;
        rep.witness = w;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// dispatch

Report run_one(const std::string& group, const std::string& action, const std::string& path,
               const Options& opt) {
    exb::io::Instance inst = exb::io::parse_instance_file(path);
    if (inst.kind != group)
        throw ParseError(path, "instance kind \"" + inst.kind + "\" does not match subcommand \"" +
                                   group + "\"");
    Json payload = inst.payload;
    if (exb::io::is_generator_payload(payload) && group != "partition")
        payload = exb::io::generate_payload(inst.kind, payload, "/payload", opt.seed);

    if (group == "kkos") {
        exb::io::KkosPayload p = exb::io::decode_kkos(payload, "/payload");
        if (action == "solve") return run_kkos_solve(p);
        if (action == "reduce") return run_kkos_reduce(p, opt);
        return run_kkos_certify(p);
    }
    if (group == "wilber") {
        exb::wilber::ColoredSequence z = exb::io::decode_wilber(payload, "/payload");
        if (action == "bound") return run_wilber_bound(z);
        if (action == "merge-check") return run_wilber_merge_check(z);
        return run_wilber_decompose(z);
    }
    if (group == "heap") {
        exb::heap::HeapTrace trace = exb::io::decode_heap(payload, "/payload");
        if (action == "analyze") return run_heap_analyze(trace);
        return run_heap_check(trace, opt);
    }
    if (group == "partition") {
        if (action == "counterexample") return run_partition_counterexample(payload);
        if (exb::io::is_generator_payload(payload))
            payload = exb::io::generate_payload(inst.kind, payload, "/payload", opt.seed);
        exb::io::PartitionPayload p = exb::io::decode_partition(payload, "/payload");
        if (action == "color") return run_partition_color(p);
        return run_partition_chi(p, opt);
    }
    if (group == "tiling") {
        exb::io::TilingPayload p = exb::io::decode_tiling(payload, "/payload");
        if (action == "verify") return run_tiling_verify(p);
        return run_tiling_construct(p);
    }
    exb::io::CcePayload p = exb::io::decode_cce(payload, "/payload");
    if (action == "build") return run_cce_build(p);
    if (action == "check") return run_cce_check(p, opt);
    return run_cce_search(p, opt);
}

int run_all(const std::string& group, const std::string& action, const Options& opt) {
    if (opt.format != "json") {
        std::cout << exb::io::dump([&] {
            Json j = Json::object();
            j["format"] = exb::io::kFormatVersion;
            j["verdict"] = "error";
            j["quantities"] = Json::object();
            j["quantities"]["message"] = "unsupported output format \"" + opt.format + "\"";
            return j;
        }());
        return 2;
    }
    if (opt.inputs.empty()) {
        std::cout << exb::io::dump([&] {
            Json j = Json::object();
            j["format"] = exb::io::kFormatVersion;
            j["verdict"] = "error";
            j["quantities"] = Json::object();
            j["quantities"]["message"] = "no input files given";
            return j;
        }());
        return 2;
    }
    // Reports always appear in input order; --jobs may only change scheduling.
    Json reports = Json::array();
    int exit_code = 0;
    for (const std::string& path : opt.inputs) {
        Report rep;
        auto start = std::chrono::steady_clock::now();
        try {
            rep = run_one(group, action, path, opt);
        } catch (const ParseError& e) {
            rep = error_report(e.what(), e.location);
        } catch (const Error& e) {
            rep = error_report(e.what());
        }
        auto stop = std::chrono::steady_clock::now();
        Json j = Json::object();
        j["format"] = exb::io::kFormatVersion;
        j["subcommand"] = group + " " + action;
        j["input"] = path;
        j["seed"] = opt.seed;
        j["verdict"] = rep.verdict;
        j["quantities"] = rep.quantities;
        if (rep.witness) j["witness"] = *rep.witness;
        j["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        reports.push_back(std::move(j));
        exit_code = std::max(exit_code, rep.exit_code());
    }
    std::cout << exb::io::dump(opt.inputs.size() == 1 ? reports[0] : reports);
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic verification workbench"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--seed", opt.seed, "seed for instance generators");
    app.add_option("--jobs", opt.jobs, "worker count (scheduling only; output order is fixed)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "output format (json)");
    std::string eps_text, assert_text;
    auto* eps_opt = app.add_option("--epsilon", eps_text, "rational epsilon, e.g. 1/2");
    long long assert_greater = 0;
    auto* ag_opt = app.add_option("--assert-greater", assert_greater,
                                  "fail (exit 1) unless the computed chi exceeds this");
    int kmax = 0;
    auto* kmax_opt = app.add_option("--kmax", kmax, "largest support size to try");

    const std::vector<std::pair<std::string, std::vector<std::string>>> tree = {
        {"kkos", {"solve", "reduce", "certify"}},
        {"wilber", {"bound", "merge-check", "decompose"}},
        {"heap", {"analyze", "check"}},
        {"partition", {"color", "counterexample", "chi"}},
        {"tiling", {"verify", "construct"}},
        {"cce", {"build", "check", "search"}},
    };
    std::string chosen_group, chosen_action;
    for (const auto& [group, actions] : tree) {
        CLI::App* gapp = app.add_subcommand(group);
        gapp->require_subcommand(1);
        gapp->fallthrough();  // let global flags appear after the subcommand
        for (const std::string& action : actions) {
            CLI::App* leaf = gapp->add_subcommand(action);
            leaf->fallthrough();
            leaf->add_option("inputs", opt.inputs, "instance files")->expected(-1);
            if (group == "kkos" && action == "reduce")
                leaf->add_flag("--decide", opt.decide, "also run the exponential decision oracle");
            leaf->callback([&chosen_group, &chosen_action, group = group, action = action] {
                chosen_group = group;
                chosen_action = action;
            });
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        Json j = Json::object();
        j["format"] = exb::io::kFormatVersion;
        j["verdict"] = "error";
        j["quantities"] = Json::object();
        j["quantities"]["message"] = std::string("usage: ") + e.what();
        std::cout << exb::io::dump(j);
        return 2;
    }

    if (*eps_opt) opt.epsilon = eps_text;
    if (*ag_opt) opt.assert_greater = assert_greater;
    if (*kmax_opt) opt.kmax = kmax;

    try {
        return run_all(chosen_group, chosen_action, opt);
    } catch (const std::exception& e) {
        Json j = Json::object();
        j["format"] = exb::io::kFormatVersion;
        j["verdict"] = "error";
        j["quantities"] = Json::object();
        j["quantities"]["message"] = e.what();
        std::cout << exb::io::dump(j);
        return 2;
    }
}
