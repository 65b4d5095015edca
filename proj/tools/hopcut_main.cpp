#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hopcut/hopset.hpp"
#include "hopcut/pipeline.hpp"
#include "hopcut/report.hpp"
#include "hopcut/rng.hpp"
#include "hopcut/search.hpp"
#include "hopcut/shortcut.hpp"
#include "hopcut/trace.hpp"
#include "hopcut/verify.hpp"

using namespace hopcut;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;

struct CommonOpts {
    std::string input;
    std::string output;
    std::string preset = "desk";
    uint64_t seed = 1;
    uint64_t rho = 0; // 0 = use the preset formula
    std::string eps = "0.25";
    uint64_t oracle_cap = 512;
    uint64_t pairs_sample = 512;
    unsigned threads = 1;
    std::string format = "structured";
    uint64_t w_bound_exp = 4;
};

LoadedGraph load(const CommonOpts& o) {
    std::ifstream f(o.input);
    if (!f) throw InputError("cannot open " + o.input);
    return read_graph(f, o.w_bound_exp);
}

void put_common(Report& rep, const std::string& cmd, const CommonOpts& o) {
    rep.kv("cmd", cmd);
    rep.kv("input", o.input);
    rep.kv("preset", o.preset);
    rep.kv("seed", o.seed);
    rep.kv("oracle_cap", o.oracle_cap);
    rep.kv("pairs_sample", o.pairs_sample);
}

BuildParams shortcut_params(const CommonOpts& o, const DiGraph& base, Vertex build_n) {
    BuildParams p = BuildParams::make(parse_preset(o.preset), build_n, o.seed);
    p.rho = o.rho != 0 ? o.rho
                       : shortcut_rho_preset(base.n(), std::max<uint64_t>(base.m(), base.n()),
                                             p.omega);
    p.validate();
    return p;
}

HopsetParams hopset_params(const CommonOpts& o, const WDiGraph& g, uint32_t boost_rounds,
                           bool rounded_shell) {
    HopsetParams p =
        HopsetParams::make(parse_preset(o.preset), g.n(), Rational::parse(o.eps), o.seed);
    p.rho = o.rho != 0 ? o.rho
                       : hopset_rho_preset(g.n(), std::max<uint64_t>(g.m(), g.n()));
    if (boost_rounds > 0) p.boost_rounds = boost_rounds;
    p.rounded_shell = rounded_shell;
    p.validate();
    return p;
}

int cmd_generate(const CommonOpts& o, const std::string& type, uint64_t n, uint64_t m,
                 uint64_t layers, uint64_t width, double density, uint64_t wmax) {
    DiGraph g;
    if (type == "dag") {
        g = gen_random_dag(static_cast<Vertex>(n), m, o.seed);
    } else if (type == "layered") {
        g = gen_layered(static_cast<Vertex>(layers), static_cast<Vertex>(width), density, o.seed);
    } else if (type == "path") {
        g = gen_path(static_cast<Vertex>(n));
    } else if (type == "digraph") {
        // General digraph (usually cyclic): uniform ordered pairs.
        Rng rng(mix_stream(o.seed, {0x64696772, n, m}));
        std::vector<std::pair<Vertex, Vertex>> edges;
        uint64_t guard = m * 64 + 64;
        while (edges.size() < m && guard-- > 0) {
            auto u = static_cast<Vertex>(rng.below(n));
            auto v = static_cast<Vertex>(rng.below(n));
            if (u != v) edges.emplace_back(u, v);
        }
        g = DiGraph::from_edge_list(static_cast<Vertex>(n), edges);
    } else {
        throw InputError("unknown --type " + type);
    }
    std::ofstream f(o.output);
    if (!f) throw InputError("cannot open " + o.output);
    if (wmax > 0)
        write_graph(f, randomize_weights(g, wmax, o.seed));
    else
        write_graph(f, g);
    return kExitOk;
}

int cmd_build_shortcut(const CommonOpts& o, bool tc_prune, bool with_verify) {
    auto lg = load(o);
    const DiGraph& g = lg.weighted ? lg.wg.skeleton() : lg.g;
    SccResult scc = scc_condense(g); // for reporting; the pipeline recomputes
    BuildParams p = shortcut_params(o, g, scc.component_count);

    CostMeter meter(g.n());
    auto built = build_shortcut_pipeline(g, p, tc_prune, meter);

    Report rep;
    put_common(rep, "build-shortcut", o);
    rep.kv("n", static_cast<uint64_t>(g.n()));
    rep.kv("m", g.m());
    rep.kv("k", p.k);
    rep.kv("rho", p.rho);
    rep.kv("tc_prune", tc_prune);
    rep.kv("scc_count", static_cast<uint64_t>(built.scc_count));
    rep.kv("star_edges", built.star_edge_count);
    rep.kv("H.size", built.H.size());
    rep.kv("meter.work", meter.work());
    rep.kv("meter.span", meter.span());
    std::ostringstream tr;
    write_trace(tr, built.trace, "trace");
    std::cout << rep.str() << tr.str();

    bool ok = true;
    if (with_verify && g.n() <= o.oracle_cap) {
        auto v = verify_shortcut(g, built.H, o.oracle_cap, o.pairs_sample, o.seed);
        std::cout << "verify.reach_preserved=" << v.reach_preserved << '\n'
                  << "verify.edges_valid=" << v.edges_valid << '\n'
                  << "verify.beta_meas=" << v.beta_meas << '\n';
        ok = v.ok();
    }
    if (!o.output.empty()) {
        std::ofstream f(o.output);
        if (!f) throw InputError("cannot open " + o.output);
        write_augment(f, built.H, g.n());
    }
    std::cout << "SUMMARY ok=" << (ok ? 1 : 0) << " cmd=build-shortcut H=" << built.H.size()
              << " seed=" << o.seed << "\n";
    return ok ? kExitOk : kExitVerify;
}

int cmd_build_hopset(const CommonOpts& o, bool trunc_prune, uint32_t boost_rounds,
                     bool rounded_shell, bool with_verify) {
    auto lg = load(o);
    if (!lg.weighted) throw InputError("build-hopset expects a weighted graph");
    HopsetParams p = hopset_params(o, lg.wg, boost_rounds, rounded_shell);

    CostMeter meter(lg.wg.n());
    auto built = cfr_build(lg.wg, p, trunc_prune, meter);

    Report rep;
    put_common(rep, "build-hopset", o);
    rep.kv("n", static_cast<uint64_t>(lg.wg.n()));
    rep.kv("m", lg.wg.m());
    rep.kv("w_max", lg.wg.w_max());
    rep.kv("k", p.k);
    rep.kv("lambda", p.lambda);
    rep.kv("L", static_cast<uint64_t>(p.L));
    rep.kv("eta_min", p.eta_min);
    rep.kv("sigma_max", p.sigma_max);
    rep.kv("rho", p.rho);
    rep.kv("eps", o.eps);
    rep.kv("boost_rounds", static_cast<uint64_t>(p.boost_rounds));
    rep.kv("trunc_prune", trunc_prune);
    rep.kv("rounded_shell", rounded_shell);
    rep.kv("H.size", built.H.size());
    rep.kv("meter.work", meter.work());
    rep.kv("meter.span", meter.span());
    std::ostringstream tr;
    write_trace(tr, built.trace, "trace");
    std::cout << rep.str() << tr.str();

    bool ok = true;
    if (with_verify && lg.wg.n() <= o.oracle_cap) {
        auto v = verify_hopset(lg.wg, built.H, p.eps, o.oracle_cap, o.pairs_sample, o.seed);
        std::cout << "verify.dist_preserved=" << v.reach_preserved << '\n'
                  << "verify.edges_valid=" << v.edges_valid << '\n'
                  << "verify.beta_meas=" << v.beta_meas << '\n';
        ok = v.ok();
    }
    if (!o.output.empty()) {
        std::ofstream f(o.output);
        if (!f) throw InputError("cannot open " + o.output);
        write_augment(f, built.H, lg.wg.n());
    }
    std::cout << "SUMMARY ok=" << (ok ? 1 : 0) << " cmd=build-hopset H=" << built.H.size()
              << " seed=" << o.seed << "\n";
    return ok ? kExitOk : kExitVerify;
}

int cmd_verify(const CommonOpts& o, const std::string& augment_path, const std::string& kind) {
    auto lg = load(o);
    Vertex n = lg.weighted ? lg.wg.n() : lg.g.n();
    std::ifstream af(augment_path);
    if (!af) throw InputError("cannot open " + augment_path);
    AugmentSet h = read_augment(af, n);

    Report rep;
    put_common(rep, "verify", o);
    rep.kv("augment", augment_path);
    rep.kv("kind", kind);
    VerifyReport v;
    if (kind == "shortcut") {
        const DiGraph& g = lg.weighted ? lg.wg.skeleton() : lg.g;
        v = verify_shortcut(g, h, o.oracle_cap, o.pairs_sample, o.seed);
    } else if (kind == "hopset") {
        if (!lg.weighted) throw InputError("hopset verification expects a weighted graph");
        v = verify_hopset(lg.wg, h, Rational::parse(o.eps), o.oracle_cap, o.pairs_sample, o.seed);
    } else {
        throw InputError("unknown --kind " + kind);
    }
    rep.kv("reach_preserved", v.reach_preserved);
    rep.kv("edges_valid", v.edges_valid);
    rep.kv("beta_meas", static_cast<uint64_t>(v.beta_meas));
    rep.kv("H.size", v.size_h);
    rep.kv("sampled_pairs", v.sampled_pairs);
    rep.kv("worst_pair", std::to_string(v.worst_u) + "," + std::to_string(v.worst_v));
    std::cout << rep.str();
    if (!v.ok()) {
        std::cout << "SUMMARY ok=0 cmd=verify failed="
                  << (!v.edges_valid ? "edges_valid" : "reach_preserved") << "\n";
        return kExitVerify;
    }
    std::cout << "SUMMARY ok=1 cmd=verify beta_meas=" << v.beta_meas << "\n";
    return kExitOk;
}

int cmd_reach(const CommonOpts& o, Vertex source, bool tc_prune,
              const std::string& augment_path) {
    auto lg = load(o);
    const DiGraph& g = lg.weighted ? lg.wg.skeleton() : lg.g;
    if (source >= g.n()) throw InputError("source out of range");

    AugmentSet h;
    CostMeter build_meter(g.n());
    if (!augment_path.empty()) {
        std::ifstream af(augment_path);
        if (!af) throw InputError("cannot open " + augment_path);
        h = read_augment(af, g.n());
    } else {
        SccResult scc = scc_condense(g);
        BuildParams p = shortcut_params(o, g, scc.component_count);
        h = build_shortcut_pipeline(g, p, tc_prune, build_meter).H;
    }

    DiGraph aug = union_graph(g, h);
    CostMeter meter(g.n());
    auto res = par_bfs(aug, source, meter);

    // H must never change reachability; cross-check against a plain BFS.
    auto base = bfs(g, source, Dir::fwd);
    bool consistent = true;
    uint64_t count = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        bool a = res.hops.dist[v] != kUnreachedHops;
        bool b = base.dist[v] != kUnreachedHops;
        if (a != b) consistent = false;
        if (a) ++count;
    }

    Report rep;
    put_common(rep, "reach", o);
    rep.kv("source", static_cast<uint64_t>(source));
    rep.kv("H.size", h.size());
    rep.kv("reachable_count", count);
    rep.kv("levels", static_cast<uint64_t>(res.levels));
    rep.kv("build.work", build_meter.work());
    rep.kv("build.span", build_meter.span());
    rep.kv("bfs.work", meter.work());
    rep.kv("bfs.span", meter.span());
    rep.kv("consistent_with_plain_bfs", consistent);
    std::cout << rep.str();
    std::cout << "reachable=";
    bool first = true;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (res.hops.dist[v] == kUnreachedHops) continue;
        std::cout << (first ? "" : ",") << v;
        first = false;
    }
    std::cout << "\nSUMMARY ok=" << (consistent ? 1 : 0) << " cmd=reach count=" << count
              << " span=" << meter.span() << "\n";
    return consistent ? kExitOk : kExitVerify;
}

int cmd_sssp(const CommonOpts& o, Vertex source, bool trunc_prune, uint32_t boost_rounds,
             uint32_t hopbound) {
    auto lg = load(o);
    if (!lg.weighted) throw InputError("sssp expects a weighted graph");
    const WDiGraph& g = lg.wg;

    SsspOptions opt;
    opt.eps = Rational::parse(o.eps);
    opt.rho = o.rho;
    opt.trunc_prune = trunc_prune;
    opt.boost_rounds = boost_rounds;
    opt.hopbound = hopbound;
    opt.preset = parse_preset(o.preset);
    opt.seed = o.seed;
    opt.oracle_cap = o.oracle_cap;
    auto res = approx_sssp(g, source, opt);

    Report rep;
    put_common(rep, "sssp", o);
    rep.kv("source", static_cast<uint64_t>(source));
    rep.kv("eps", o.eps);
    rep.kv("h0", static_cast<uint64_t>(res.h0));
    rep.kv("H.size", res.h_size);
    rep.kv("build.work", res.build_meter.work());
    rep.kv("build.span", res.build_meter.span());
    rep.kv("search.work", res.search_meter.work());
    rep.kv("search.span", res.search_meter.span());
    bool ok = true;
    if (res.have_oracle) {
        ok = res.ratio_ok;
        rep.kv("max_ratio", res.max_ratio);
        rep.kv("ratio_within_eps", ok);
    }
    std::cout << rep.str();
    for (Vertex v = 0; v < g.n(); ++v) {
        if (res.num[v] < 0)
            std::cout << "dist." << v << "=unreachable\n";
        else if (res.num[v] % res.den[v] == 0)
            std::cout << "dist." << v << "=" << res.num[v] / res.den[v] << "\n";
        else
            std::cout << "dist." << v << "=" << res.num[v] << "/" << res.den[v] << "\n";
    }
    std::cout << "SUMMARY ok=" << (ok ? 1 : 0) << " cmd=sssp H=" << res.h_size << "\n";
    return ok ? kExitOk : kExitVerify;
}

int cmd_bench(const CommonOpts& o, uint64_t n, const std::string& densities, uint64_t n_seeds,
              bool tc_prune) {
    SweepConfig cfg;
    cfg.n = static_cast<Vertex>(n);
    cfg.preset = parse_preset(o.preset);
    cfg.tc_prune = tc_prune;
    cfg.oracle_cap = o.oracle_cap;
    for (uint64_t s = 0; s < n_seeds; ++s) cfg.seeds.push_back(o.seed + s);
    std::istringstream ds(densities);
    std::string tok;
    while (std::getline(ds, tok, ',')) {
        if (tok == "n")
            cfg.densities.push_back(n);
        else if (tok == "n1.5")
            cfg.densities.push_back(static_cast<uint64_t>(std::pow(double(n), 1.5)));
        else if (tok == "n2")
            cfg.densities.push_back(n * n);
        else
            cfg.densities.push_back(std::stoull(tok));
    }
    auto rows = density_sweep(cfg);
    Report rep;
    put_common(rep, "bench", o);
    rep.kv("n", n);
    rep.kv("tc_prune", tc_prune);
    rep.kv("seeds", n_seeds);
    std::cout << rep.str();
    std::cout << "m rho median_beta median_H median_work median_span median_parbfs_span\n";
    for (const auto& r : rows) {
        std::cout << r.m << ' ' << r.rho << ' ' << r.median_beta << ' ' << r.median_h_size << ' '
                  << r.median_work << ' ' << r.median_span << ' ' << r.median_parbfs_span << "\n";
    }
    std::cout << "SUMMARY ok=1 cmd=bench rows=" << rows.size() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directed shortcut sets and (1+eps)-hopsets with built-in verification"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string type = "dag", kind = "shortcut", augment_path, densities = "n,n1.5,n2";
    uint64_t n = 64, m = 128, layers = 8, width = 8, wmax = 0, n_seeds = 5;
    double density = 0.5;
    Vertex source = 0;
    std::string tc_prune = "on", trunc_prune = "on";
    uint32_t boost_rounds = 0, hopbound = 0;
    bool rounded_shell = false, no_verify = false;

    auto add_common = [&](CLI::App* c, bool needs_input) {
        if (needs_input) c->add_option("-i,--input", o.input, "graph file")->required();
        c->add_option("--seed", o.seed, "PRNG seed");
        c->add_option("--preset", o.preset, "paper|desk");
        c->add_option("--rho", o.rho, "override the preset rho formula");
        c->add_option("--eps", o.eps, "approximation parameter (rational or decimal)");
        c->add_option("--oracle-cap", o.oracle_cap, "max n for exact oracles");
        c->add_option("--pairs-sample", o.pairs_sample, "pair sample size beyond the cap");
        c->add_option("--threads", o.threads, "worker threads");
        c->add_option("--format", o.format, "structured|text");
        c->add_option("--w-bound-exp", o.w_bound_exp, "reject W > n^exp at load");
    };

    auto* gen = app.add_subcommand("generate", "emit a seeded synthetic graph");
    add_common(gen, false);
    gen->add_option("--type", type, "dag|layered|path|digraph");
    gen->add_option("--n", n);
    gen->add_option("--m", m);
    gen->add_option("--layers", layers);
    gen->add_option("--width", width);
    gen->add_option("--density", density);
    gen->add_option("--wmax", wmax, "emit weights in [0,wmax]");
    gen->add_option("-o,--output", o.output)->required();

    auto* bs = app.add_subcommand("build-shortcut", "JLS-style pruned shortcut set");
    add_common(bs, true);
    bs->add_option("-o,--output", o.output, "write the augment set here");
    bs->add_option("--tc-prune", tc_prune, "on|off");
    bs->add_flag("--no-verify", no_verify, "skip the built-in oracle check");

    auto* bh = app.add_subcommand("build-hopset", "CFR-style pruned hopset");
    add_common(bh, true);
    bh->add_option("-o,--output", o.output, "write the augment set here");
    bh->add_option("--trunc-prune", trunc_prune, "on|off");
    bh->add_option("--boost-rounds", boost_rounds, "override preset boost rounds");
    bh->add_flag("--rounded-shell", rounded_shell, "outer shell on rounded weights");
    bh->add_flag("--no-verify", no_verify);

    auto* vf = app.add_subcommand("verify", "oracle-check an augment set");
    add_common(vf, true);
    vf->add_option("--augment", augment_path)->required();
    vf->add_option("--kind", kind, "shortcut|hopset");

    auto* rc = app.add_subcommand("reach", "build then parallel-BFS reachability");
    add_common(rc, true);
    rc->add_option("-s,--source", source)->required();
    rc->add_option("--tc-prune", tc_prune, "on|off");
    rc->add_option("--augment", augment_path, "reuse a prebuilt augment set");

    auto* ss = app.add_subcommand("sssp", "(1+eps)-approximate distances");
    add_common(ss, true);
    ss->add_option("-s,--source", source)->required();
    ss->add_option("--trunc-prune", trunc_prune, "on|off");
    ss->add_option("--boost-rounds", boost_rounds);
    ss->add_option("--hopbound", hopbound, "rounding hop budget h0 (default n-1)");

    auto* bn = app.add_subcommand("bench", "density sweep table");
    add_common(bn, false);
    bn->add_option("--n", n);
    bn->add_option("--densities", densities, "comma list; n,n1.5,n2 understood");
    bn->add_option("--seeds", n_seeds, "number of seeds starting at --seed");
    bn->add_option("--tc-prune", tc_prune, "on|off");

    CLI11_PARSE(app, argc, argv);

    auto on = [](const std::string& s) {
        if (s != "on" && s != "off") throw InputError("expected on|off");
        return s == "on";
    };

    auto started = std::chrono::steady_clock::now();
    try {
        TaskPool::instance().set_threads(o.threads);
        int rc_code = kExitInput;
        if (gen->parsed())
            rc_code = cmd_generate(o, type, n, m, layers, width, density, wmax);
        else if (bs->parsed())
            rc_code = cmd_build_shortcut(o, on(tc_prune), !no_verify);
        else if (bh->parsed())
            rc_code = cmd_build_hopset(o, on(trunc_prune), boost_rounds, rounded_shell,
                                       !no_verify);
        else if (vf->parsed())
            rc_code = cmd_verify(o, augment_path, kind);
        else if (rc->parsed())
            rc_code = cmd_reach(o, source, on(tc_prune), augment_path);
        else if (ss->parsed())
            rc_code = cmd_sssp(o, source, on(trunc_prune), boost_rounds, hopbound);
        else if (bn->parsed())
            rc_code = cmd_bench(o, n, densities, n_seeds, on(tc_prune));
        double wall =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                .count();
        if (o.format == "text") std::cout << "wall_ms=" << wall << "\n";
        return rc_code;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
