#include "hopcut/hopset.hpp"

#include <algorithm>
#include <map>

#include "hopcut/rng.hpp"
#include "hopcut/search.hpp"

namespace hopcut {

AugmentSet folklore_hopset(const WDiGraph& g, uint64_t sample_size, uint64_t seed,
                           CostMeter* meter) {
    if (sample_size > g.n()) throw InputError("folklore_hopset: sample_size > n");
    Rng rng(mix_stream(seed, {0x686f706b, g.n()})); // "hopk"
    std::vector<Vertex> ids(g.n());
    for (Vertex i = 0; i < g.n(); ++i) ids[i] = i;
    for (uint64_t i = 0; i < sample_size; ++i)
        std::swap(ids[i], ids[i + rng.below(g.n() - i)]);
    ids.resize(sample_size);
    std::sort(ids.begin(), ids.end());
    std::vector<uint8_t> sampled(g.n(), 0);
    for (Vertex v : ids) sampled[v] = 1;

    AugmentSet h;
    h.weighted = true;
    CostMeter local = meter ? meter->sub() : CostMeter();
    for (Vertex u : ids) {
        auto fwd = dijkstra(g, u, Dir::fwd, kUnreachedW, &local);
        auto bwd = dijkstra(g, u, Dir::bwd, kUnreachedW, &local);
        for (Vertex v = 0; v < g.n(); ++v) {
            if (v == u || !sampled[v]) continue;
            if (fwd.dist[v] != kUnreachedW) h.edges.push_back({u, v, fwd.dist[v]});
            if (bwd.dist[v] != kUnreachedW) h.edges.push_back({v, u, bwd.dist[v]});
        }
    }
    if (meter) meter->join_serial(local);
    std::sort(h.edges.begin(), h.edges.end());
    h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
    return h;
}

namespace {
uint32_t saturation_cap(uint64_t n, uint64_t k) {
    uint32_t r = 0;
    uint64_t v = 1;
    while (v < n) {
        v *= k;
        ++r;
    }
    return r;
}
} // namespace

LevelAssignment assign_levels(uint64_t n, const HopsetParams& p, uint64_t seed) {
    const uint32_t rcap = saturation_cap(n, p.k);
    std::vector<BernoulliGate> gates(rcap + 1);
    for (uint32_t r = 0; r <= rcap; ++r) {
        if (p.level_prob_override) {
            const Rational& q = *p.level_prob_override;
            if (Rational(1, 1) <= q) {
                gates[r].always = true;
            } else {
                bigint t = (bigint(q.num) << 64) / q.den;
                gates[r].threshold = static_cast<uint64_t>(t);
            }
        } else {
            gates[r] = sampling_gate(Rational(static_cast<int64_t>(p.lambda), 1), p.k, r, n);
        }
    }
    LevelAssignment out;
    out.level.assign(n, kNoLevel);
    for (uint64_t v = 0; v < n; ++v) {
        Rng rng(mix_stream(seed, {0x6c766c, v})); // "lvl"
        for (uint32_t r = 0; r <= rcap; ++r) {
            if (gates[r].always || rng.coin(gates[r].threshold)) {
                out.level[v] = r;
                break;
            }
        }
    }
    return out;
}

namespace {

struct EtaChoice {
    uint64_t sigma = 0;
    uint64_t eta = 0;
    std::vector<Vertex> fringe;
    WeightedDistances fwd, bwd; // capped at the outermost window radius
    uint64_t ball = 0;          // |R(v, (hi+1) D_r)|
};

// Distances are exact within their cap; entries beyond it read as
// unreached. A full-distance array filtered by the cap behaves identically,
// which is what the root-graph cache exploits.
EtaChoice choose_eta_with(const Vertex n, uint32_t r, const Rational& d_guess,
                          const HopsetParams& p, uint64_t sigma, uint64_t outer_cap,
                          WeightedDistances fwd, WeightedDistances bwd) {
    EtaChoice out;
    out.sigma = sigma;
    out.fwd = std::move(fwd);
    out.bwd = std::move(bwd);
    const uint64_t mu = p.window_mu();
    const uint64_t lo = mu * (sigma - 1) + p.eta_min + 1;
    const uint64_t hi = mu * sigma + p.eta_min + 1;

    // key(u) = min distance in either direction; fringe(eta) counts keys in
    // ((eta-1)D_r, (eta+1)D_r]. Distances are integers, so the rational radii
    // enter only through their exact floors.
    std::vector<Weight> keys;
    keys.reserve(n);
    for (Vertex u = 0; u < n; ++u) {
        Weight kmin = std::min(out.fwd.dist[u], out.bwd.dist[u]);
        if (kmin <= outer_cap) keys.push_back(kmin);
    }
    std::sort(keys.begin(), keys.end());
    out.ball = keys.size();

    auto count_within = [&](uint64_t eta_term) {
        uint64_t cap = floor_scaled_radius(Rational(static_cast<int64_t>(eta_term), 1), d_guess,
                                           p.lambda, p.k, r, kUnreachedW - 1);
        return static_cast<uint64_t>(std::upper_bound(keys.begin(), keys.end(), cap) -
                                     keys.begin());
    };

    uint64_t best_eta = lo, best_size = UINT64_MAX;
    for (uint64_t eta = lo; eta <= hi; ++eta) {
        uint64_t size = count_within(eta + 1) - count_within(eta - 1);
        if (size < best_size) {
            best_size = size;
            best_eta = eta;
        }
    }
    out.eta = best_eta;

    const uint64_t cap_out = floor_scaled_radius(
        Rational(static_cast<int64_t>(best_eta + 1), 1), d_guess, p.lambda, p.k, r,
        kUnreachedW - 1);
    const uint64_t cap_in = floor_scaled_radius(
        Rational(static_cast<int64_t>(best_eta - 1), 1), d_guess, p.lambda, p.k, r,
        kUnreachedW - 1);
    for (Vertex u = 0; u < n; ++u) {
        Weight kmin = std::min(out.fwd.dist[u], out.bwd.dist[u]);
        if (kmin > cap_in && kmin <= cap_out) out.fringe.push_back(u);
    }
    return out;
}

uint64_t eta_outer_cap(uint32_t r, const Rational& d_guess, const HopsetParams& p,
                       uint64_t sigma) {
    const uint64_t hi = p.window_mu() * sigma + p.eta_min + 1;
    return floor_scaled_radius(Rational(static_cast<int64_t>(hi + 1), 1), d_guess, p.lambda,
                               p.k, r, kUnreachedW - 1);
}

EtaChoice choose_eta_impl(const WDiGraph& g, Vertex v, uint32_t r, const Rational& d_guess,
                          const HopsetParams& p, uint64_t sigma, CostMeter* meter) {
    if (sigma < 1 || sigma > p.sigma_max) throw PreconditionError("sigma out of range");
    const uint64_t outer_cap = eta_outer_cap(r, d_guess, p, sigma);
    return choose_eta_with(g.n(), r, d_guess, p, sigma, outer_cap,
                           dijkstra(g, v, Dir::fwd, outer_cap, meter),
                           dijkstra(g, v, Dir::bwd, outer_cap, meter));
}

// Full single-source distances from and to every vertex of the base graph,
// built once per sequential-mode run. Bounded searches at any cap read off
// it by filtering, which spares the outer shell an all-pairs recomputation
// per (round, guess).
struct RootDistCache {
    std::vector<WeightedDistances> fwd, bwd;
    static constexpr Vertex kLimit = 2048;

    static bool worthwhile(const WDiGraph& g) { return g.n() > 1 && g.n() <= kLimit; }

    void build(const WDiGraph& g, CostMeter& meter) {
        fwd.resize(g.n());
        bwd.resize(g.n());
        for (Vertex v = 0; v < g.n(); ++v) {
            fwd[v] = dijkstra(g, v, Dir::fwd, kUnreachedW, &meter);
            bwd[v] = dijkstra(g, v, Dir::bwd, kUnreachedW, &meter);
        }
    }
    WeightedDistances bounded(Vertex v, Dir dir, Weight cap) const {
        WeightedDistances out = dir == Dir::fwd ? fwd[v] : bwd[v];
        for (Weight& d : out.dist)
            if (d > cap) d = kUnreachedW;
        return out;
    }
};

struct CfrContext {
    const HopsetParams& p;
    bool trunc_prune;
    uint64_t base_n;
    uint32_t level_cap;
    const std::vector<uint32_t>* lvl; // global assignment for this (round, guess)
    Rational d_guess;                 // D in the working weight scale
    const RootDistCache* cache;       // valid for the base graph only
    // Scales a working-scale distance back to the original integer weights
    // (identity in sequential mode, ceil(units * unit) in rounded mode).
    std::function<Weight(Weight)> scale_back;
    EdgeProvenance* prov;
};

struct CfrNodeOut {
    AugmentAccum acc{true};
    RecursionTrace trace;
    std::vector<EdgeProvenance::Record> prov_records;
    std::vector<std::vector<Vertex>> prov_subgraphs;
};

void record_edges(const CfrContext& ctx, CfrNodeOut& out, const std::vector<Vertex>& global_of,
                  uint32_t subgraph_slot, std::initializer_list<Edge> edges, int level) {
    for (const Edge& e : edges) {
        Weight w = ctx.scale_back(e.w);
        out.acc.add(global_of[e.u], global_of[e.v], w, level);
        if (ctx.prov)
            out.prov_records.push_back({global_of[e.u], global_of[e.v], w, subgraph_slot});
    }
}

void cfr_node(const CfrContext& ctx, const WDiGraph& g, const std::vector<Vertex>& global_of,
              uint32_t r, uint64_t node_id, CfrNodeOut& out, CostMeter& meter,
              bool is_root = false) {
    const Vertex n = g.n();
    const RootDistCache* cache = is_root ? ctx.cache : nullptr;
    out.trace.level(r).subproblems++;
    if (n <= 1) return;

    uint32_t subgraph_slot = 0;
    if (ctx.prov) {
        subgraph_slot = static_cast<uint32_t>(out.prov_subgraphs.size());
        out.prov_subgraphs.push_back(global_of);
    }

    // TruncSSSP-Pruning: every vertex contributes its rho^2 nearest exact
    // distances, both directions, inside this subgraph.
    if (ctx.trunc_prune) {
        CostMeter prune_meter = meter.sub();
        const uint64_t y = ctx.p.rho * ctx.p.rho;
        for (Vertex v = 0; v < n; ++v) {
            AugmentSet t = trunc_sssp(g, v, y, &prune_meter);
            for (const Edge& e : t.edges)
                record_edges(ctx, out, global_of, subgraph_slot, {e}, static_cast<int>(r));
        }
        out.trace.level(r).prune_calls += n;
        out.trace.prune_work += prune_meter.work();
        meter.join_serial(prune_meter);
    }

    // Shortcutters: vertices whose level is r + L add exact-distance edges
    // within radius eta_max * D_r.
    const uint64_t shortcut_cap = floor_scaled_radius(
        Rational(static_cast<int64_t>(ctx.p.eta_max()), 1), ctx.d_guess, ctx.p.lambda, ctx.p.k,
        r, kUnreachedW - 1);
    for (Vertex v = 0; v < n; ++v) {
        if ((*ctx.lvl)[global_of[v]] != r + ctx.p.L) continue;
        auto anc = cache ? cache->bounded(v, Dir::bwd, shortcut_cap)
                         : dijkstra(g, v, Dir::bwd, shortcut_cap, &meter);
        auto desc = cache ? cache->bounded(v, Dir::fwd, shortcut_cap)
                          : dijkstra(g, v, Dir::fwd, shortcut_cap, &meter);
        for (Vertex u = 0; u < n; ++u) {
            if (u != v && anc.dist[u] != kUnreachedW)
                record_edges(ctx, out, global_of, subgraph_slot, {{u, v, anc.dist[u]}},
                             static_cast<int>(r));
            if (u != v && desc.dist[u] != kUnreachedW)
                record_edges(ctx, out, global_of, subgraph_slot, {{v, u, desc.dist[u]}},
                             static_cast<int>(r));
        }
    }

    // Pivots: level exactly r. Fringe subproblems are collected during the
    // sweep (they recurse ahead of the core partition), labels afterward.
    Rng sig_rng(mix_stream(ctx.p.seed, {node_id, r, 0x736967})); // "sig"
    std::vector<std::vector<std::pair<Vertex, uint8_t>>> labels(n);
    std::vector<uint8_t> crossed(n, 0);
    std::vector<std::vector<Vertex>> fringe_children;
    uint64_t pivot_count = 0;
    for (Vertex v = 0; v < n; ++v) {
        if ((*ctx.lvl)[global_of[v]] != r) continue;
        ++pivot_count;
        uint64_t sigma = 1 + sig_rng.below(ctx.p.sigma_max);
        EtaChoice choice;
        if (cache) {
            uint64_t outer_cap = eta_outer_cap(r, ctx.d_guess, ctx.p, sigma);
            choice = choose_eta_with(n, r, ctx.d_guess, ctx.p, sigma, outer_cap,
                                     cache->bounded(v, Dir::fwd, outer_cap),
                                     cache->bounded(v, Dir::bwd, outer_cap));
        } else {
            choice = choose_eta_impl(g, v, r, ctx.d_guess, ctx.p, sigma, &meter);
        }
        out.trace.level(r).max_ball = std::max(out.trace.level(r).max_ball, choice.ball);
        if (!choice.fringe.empty()) fringe_children.push_back(choice.fringe);

        const uint64_t label_cap = floor_scaled_radius(
            Rational(static_cast<int64_t>(choice.eta), 1), ctx.d_guess, ctx.p.lambda, ctx.p.k, r,
            kUnreachedW - 1);
        for (Vertex u = 0; u < n; ++u) {
            bool is_anc = choice.bwd.dist[u] != kUnreachedW && choice.bwd.dist[u] <= label_cap;
            bool is_desc = choice.fwd.dist[u] != kUnreachedW && choice.fwd.dist[u] <= label_cap;
            if (is_anc && is_desc)
                crossed[u] = 1;
            else if (is_anc)
                labels[u].emplace_back(v, 0);
            else if (is_desc)
                labels[u].emplace_back(v, 1);
        }
    }
    out.trace.level(r).pivots += pivot_count;

    // Core partition: all unlabeled-crossed vertices grouped by exact label
    // sets (the empty set is a valid class; a pivotless round therefore
    // forwards the whole set to the next level, where deeper shortcutters and
    // pivots may still fire).
    std::vector<std::vector<Vertex>> core_children;
    {
        std::map<std::vector<std::pair<Vertex, uint8_t>>, uint32_t> part_of;
        std::vector<std::vector<Vertex>> parts;
        for (Vertex v = 0; v < n; ++v) {
            if (crossed[v]) continue;
            auto [it, inserted] =
                part_of.try_emplace(labels[v], static_cast<uint32_t>(parts.size()));
            if (inserted) parts.emplace_back();
            parts[it->second].push_back(v);
        }
        core_children = std::move(parts);
    }
    if (r + 1 > ctx.level_cap) return;

    std::vector<std::vector<Vertex>> children = std::move(fringe_children);
    children.insert(children.end(), core_children.begin(), core_children.end());
    std::vector<CfrNodeOut> child_out(children.size());
    const size_t n_fringe = children.size() - core_children.size();
    scoped_parallel(meter, children.size(), [&](size_t i, CostMeter& sub) {
        std::vector<Vertex> child_global(children[i].size());
        for (size_t j = 0; j < children[i].size(); ++j)
            child_global[j] = global_of[children[i][j]];
        WDiGraph child_g = induced(g, VertexSubset{children[i]});
        uint64_t child_id =
            i < n_fringe ? mix_stream(node_id, {1, r, i}) : mix_stream(node_id, {2, r, i});
        cfr_node(ctx, child_g, child_global, r + 1, child_id, child_out[i], sub);
    });
    for (auto& c : child_out) {
        // Re-base child provenance subgraph slots before merging.
        if (ctx.prov) {
            uint32_t base = static_cast<uint32_t>(out.prov_subgraphs.size());
            for (auto& rec : c.prov_records) rec.subgraph += base;
            out.prov_subgraphs.insert(out.prov_subgraphs.end(), c.prov_subgraphs.begin(),
                                      c.prov_subgraphs.end());
            out.prov_records.insert(out.prov_records.end(), c.prov_records.begin(),
                                    c.prov_records.end());
        }
        out.acc.merge(std::move(c.acc));
        out.trace.merge(c.trace);
    }
}

// Weights divided into ceil units of `unit`; used by the rounded shell.
WDiGraph reweight_to_units(const WDiGraph& g, const bigint& unum, const bigint& uden) {
    std::vector<Edge> edges = g.edge_list();
    for (Edge& e : edges) {
        bigint q = (bigint(e.w) * uden + unum - 1) / unum;
        if (q > (uint64_t(1) << 61)) throw InputError("rounded unit too small for this graph");
        e.w = static_cast<Weight>(q);
    }
    return WDiGraph::from_edge_list(g.n(), edges);
}

} // namespace

FringeSpec choose_eta(const WDiGraph& g, Vertex v, uint32_t r, const Rational& d_guess,
                      const HopsetParams& p, uint64_t sigma, CostMeter* meter) {
    CostMeter local = meter ? meter->sub() : CostMeter();
    EtaChoice c = choose_eta_impl(g, v, r, d_guess, p, sigma, &local);
    if (meter) meter->join_serial(local);
    return FringeSpec{v, c.sigma, c.eta, std::move(c.fringe)};
}

HopsetResult cfr_build(const WDiGraph& g, const HopsetParams& p, bool trunc_prune,
                       CostMeter& meter, EdgeProvenance* prov) {
    p.validate();
    const Vertex n = g.n();
    HopsetResult res;
    res.H.weighted = true;
    res.trace.rounded_shell = p.rounded_shell;
    if (n == 0) return res;

    const uint32_t level_cap = saturation_cap(n, p.k);
    const int jmax = g.w_max() == 0
                         ? -1
                         : static_cast<int>(63 - __builtin_clzll(n * g.w_max()));

    AugmentAccum acc(true);
    RecursionTrace trace;
    trace.rounded_shell = p.rounded_shell;

    // Sequential mode reuses full base-graph distances across every
    // (round, guess); the rounded shell reweights per guess and cannot.
    RootDistCache cache;
    const bool use_cache = !p.rounded_shell && RootDistCache::worthwhile(g);
    if (use_cache) cache.build(g, meter);

    // Boost rounds and distance guesses are mutually independent; each combo
    // runs as its own task and the results merge in combo order.
    struct Combo {
        uint32_t round;
        int j;
        CfrNodeOut shell;
        CfrNodeOut rec;
    };
    std::vector<Combo> combos;
    for (uint32_t round = 0; round < p.boost_rounds; ++round)
        for (int j = -1; j <= jmax; ++j) combos.push_back({round, j, {}, {}});

    scoped_parallel(meter, combos.size(), [&](size_t ci, CostMeter& sub) {
        Combo& combo = combos[ci];
        const uint32_t round = combo.round;
        const int j = combo.j;
        {
            LevelAssignment lvl =
                assign_levels(n, p, mix_stream(p.seed, {0x726f756e, round, uint64_t(j + 1)}));

            // Working scale: original weights, or ceil units of
            // unit = eps * 2^j / (9 h0) when the rounded shell is active.
            const WDiGraph* work_g = &g;
            WDiGraph rounded_g;
            Rational delta = j >= 0 ? Rational(int64_t(1) << j, 1) : Rational(1, 2);
            std::function<Weight(Weight)> scale_back = [](Weight w) { return w; };
            Rational d_guess = delta / p.kc;
            bigint unum = 1, uden = 1;
            if (p.rounded_shell) {
                uint32_t h0 = n > 1 ? n - 1 : 1;
                unum = bigint(p.eps.num) * delta.num;
                uden = bigint(p.eps.den) * delta.den * 9 * h0;
                bigint gg = boost::multiprecision::gcd(unum, uden);
                unum /= gg;
                uden /= gg;
                rounded_g = reweight_to_units(g, unum, uden);
                work_g = &rounded_g;
                scale_back = [unum, uden](Weight units) -> Weight {
                    bigint b = (bigint(units) * unum + uden - 1) / uden; // ceil(units*unit)
                    return static_cast<Weight>(b);
                };
                // D in units: (2^j / kc) / unit.
                if (unum > std::numeric_limits<int64_t>::max() ||
                    uden > std::numeric_limits<int64_t>::max())
                    throw InputError("rounded unit overflow");
                d_guess = d_guess / Rational(static_cast<int64_t>(unum),
                                             static_cast<int64_t>(uden));
            }

            // Outer shell: shallow-level vertices shortcut their 2^{j+1} balls.
            const Weight shell_cap_true = j + 1 >= 0 ? (Weight(1) << (j + 1)) : 1;
            Weight shell_cap = shell_cap_true;
            if (p.rounded_shell) {
                bigint c = (bigint(shell_cap_true) * uden) / unum; // floor(2Delta / unit)
                shell_cap = c > (uint64_t(1) << 62) ? (uint64_t(1) << 62)
                                                    : static_cast<Weight>(c);
            }
            CfrContext ctx{p,          trunc_prune, n,    level_cap, &lvl.level,
                           d_guess,    use_cache ? &cache : nullptr,
                           scale_back, prov};
            std::vector<Vertex> identity(n);
            for (Vertex v = 0; v < n; ++v) identity[v] = v;

            CfrNodeOut& shell_out = combo.shell;
            if (prov) shell_out.prov_subgraphs.push_back(identity);
            for (Vertex v = 0; v < n; ++v) {
                if (lvl.level[v] == kNoLevel || lvl.level[v] > p.L) continue;
                auto anc = use_cache ? cache.bounded(v, Dir::bwd, shell_cap)
                                     : dijkstra(*work_g, v, Dir::bwd, shell_cap, &sub);
                auto desc = use_cache ? cache.bounded(v, Dir::fwd, shell_cap)
                                      : dijkstra(*work_g, v, Dir::fwd, shell_cap, &sub);
                for (Vertex u = 0; u < n; ++u) {
                    if (u != v && anc.dist[u] != kUnreachedW)
                        record_edges(ctx, shell_out, identity, 0, {{u, v, anc.dist[u]}}, -1);
                    if (u != v && desc.dist[u] != kUnreachedW)
                        record_edges(ctx, shell_out, identity, 0, {{v, u, desc.dist[u]}}, -1);
                }
            }

            cfr_node(ctx, *work_g, identity, 0,
                     mix_stream(p.seed, {0x636672, round, uint64_t(j + 1)}), combo.rec, sub,
                     /*is_root=*/true);
        }
    });

    for (Combo& combo : combos) {
        for (CfrNodeOut* part : {&combo.shell, &combo.rec}) {
            if (prov) {
                uint32_t base = static_cast<uint32_t>(prov->subgraphs.size());
                for (auto& sg : part->prov_subgraphs) prov->subgraphs.push_back(std::move(sg));
                for (auto& rec : part->prov_records) {
                    rec.subgraph += base;
                    prov->records.push_back(rec);
                }
            }
            acc.merge(std::move(part->acc));
            trace.merge(part->trace);
        }
    }

    auto fin = acc.finalize();
    res.H = std::move(fin.set);
    res.trace = std::move(trace);
    if (!fin.added_per_level.empty()) res.trace.outer_edges = fin.added_per_level[0];
    for (size_t i = 1; i < fin.added_per_level.size(); ++i)
        res.trace.level(static_cast<uint32_t>(i - 1)).edges_added = fin.added_per_level[i];
    res.trace.total_edges = res.H.size();
    if (res.trace.depth() > level_cap + 1)
        throw PreconditionError("recursion depth exceeded its cap");
    return res;
}

} // namespace hopcut
