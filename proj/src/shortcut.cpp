#include "hopcut/shortcut.hpp"

#include <algorithm>
#include <map>

#include "hopcut/boolmat.hpp"
#include "hopcut/rng.hpp"
#include "hopcut/search.hpp"

namespace hopcut {

AugmentSet folklore_shortcut(const DiGraph& g, uint64_t sample_size, uint64_t seed,
                             CostMeter* meter) {
    if (sample_size > g.n()) throw InputError("folklore_shortcut: sample_size > n");
    Rng rng(mix_stream(seed, {0x666f6c6b, g.n()})); // "folk"
    std::vector<Vertex> ids(g.n());
    for (Vertex i = 0; i < g.n(); ++i) ids[i] = i;
    for (uint64_t i = 0; i < sample_size; ++i)
        std::swap(ids[i], ids[i + rng.below(g.n() - i)]);
    ids.resize(sample_size);
    std::sort(ids.begin(), ids.end());

    std::vector<uint8_t> sampled(g.n(), 0);
    for (Vertex v : ids) sampled[v] = 1;

    AugmentSet h;
    CostMeter local = meter ? meter->sub() : CostMeter();
    for (Vertex u : ids) {
        auto reach = par_bfs(g, u, local).hops;
        for (Vertex v = 0; v < g.n(); ++v)
            if (v != u && sampled[v] && reach.dist[v] != kUnreachedHops)
                h.edges.push_back({u, v, 0});
    }
    if (meter) meter->join_serial(local);
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

namespace {

struct JlsContext {
    const BuildParams& p;
    bool tc_prune;
    uint64_t base_n;
    uint32_t level_cap; // ceil(log_k n): sampling is forced saturated here
};

uint32_t saturation_cap(uint64_t n, uint64_t k) {
    uint32_t r = 0;
    uint64_t v = 1;
    while (v < n) {
        v *= k;
        ++r;
    }
    return r;
}

// |ball| <= c * rho^2, exactly.
bool within_threshold(uint64_t ball, const Rational& c, uint64_t rho) {
    return bigint(ball) * c.den <= bigint(c.num) * rho * rho;
}

struct JlsNodeOut {
    AugmentAccum acc{false};
    RecursionTrace trace;
};

void jls_node(const JlsContext& ctx, const DiGraph& g, const std::vector<Vertex>& global_of,
              uint32_t r, uint64_t node_id, JlsNodeOut& out, CostMeter& meter) {
    const Vertex n = g.n();
    out.trace.level(r).subproblems++;
    if (n <= 1) return;

    BernoulliGate gate = sampling_gate(ctx.p.sample_c, ctx.p.k, r, ctx.base_n);
    // Structural depth cap: the paper's constants saturate the sampling
    // probability by level ceil(log_k n); forcing saturation there keeps the
    // depth invariant independent of user-supplied constants.
    if (r >= ctx.level_cap) gate.always = true;

    Rng rng(mix_stream(ctx.p.seed, {node_id, r, 0x706976})); // "piv"
    std::vector<Vertex> pivots;
    for (Vertex v = 0; v < n; ++v)
        if (gate.always || rng.coin(gate.threshold)) pivots.push_back(v);

    out.trace.level(r).pivots += pivots.size();

    // label token: (pivot local id, 0 = "I reach p" / 1 = "p reaches me")
    std::vector<std::vector<std::pair<Vertex, uint8_t>>> labels(n);
    for (Vertex p : pivots) {
        auto anc = par_bfs(g, p, meter, Dir::bwd).hops;
        auto desc = par_bfs(g, p, meter, Dir::fwd).hops;
        uint64_t ball = 0;
        for (Vertex v = 0; v < n; ++v) {
            bool a = anc.dist[v] != kUnreachedHops;
            bool d = desc.dist[v] != kUnreachedHops;
            if (a || d) ++ball;
            if (a) {
                if (v != p) out.acc.add(global_of[v], global_of[p], 0, static_cast<int>(r));
                labels[v].emplace_back(p, 0);
            }
            if (d) {
                if (v != p) out.acc.add(global_of[p], global_of[v], 0, static_cast<int>(r));
                labels[v].emplace_back(p, 1);
            }
        }
        out.trace.level(r).max_ball = std::max(out.trace.level(r).max_ball, ball);

        if (ctx.tc_prune && within_threshold(ball, ctx.p.tc_threshold_c, ctx.p.rho)) {
            std::vector<Vertex> ball_vs;
            ball_vs.reserve(ball);
            for (Vertex v = 0; v < n; ++v)
                if (anc.dist[v] != kUnreachedHops || desc.dist[v] != kUnreachedHops)
                    ball_vs.push_back(v);
            CostMeter tc_meter = meter.sub();
            auto closure = transitive_closure(g, VertexSubset::of(std::move(ball_vs)), &tc_meter);
            out.trace.level(r).prune_calls++;
            out.trace.prune_work += tc_meter.work();
            meter.join_serial(tc_meter);
            for (auto [lu, lv] : closure)
                out.acc.add(global_of[lu], global_of[lv], 0, static_cast<int>(r));
        }
    }

    // Saturated level: every vertex was a pivot, nothing left to split.
    if (gate.always) return;
    // Empty pivot round: the partition would be a single untouched part.
    if (pivots.empty()) return;

    std::map<std::vector<std::pair<Vertex, uint8_t>>, uint32_t> part_of;
    std::vector<std::vector<Vertex>> parts;
    for (Vertex v = 0; v < n; ++v) {
        auto [it, inserted] = part_of.try_emplace(labels[v], static_cast<uint32_t>(parts.size()));
        if (inserted) parts.emplace_back();
        parts[it->second].push_back(v);
    }

    std::vector<JlsNodeOut> child_out(parts.size());
    scoped_parallel(meter, parts.size(), [&](size_t i, CostMeter& sub) {
        std::vector<Vertex> child_global(parts[i].size());
        for (size_t j = 0; j < parts[i].size(); ++j) child_global[j] = global_of[parts[i][j]];
        DiGraph child_g = induced(g, VertexSubset{parts[i]});
        jls_node(ctx, child_g, child_global, r + 1, mix_stream(node_id, {r, i}), child_out[i],
                 sub);
    });
    for (auto& c : child_out) {
        out.acc.merge(std::move(c.acc));
        out.trace.merge(c.trace);
    }
}

} // namespace

ShortcutResult jls_build(const DiGraph& g, const BuildParams& p, bool tc_prune,
                         CostMeter& meter) {
    p.validate();
    if (!topo_sort(g)) throw PreconditionError("jls_build requires a DAG; condense SCCs first");

    JlsContext ctx{p, tc_prune, g.n(), saturation_cap(g.n(), p.k)};
    std::vector<Vertex> identity(g.n());
    for (Vertex v = 0; v < g.n(); ++v) identity[v] = v;

    JlsNodeOut root;
    jls_node(ctx, g, identity, 0, mix_stream(p.seed, {0x6a6c73}), root, meter); // "jls"

    auto fin = root.acc.finalize();
    ShortcutResult res;
    res.H = std::move(fin.set);
    res.trace = std::move(root.trace);
    for (size_t i = 1; i < fin.added_per_level.size(); ++i)
        res.trace.level(static_cast<uint32_t>(i - 1)).edges_added = fin.added_per_level[i];
    res.trace.total_edges = res.H.size();

    // Depth never exceeds ceil(log_k n) + 1 levels.
    if (res.trace.depth() > ctx.level_cap + 1)
        throw PreconditionError("recursion depth exceeded its cap");
    return res;
}

ShortcutPipelineResult build_shortcut_pipeline(const DiGraph& g, const BuildParams& p,
                                               bool tc_prune, CostMeter& meter) {
    SccResult scc = scc_condense(g);

    BuildParams cp = p;
    ShortcutResult inner = jls_build(scc.condensed, cp, tc_prune, meter);

    ShortcutPipelineResult out;
    out.scc_count = scc.component_count;
    out.star_edge_count = scc.star_edges.size();
    out.trace = std::move(inner.trace);

    AugmentAccum acc(false);
    for (auto [u, v] : scc.star_edges) acc.add(u, v, 0, -1);
    for (const Edge& e : inner.H.edges)
        acc.add(scc.center_of[e.u], scc.center_of[e.v], 0, 0);
    auto fin = acc.finalize();
    out.H = std::move(fin.set);
    out.trace.outer_edges = fin.added_per_level.empty() ? 0 : fin.added_per_level[0];
    out.trace.total_edges = out.H.size();
    return out;
}

} // namespace hopcut
