#include "hopcut/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "hopcut/rng.hpp"

namespace hopcut {

namespace {

struct CsrPair {
    std::vector<uint64_t> out_off, in_off;
    std::vector<Vertex> out_dst, in_dst;
    std::vector<Weight> out_w, in_w;
};

// Shared CSR assembly: expects edges already deduplicated and loop-free.
CsrPair assemble(Vertex n, std::vector<Edge>& edges, bool weighted) {
    std::sort(edges.begin(), edges.end());
    CsrPair c;
    c.out_off.assign(n + 1, 0);
    c.in_off.assign(n + 1, 0);
    for (const Edge& e : edges) {
        c.out_off[e.u + 1]++;
        c.in_off[e.v + 1]++;
    }
    for (Vertex v = 0; v < n; ++v) {
        c.out_off[v + 1] += c.out_off[v];
        c.in_off[v + 1] += c.in_off[v];
    }
    c.out_dst.resize(edges.size());
    c.in_dst.resize(edges.size());
    if (weighted) {
        c.out_w.resize(edges.size());
        c.in_w.resize(edges.size());
    }
    std::vector<uint64_t> pos = c.out_off;
    for (const Edge& e : edges) {
        uint64_t p = pos[e.u]++;
        c.out_dst[p] = e.v;
        if (weighted) c.out_w[p] = e.w;
    }
    // Incoming lists: the edge vector sorted by (v, u) keeps them sorted too.
    std::vector<Edge> by_in = edges;
    std::sort(by_in.begin(), by_in.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.v, a.u) < std::tie(b.v, b.u); });
    std::vector<uint64_t> ipos = c.in_off;
    for (const Edge& e : by_in) {
        uint64_t p = ipos[e.v]++;
        c.in_dst[p] = e.u;
        if (weighted) c.in_w[p] = e.w;
    }
    return c;
}

std::vector<Edge> sanitize(Vertex n, std::vector<Edge> edges, bool weighted) {
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw InputError("edge endpoint out of range");
    }
    std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
    std::sort(edges.begin(), edges.end());
    if (weighted) {
        // Duplicate (u,v) keeps the smallest weight; distances only care about
        // the cheapest parallel edge.
        std::vector<Edge> kept;
        for (const Edge& e : edges) {
            if (!kept.empty() && kept.back().u == e.u && kept.back().v == e.v) continue;
            kept.push_back(e);
        }
        return kept;
    }
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }),
                edges.end());
    return edges;
}

} // namespace

DiGraph DiGraph::from_edge_list(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, 0});
    edges = sanitize(n, std::move(edges), false);
    CsrPair c = assemble(n, edges, false);
    DiGraph g;
    g.n_ = n;
    g.out_off_ = std::move(c.out_off);
    g.in_off_ = std::move(c.in_off);
    g.out_dst_ = std::move(c.out_dst);
    g.in_dst_ = std::move(c.in_dst);
    return g;
}

std::vector<std::pair<Vertex, Vertex>> DiGraph::edge_list() const {
    std::vector<std::pair<Vertex, Vertex>> es;
    es.reserve(m());
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : out(u)) es.emplace_back(u, v);
    return es;
}

bool DiGraph::has_edge(Vertex u, Vertex v) const {
    auto nb = out(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

WDiGraph WDiGraph::from_edge_list(Vertex n, std::span<const Edge> in_edges) {
    std::vector<Edge> edges(in_edges.begin(), in_edges.end());
    edges = sanitize(n, std::move(edges), true);
    WDiGraph g;
    g.n_ = n;
    for (const Edge& e : edges) g.w_max_ = std::max(g.w_max_, e.w);
    if (n > 0 && g.w_max_ > 0) {
        // Path lengths must fit comfortably in 64 bits.
        if (g.w_max_ > (uint64_t(1) << 62) / n)
            throw InputError("weights too large: n * w_max must stay below 2^62");
    }
    CsrPair c = assemble(n, edges, true);
    g.out_off_ = std::move(c.out_off);
    g.in_off_ = std::move(c.in_off);
    g.out_dst_ = std::move(c.out_dst);
    g.in_dst_ = std::move(c.in_dst);
    g.out_w_ = std::move(c.out_w);
    g.in_w_ = std::move(c.in_w);
    return g;
}

std::vector<Edge> WDiGraph::edge_list() const {
    std::vector<Edge> es;
    es.reserve(m());
    for (Vertex u = 0; u < n_; ++u) {
        auto dst = out(u);
        auto w = out_w(u);
        for (size_t i = 0; i < dst.size(); ++i) es.push_back({u, dst[i], w[i]});
    }
    return es;
}

DiGraph WDiGraph::skeleton() const {
    DiGraph g;
    g.n_ = n_;
    g.out_off_ = out_off_;
    g.in_off_ = in_off_;
    g.out_dst_ = out_dst_;
    g.in_dst_ = in_dst_;
    return g;
}

VertexSubset VertexSubset::of(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return VertexSubset{std::move(vs)};
}

Vertex VertexSubset::to_local(Vertex global) const {
    auto it = std::lower_bound(members.begin(), members.end(), global);
    if (it == members.end() || *it != global) return kUnreachedHops;
    return static_cast<Vertex>(it - members.begin());
}

DiGraph induced(const DiGraph& g, const VertexSubset& s) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex lu = 0; lu < s.size(); ++lu) {
        Vertex gu = s.to_global(lu);
        for (Vertex gv : g.out(gu)) {
            Vertex lv = s.to_local(gv);
            if (lv != kUnreachedHops) edges.emplace_back(lu, lv);
        }
    }
    return DiGraph::from_edge_list(static_cast<Vertex>(s.size()), edges);
}

WDiGraph induced(const WDiGraph& g, const VertexSubset& s) {
    std::vector<Edge> edges;
    for (Vertex lu = 0; lu < s.size(); ++lu) {
        Vertex gu = s.to_global(lu);
        auto dst = g.out(gu);
        auto w = g.out_w(gu);
        for (size_t i = 0; i < dst.size(); ++i) {
            Vertex lv = s.to_local(dst[i]);
            if (lv != kUnreachedHops) edges.push_back({lu, lv, w[i]});
        }
    }
    return WDiGraph::from_edge_list(static_cast<Vertex>(s.size()), edges);
}

SccResult scc_condense(const DiGraph& g) {
    const Vertex n = g.n();
    SccResult res;
    res.component_of.assign(n, kUnreachedHops);

    // Iterative Tarjan; the corpus includes path graphs long enough to blow a
    // recursive formulation's stack.
    std::vector<uint32_t> index(n, kUnreachedHops), lowlink(n, 0);
    std::vector<uint8_t> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> comp_members;
    uint32_t next_index = 0;

    struct Frame {
        Vertex v;
        size_t child = 0;
    };
    std::vector<Frame> frames;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != kUnreachedHops) continue;
        frames.push_back({root});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto nb = g.out(f.v);
            if (f.child < nb.size()) {
                Vertex w = nb[f.child++];
                if (index[w] == kUnreachedHops) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    std::vector<Vertex> members;
                    while (true) {
                        Vertex w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        members.push_back(w);
                        if (w == f.v) break;
                    }
                    comp_members.push_back(std::move(members));
                }
                Vertex child = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[child]);
            }
        }
    }

    // Tarjan emits components in reverse topological order; flip so the
    // condensed DAG ids go with the topological order (stable and handy).
    std::reverse(comp_members.begin(), comp_members.end());
    res.component_count = static_cast<Vertex>(comp_members.size());
    res.center_of.resize(res.component_count);
    for (Vertex c = 0; c < res.component_count; ++c) {
        Vertex center = kUnreachedHops;
        for (Vertex v : comp_members[c]) {
            res.component_of[v] = c;
            center = std::min(center, v);
        }
        res.center_of[c] = center;
        if (comp_members[c].size() > 1) {
            for (Vertex v : comp_members[c]) {
                if (v == center) continue;
                res.star_edges.emplace_back(v, center);
                res.star_edges.emplace_back(center, v);
            }
        }
    }

    std::vector<std::pair<Vertex, Vertex>> cedges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.out(u))
            if (res.component_of[u] != res.component_of[v])
                cedges.emplace_back(res.component_of[u], res.component_of[v]);
    res.condensed = DiGraph::from_edge_list(res.component_count, cedges);
    return res;
}

bool topo_sort(const DiGraph& g, std::vector<Vertex>* order) {
    const Vertex n = g.n();
    std::vector<uint32_t> indeg(n, 0);
    for (Vertex v = 0; v < n; ++v) indeg[v] = static_cast<uint32_t>(g.in(v).size());
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::vector<Vertex> out;
    out.reserve(n);
    for (size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        out.push_back(v);
        for (Vertex w : g.out(v))
            if (--indeg[w] == 0) queue.push_back(w);
    }
    if (out.size() != n) return false;
    if (order) *order = std::move(out);
    return true;
}

DiGraph gen_random_dag(Vertex n, uint64_t m, uint64_t seed) {
    const uint64_t max_m = static_cast<uint64_t>(n) * (n - 1) / 2;
    if (m > max_m) throw InputError("gen_random_dag: m exceeds n(n-1)/2");
    Rng rng(mix_stream(seed, {0x646167, n, m})); // "dag"

    // Random topological permutation; sampled position pairs are oriented
    // along it, so the result is acyclic by construction.
    std::vector<Vertex> perm(n);
    for (Vertex i = 0; i < n; ++i) perm[i] = i;
    for (Vertex i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    if (n >= 2) {
        if (m * 3 >= max_m) {
            // Dense request: enumerate all position pairs and take a prefix of
            // a shuffle; rejection sampling would crawl here.
            std::vector<std::pair<Vertex, Vertex>> all;
            all.reserve(max_m);
            for (Vertex i = 0; i + 1 < n; ++i)
                for (Vertex j = i + 1; j < n; ++j) all.emplace_back(i, j);
            for (uint64_t i = all.size(); i > 1; --i)
                std::swap(all[i - 1], all[rng.below(i)]);
            all.resize(m);
            for (auto [i, j] : all) edges.emplace_back(perm[i], perm[j]);
        } else {
            std::unordered_set<uint64_t> seen;
            while (edges.size() < m) {
                Vertex i = static_cast<Vertex>(rng.below(n));
                Vertex j = static_cast<Vertex>(rng.below(n));
                if (i == j) continue;
                if (i > j) std::swap(i, j);
                uint64_t key = (static_cast<uint64_t>(i) << 32) | j;
                if (seen.insert(key).second) edges.emplace_back(perm[i], perm[j]);
            }
        }
    }
    return DiGraph::from_edge_list(n, edges);
}

DiGraph gen_layered(Vertex layers, Vertex width, double extra_density, uint64_t seed) {
    if (layers == 0 || width == 0) throw InputError("gen_layered: empty shape");
    Rng rng(mix_stream(seed, {0x6c617965, layers, width})); // "laye"
    const Vertex n = layers * width;
    auto id = [width](Vertex layer, Vertex i) { return layer * width + i; };

    // Seeded spine through one vertex per layer guarantees a path of
    // layers-1 hops; extra adjacent-layer edges fill in density.
    std::vector<Vertex> spine(layers);
    for (Vertex l = 0; l < layers; ++l) spine[l] = static_cast<Vertex>(rng.below(width));

    const uint64_t density_threshold =
        extra_density >= 1.0 ? UINT64_MAX
                             : static_cast<uint64_t>(extra_density * 18446744073709551615.0);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex l = 0; l + 1 < layers; ++l) {
        edges.emplace_back(id(l, spine[l]), id(l + 1, spine[l + 1]));
        for (Vertex i = 0; i < width; ++i)
            for (Vertex j = 0; j < width; ++j)
                if (rng.next() < density_threshold) edges.emplace_back(id(l, i), id(l + 1, j));
    }
    return DiGraph::from_edge_list(n, edges);
}

DiGraph gen_path(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return DiGraph::from_edge_list(n, edges);
}

WDiGraph randomize_weights(const DiGraph& g, Weight wmax, uint64_t seed) {
    Rng rng(mix_stream(seed, {0x77656967, g.n(), g.m()})); // "weig"
    std::vector<Edge> edges;
    edges.reserve(g.m());
    for (auto [u, v] : g.edge_list()) edges.push_back({u, v, rng.below(wmax + 1)});
    return WDiGraph::from_edge_list(g.n(), edges);
}

void write_graph(std::ostream& os, const DiGraph& g) {
    os << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edge_list()) os << u << ' ' << v << '\n';
}

void write_graph(std::ostream& os, const WDiGraph& g) {
    os << g.n() << ' ' << g.m() << " weighted\n";
    for (const Edge& e : g.edge_list()) os << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

LoadedGraph read_graph(std::istream& is, uint64_t w_poly_bound_exp) {
    LoadedGraph out;
    std::string line;
    uint64_t line_no = 0;
    bool have_header = false;
    Vertex n = 0;
    uint64_t m = 0;
    std::vector<Edge> edges;

    auto fail = [&](const std::string& what) {
        throw InputError("parse error at line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(is, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (!have_header) {
            std::string flag;
            if (!(ls >> n >> m)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                fail("expected header 'n m [weighted]'");
            }
            if (ls >> flag) {
                if (flag != "weighted") fail("unknown header flag '" + flag + "'");
                out.weighted = true;
            }
            have_header = true;
            continue;
        }
        int64_t u, v;
        if (!(ls >> u >> v)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            fail("expected 'u v" + std::string(out.weighted ? " w'" : "'"));
        }
        if (u < 0 || v < 0 || u >= n || v >= n) fail("endpoint out of range");
        Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v), 0};
        if (out.weighted) {
            int64_t w;
            if (!(ls >> w)) fail("missing weight");
            if (w < 0) fail("negative weight");
            e.w = static_cast<Weight>(w);
        }
        edges.push_back(e);
    }
    if (!have_header) throw InputError("empty graph file");
    if (edges.size() != m) {
        // Header count is advisory after dedup, but a mismatch in raw lines is
        // almost always a truncated file.
        if (edges.size() < m) throw InputError("fewer edges than header declares");
    }
    if (out.weighted) {
        out.wg = WDiGraph::from_edge_list(n, edges);
        // Realizes the "polynomially bounded" premise; default bound n^4.
        if (n > 1) {
            bigint bound = 1;
            for (uint64_t i = 0; i < w_poly_bound_exp; ++i) bound *= n;
            if (bigint(out.wg.w_max()) > bound)
                throw InputError("max weight exceeds configured polynomial bound n^" +
                                 std::to_string(w_poly_bound_exp));
        }
    } else {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        pairs.reserve(edges.size());
        for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
        out.g = DiGraph::from_edge_list(n, pairs);
    }
    return out;
}

} // namespace hopcut
