#include "hopcut/augment.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace hopcut {

bool AugmentSet::contains(Vertex u, Vertex v) const {
    Edge probe{u, v, 0};
    auto it = std::lower_bound(edges.begin(), edges.end(), probe,
                               [](const Edge& a, const Edge& b) {
                                   return std::tie(a.u, a.v) < std::tie(b.u, b.v);
                               });
    return it != edges.end() && it->u == u && it->v == v;
}

AugmentAccum::Finalized AugmentAccum::finalize() const {
    Finalized out;
    out.set.weighted = weighted_;
    std::unordered_map<uint64_t, size_t> index;
    index.reserve(proposals_.size() * 2);
    int max_level = -1;
    for (const Proposal& p : proposals_) max_level = std::max(max_level, p.level);
    out.added_per_level.assign(static_cast<size_t>(max_level + 2), 0);

    for (const Proposal& p : proposals_) {
        uint64_t key = (static_cast<uint64_t>(p.u) << 32) | p.v;
        auto [it, inserted] = index.emplace(key, out.set.edges.size());
        if (inserted) {
            out.set.edges.push_back({p.u, p.v, weighted_ ? p.w : 0});
            out.added_per_level[static_cast<size_t>(p.level + 1)]++;
        } else if (weighted_ && p.w < out.set.edges[it->second].w) {
            out.set.edges[it->second].w = p.w;
        }
    }
    std::sort(out.set.edges.begin(), out.set.edges.end());
    return out;
}

DiGraph union_graph(const DiGraph& g, const AugmentSet& h) {
    auto edges = g.edge_list();
    for (const Edge& e : h.edges) edges.emplace_back(e.u, e.v);
    return DiGraph::from_edge_list(g.n(), edges);
}

WDiGraph union_graph(const WDiGraph& g, const AugmentSet& h) {
    auto edges = g.edge_list();
    for (const Edge& e : h.edges) edges.push_back(e);
    return WDiGraph::from_edge_list(g.n(), edges);
}

void write_augment(std::ostream& os, const AugmentSet& h, Vertex n) {
    os << "# augment\n";
    os << n << ' ' << h.edges.size() << (h.weighted ? " weighted\n" : "\n");
    for (const Edge& e : h.edges) {
        os << e.u << ' ' << e.v;
        if (h.weighted) os << ' ' << e.w;
        os << '\n';
    }
}

AugmentSet read_augment(std::istream& is, Vertex expect_n) {
    LoadedGraph lg = read_graph(is, /*w_poly_bound_exp=*/64);
    AugmentSet h;
    h.weighted = lg.weighted;
    Vertex n = lg.weighted ? lg.wg.n() : lg.g.n();
    if (expect_n != 0 && n != expect_n)
        throw InputError("augment set vertex count does not match the graph");
    if (lg.weighted) {
        h.edges = lg.wg.edge_list();
    } else {
        for (auto [u, v] : lg.g.edge_list()) h.edges.push_back({u, v, 0});
    }
    return h;
}

} // namespace hopcut
