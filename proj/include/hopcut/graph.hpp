#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopcut/exact.hpp"

namespace hopcut {

using Vertex = uint32_t;
using Weight = uint64_t;

inline constexpr Weight kUnreachedW = UINT64_MAX;
inline constexpr uint32_t kUnreachedHops = UINT32_MAX;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Weight w = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable digraph in CSR layout with both adjacency directions stored.
// The constructions run backward searches as often as forward ones, so the
// doubled memory buys O(1)-amortized predecessor iteration.
class DiGraph {
public:
    DiGraph() = default;

    // Deduplicates and drops self-loops; neighbor lists come out sorted.
    static DiGraph from_edge_list(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs);

    Vertex n() const { return n_; }
    uint64_t m() const { return out_dst_.size(); }

    std::span<const Vertex> out(Vertex v) const {
        return {out_dst_.data() + out_off_[v], out_dst_.data() + out_off_[v + 1]};
    }
    std::span<const Vertex> in(Vertex v) const {
        return {in_dst_.data() + in_off_[v], in_dst_.data() + in_off_[v + 1]};
    }

    std::vector<std::pair<Vertex, Vertex>> edge_list() const;

    bool has_edge(Vertex u, Vertex v) const;

private:
    friend class WDiGraph;
    Vertex n_ = 0;
    std::vector<uint64_t> out_off_{0}, in_off_{0};
    std::vector<Vertex> out_dst_, in_dst_;
};

// Weighted variant; weights are non-negative integers and w_max() is the
// maximum stored weight. n * w_max must stay below 2^62 so that path lengths
// never overflow; the loader enforces the polynomial bound separately.
class WDiGraph {
public:
    WDiGraph() = default;

    static WDiGraph from_edge_list(Vertex n, std::span<const Edge> edges);

    Vertex n() const { return n_; }
    uint64_t m() const { return out_dst_.size(); }
    Weight w_max() const { return w_max_; }

    std::span<const Vertex> out(Vertex v) const {
        return {out_dst_.data() + out_off_[v], out_dst_.data() + out_off_[v + 1]};
    }
    std::span<const Weight> out_w(Vertex v) const {
        return {out_w_.data() + out_off_[v], out_w_.data() + out_off_[v + 1]};
    }
    std::span<const Vertex> in(Vertex v) const {
        return {in_dst_.data() + in_off_[v], in_dst_.data() + in_off_[v + 1]};
    }
    std::span<const Weight> in_w(Vertex v) const {
        return {in_w_.data() + in_off_[v], in_w_.data() + in_off_[v + 1]};
    }

    std::vector<Edge> edge_list() const;

    // Unweighted view of the same topology.
    DiGraph skeleton() const;

private:
    Vertex n_ = 0;
    Weight w_max_ = 0;
    std::vector<uint64_t> out_off_{0}, in_off_{0};
    std::vector<Vertex> out_dst_, in_dst_;
    std::vector<Weight> out_w_, in_w_;
};

// Sorted vertex subset with the local<->global bijection used by induced
// subgraphs. Local ids are positions in `members`.
struct VertexSubset {
    std::vector<Vertex> members; // sorted, unique

    static VertexSubset of(std::vector<Vertex> vs);
    size_t size() const { return members.size(); }
    Vertex to_global(Vertex local) const { return members[local]; }
    // Returns kUnreachedHops when the vertex is not a member.
    Vertex to_local(Vertex global) const;
    bool contains(Vertex global) const { return to_local(global) != kUnreachedHops; }
};

DiGraph induced(const DiGraph& g, const VertexSubset& s);
WDiGraph induced(const WDiGraph& g, const VertexSubset& s);

struct SccResult {
    std::vector<Vertex> component_of;           // vertex -> component id
    DiGraph condensed;                          // acyclic
    std::vector<std::pair<Vertex, Vertex>> star_edges; // bidirected star per non-singleton SCC
    std::vector<Vertex> center_of;              // component id -> chosen center (min vertex id)
    Vertex component_count = 0;
};

// Tarjan (iterative). Star center is the minimum vertex id of its SCC.
SccResult scc_condense(const DiGraph& g);

// Topological order of a DAG; empty optional-like failure is reported by the
// bool. Used both by generators' self-checks and by jls_build's precondition.
bool topo_sort(const DiGraph& g, std::vector<Vertex>* order = nullptr);

// Generators. All are deterministic per seed: each call derives a named
// stream so corpora are bit-reproducible.
DiGraph gen_random_dag(Vertex n, uint64_t m, uint64_t seed);
DiGraph gen_layered(Vertex layers, Vertex width, double extra_density, uint64_t seed);
DiGraph gen_path(Vertex n);
WDiGraph randomize_weights(const DiGraph& g, Weight wmax, uint64_t seed);

// Edge-list text format: header "n m [weighted]", one "u v [w]" per line,
// 0-indexed, '#' comments. The canonical CLI input.
void write_graph(std::ostream& os, const DiGraph& g);
void write_graph(std::ostream& os, const WDiGraph& g);
struct LoadedGraph {
    bool weighted = false;
    DiGraph g;
    WDiGraph wg;
};
LoadedGraph read_graph(std::istream& is, uint64_t w_poly_bound_exp = 4);

} // namespace hopcut
