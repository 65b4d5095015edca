#pragma once

#include <cstdint>
#include <vector>

#include "hopcut/augment.hpp"
#include "hopcut/exact.hpp"
#include "hopcut/graph.hpp"
#include "hopcut/parexec.hpp"

namespace hopcut {

enum class Dir { fwd, bwd };

struct HopDistances {
    std::vector<uint32_t> dist; // hops, kUnreachedHops if not reached
};

struct WeightedDistances {
    std::vector<Weight> dist; // lengths, kUnreachedW if not reached
};

// Exact hop distances from (or to, with Dir::bwd) s, truncated at hop_cap.
HopDistances bfs(const DiGraph& g, Vertex s, Dir dir,
                 uint32_t hop_cap = kUnreachedHops);

// Level-synchronous parallel BFS; output equals bfs exactly. Each processed
// frontier costs one relax unit of span plus one barrier; work is the scanned
// degree sum. `levels` counts processed frontiers including the source one.
struct ParBfsResult {
    HopDistances hops;
    uint32_t levels = 0;
};
ParBfsResult par_bfs(const DiGraph& g, Vertex s, CostMeter& meter, Dir dir = Dir::fwd);

// Distance-limited Dijkstra: exact distances for all vertices with
// dist <= dist_cap, others unreached. Expansion stops at the cap rather than
// filtering afterward, so only the limited ball is touched.
WeightedDistances dijkstra(const WDiGraph& g, Vertex s, Dir dir,
                           Weight dist_cap = kUnreachedW, CostMeter* meter = nullptr);

// TruncSSSP: edges v->t with weight dist(v,t) for the y nearest distinct
// reachable t != v, plus t->v analogously from the reversed search. Ties on
// equal distance break toward the smaller vertex id.
AugmentSet trunc_sssp(const WDiGraph& g, Vertex v, uint64_t y, CostMeter* meter = nullptr);

// bdist^h via h rounds of synchronous edge relaxation.
WeightedDistances hop_limited_bf(const WDiGraph& g, Vertex s, uint32_t h);

// Weight-rounded bounded search: edge weights are rounded up to integer
// multiples of unit = eps*delta/(9*h0) and distances computed by a
// level-synchronous BFS treating one unit per level (zero-unit edges expand
// within their level). Exploration stops at floor(2*delta/unit) + h0 units,
// which settles every vertex whose true distance is at most 2*delta. Values
// are reported in units; value(v) = units[v] * unit never underestimates the
// true distance and overestimates by at most h0*unit whenever the shortest
// path uses at most h0 hops.
struct RoundedDistances {
    std::vector<uint64_t> units;  // kUnreachedW if not settled within the cap
    Rational unit;
    uint64_t cap_units = 0;
    uint32_t levels = 0; // non-empty unit-levels processed

    bool settled(Vertex v) const { return units[v] != kUnreachedW; }
    // Exact value as a rational (num, den), valid only when settled.
    std::pair<bigint, bigint> value(Vertex v) const {
        return {bigint(units[v]) * unit.num, bigint(unit.den)};
    }
};
RoundedDistances rounded_bounded_search(const WDiGraph& g, Vertex s,
                                        const Rational& delta, const Rational& eps,
                                        uint32_t h0, CostMeter& meter);

} // namespace hopcut
