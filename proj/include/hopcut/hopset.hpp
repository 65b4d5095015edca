#pragma once

#include <functional>

#include "hopcut/augment.hpp"
#include "hopcut/graph.hpp"
#include "hopcut/params.hpp"
#include "hopcut/parexec.hpp"
#include "hopcut/trace.hpp"

namespace hopcut {

inline constexpr uint32_t kNoLevel = UINT32_MAX;

// Folklore hopset: full bidirectional Dijkstra per sampled vertex; weighted
// edges (u, v, dist(u,v)) over sampled related ordered pairs.
AugmentSet folklore_hopset(const WDiGraph& g, uint64_t sample_size, uint64_t seed,
                           CostMeter* meter = nullptr);

// Geometric-style level draw: level[v] is the smallest r in [0, ceil(log_k n)]
// whose fresh Bernoulli(min(1, lambda k^{r+1} log n / n)) succeeds, kNoLevel
// if every trial fails. One draw per (boost round, distance guess).
struct LevelAssignment {
    std::vector<uint32_t> level;
};
LevelAssignment assign_levels(uint64_t n, const HopsetParams& p, uint64_t seed);

// Fringe radius selection for a pivot: evaluates every integer eta in
// [mu(sigma-1), mu sigma] + (eta_min+1) and keeps the one minimizing
// |R(v,(eta+1)D_r) \ R(v,(eta-1)D_r)|, ties toward the smaller eta. Distances
// come from two distance-limited Dijkstras at the outermost window radius,
// bucketed per candidate.
struct FringeSpec {
    Vertex v = 0;
    uint64_t sigma = 0;
    uint64_t eta = 0;
    std::vector<Vertex> fringe; // local ids, ascending
};
FringeSpec choose_eta(const WDiGraph& g, Vertex v, uint32_t r, const Rational& d_guess,
                      const HopsetParams& p, uint64_t sigma, CostMeter* meter = nullptr);

// Optional capture of where each emitted edge's weight was computed, for
// oracle re-verification: `subgraphs` holds global member lists, records point
// into it. Record weights are pre-dedup; the final H keeps the minimum per pair.
struct EdgeProvenance {
    struct Record {
        Vertex u, v;
        Weight w;
        uint32_t subgraph;
    };
    std::vector<std::vector<Vertex>> subgraphs;
    std::vector<Record> records;
};

struct HopsetResult {
    AugmentSet H; // weighted
    RecursionTrace trace;
};

// The recursive hopset construction with its outer shell: per boost round and
// distance guess 2^j, draw levels, let shallow-level vertices shortcut their
// 2^{j+1} balls, then recurse with D = 2^j / k^c. Inside the recursion at
// level r (D_r = D / (lambda^r k^{r/2})): optional TruncSSSP pruning from
// every vertex, exact-distance edges around vertices with level r+L within
// radius eta_max D_r, and pivots (level r) that spawn a fringe subproblem and
// label their eta_v D_r ball; unlabeled vertices partition into core
// subproblems. Every edge weight is the exact distance in the subgraph that
// created it. With rounded_shell set, all searches run on the weight-rounded
// graph instead and emitted weights are rounded back up to integers.
HopsetResult cfr_build(const WDiGraph& g, const HopsetParams& p, bool trunc_prune,
                       CostMeter& meter, EdgeProvenance* prov = nullptr);

} // namespace hopcut
