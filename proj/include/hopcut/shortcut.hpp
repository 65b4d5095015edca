#pragma once

#include "hopcut/augment.hpp"
#include "hopcut/graph.hpp"
#include "hopcut/params.hpp"
#include "hopcut/parexec.hpp"
#include "hopcut/trace.hpp"

namespace hopcut {

// Folklore sampler: uniformly samples `sample_size` vertices without
// replacement and adds (u,v) for every sampled ordered pair with u reaching v.
AugmentSet folklore_shortcut(const DiGraph& g, uint64_t sample_size, uint64_t seed,
                             CostMeter* meter = nullptr);

struct ShortcutResult {
    AugmentSet H;
    RecursionTrace trace;
};

// The pruned recursive shortcut construction on a DAG. At level r every
// vertex is sampled as a pivot with probability min(1, c k^{r+1} log n / n),
// n being the base graph size; pivots contribute reachability star edges and
// labels, small pivot balls get their transitive closure added when tc_prune
// is on, and label-equivalence classes recurse. Throws PreconditionError on
// cyclic input; condense SCCs first (see build_shortcut_pipeline).
ShortcutResult jls_build(const DiGraph& g, const BuildParams& p, bool tc_prune,
                         CostMeter& meter);

// Whole-digraph pipeline: SCC condensation plus bidirected stars, jls_build
// on the condensed DAG, shortcut edges mapped back through the SCC centers.
struct ShortcutPipelineResult {
    AugmentSet H; // on the original vertex ids: stars + mapped shortcuts
    RecursionTrace trace;
    Vertex scc_count = 0;
    uint64_t star_edge_count = 0;
};
ShortcutPipelineResult build_shortcut_pipeline(const DiGraph& g, const BuildParams& p,
                                               bool tc_prune, CostMeter& meter);

} // namespace hopcut
