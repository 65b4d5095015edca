#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopcut/augment.hpp"
#include "hopcut/boolmat.hpp"
#include "hopcut/graph.hpp"
#include "hopcut/params.hpp"

namespace hopcut {

// Oracle verdicts for one (graph, augment set) pair. beta_meas is the
// measured hopbound: max over related pairs of the hop count needed in G ∪ H
// (reachability) or needed to come within (1+eps) of the true distance.
struct VerifyReport {
    bool reach_preserved = false;
    bool edges_valid = false;
    uint32_t beta_meas = 0;
    uint64_t size_h = 0;
    Rational eps_used{0, 1};
    Vertex worst_u = 0, worst_v = 0;
    bool sampled_pairs = false; // beta over a seeded pair sample, not all pairs
    bool ok() const { return reach_preserved && edges_valid; }
};

// Full reachability matrix by BFS from every vertex. Guarded by a cap: the
// oracles are desk-scale tools, not production paths.
BoolMat tc_oracle(const DiGraph& g, uint64_t cap = 512);

// Shortcut verdict: every H edge realizable in g, TC(g ∪ H) = TC(g) exactly,
// beta measured over all related pairs (or a seeded sample beyond the cap).
VerifyReport verify_shortcut(const DiGraph& g, const AugmentSet& h, uint64_t oracle_cap = 512,
                             uint64_t pair_sample = 512, uint64_t sample_seed = 1);

// Hopset verdict: dist_{G∪H} = dist_G pointwise (weights are exact, so H can
// never shorten anything), and beta_meas = max over related pairs of the
// minimum hops h with bdist^h(s,t) <= dist(s,t) + ceil(eps * dist(s,t)).
VerifyReport verify_hopset(const WDiGraph& g, const AugmentSet& h, const Rational& eps,
                           uint64_t oracle_cap = 512, uint64_t pair_sample = 512,
                           uint64_t sample_seed = 1);

// Per-source hopbound: the smallest h for which every target in s's row is
// within (1+eps), i.e. max over targets of the per-target minimum. The
// incremental form advances one relaxation round at a time; the bisect form
// is the doubling-then-binary-search over whole hop_limited_bf calls. They
// agree by monotonicity of bdist in h; both are exposed so tests can pit one
// against the other.
uint32_t hopset_beta_for_source(const WDiGraph& aug, Vertex s,
                                const std::vector<Weight>& base_dist, const Rational& eps);
uint32_t hopset_beta_for_source_bisect(const WDiGraph& aug, Vertex s,
                                       const std::vector<Weight>& base_dist,
                                       const Rational& eps);

// Density sweep: per density, build a shortcut set over seeded random DAGs,
// verify, and record medians of beta, |H|, metered work and span, plus the
// span of a parallel BFS over G ∪ H from vertex 0.
struct SweepRow {
    uint64_t m = 0;
    uint64_t rho = 0;
    double median_beta = 0;
    double median_h_size = 0;
    double median_work = 0;
    double median_span = 0;
    double median_parbfs_span = 0;
};
struct SweepConfig {
    Vertex n = 256;
    std::vector<uint64_t> densities;
    std::vector<uint64_t> seeds;
    bool tc_prune = true;
    Preset preset = Preset::desk;
    uint64_t oracle_cap = 512;
};
std::vector<SweepRow> density_sweep(const SweepConfig& cfg);

} // namespace hopcut
