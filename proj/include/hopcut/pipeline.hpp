#pragma once

#include "hopcut/hopset.hpp"
#include "hopcut/search.hpp"

namespace hopcut {

// The approximate-SSSP pipeline: build a hopset for eps/2, then run the
// weight-rounded bounded search on G ∪ H at eps for every distance guess
// 2^j and take the pointwise minimum. With the default hop budget h0 = n-1
// the (1+eps) guarantee is unconditional: the rounding contributes at most
// eps/9 relative error for distances inside a guess's band. A smaller h0
// trades that guarantee for span, leaning on the hopset's measured hopbound.
struct SsspOptions {
    Rational eps{1, 4};
    uint64_t rho = 0;          // 0 = preset formula
    bool trunc_prune = true;
    uint32_t boost_rounds = 0; // 0 = preset default
    uint32_t hopbound = 0;     // rounding budget h0; 0 = n-1
    Preset preset = Preset::desk;
    uint64_t seed = 1;
    uint64_t oracle_cap = 512; // ratio check against exact Dijkstra up to here
};

struct SsspResult {
    // Exact rational values; num < 0 encodes unreachable.
    std::vector<bigint> num;
    std::vector<bigint> den;
    uint64_t h_size = 0;
    uint32_t h0 = 0;
    CostMeter build_meter, search_meter;
    // Oracle comparison (only when n <= oracle_cap):
    bool have_oracle = false;
    bool ratio_ok = true;
    double max_ratio = 1.0;
};

SsspResult approx_sssp(const WDiGraph& g, Vertex source, const SsspOptions& opt);

} // namespace hopcut
