#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace hopcut {

// Per-level observability for the recursive constructions. Edge counts are
// dedup-aware (first proposer owns the edge), so summing edges_added over
// levels plus the outer bucket reproduces |H| exactly.
struct LevelStats {
    uint64_t subproblems = 0;
    uint64_t pivots = 0;
    uint64_t max_ball = 0;
    uint64_t prune_calls = 0;
    uint64_t edges_added = 0;
};

struct RecursionTrace {
    std::vector<LevelStats> levels;
    uint64_t outer_edges = 0; // SCC stars (shortcut) or outer-shell edges (hopset)
    uint64_t prune_work = 0;  // metered work spent inside the pruning calls
    uint64_t total_edges = 0;
    bool rounded_shell = false;
    uint32_t depth() const { return static_cast<uint32_t>(levels.size()); }

    LevelStats& level(uint32_t r) {
        if (levels.size() <= r) levels.resize(r + 1);
        return levels[r];
    }
    void merge(const RecursionTrace& o) {
        if (levels.size() < o.levels.size()) levels.resize(o.levels.size());
        for (size_t i = 0; i < o.levels.size(); ++i) {
            levels[i].subproblems += o.levels[i].subproblems;
            levels[i].pivots += o.levels[i].pivots;
            levels[i].max_ball = std::max(levels[i].max_ball, o.levels[i].max_ball);
            levels[i].prune_calls += o.levels[i].prune_calls;
        }
        outer_edges += o.outer_edges;
        prune_work += o.prune_work;
    }
};

void write_trace(std::ostream& os, const RecursionTrace& t, const char* prefix);

} // namespace hopcut
