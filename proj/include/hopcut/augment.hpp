#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hopcut/graph.hpp"

namespace hopcut {

// A set of augmentation edges: unweighted pairs for shortcut sets, exact
// distance-carrying triples for hopsets. Canonical form is sorted by (u, v)
// with no duplicates and no self-loops.
struct AugmentSet {
    bool weighted = false;
    std::vector<Edge> edges;

    size_t size() const { return edges.size(); }
    bool empty() const { return edges.empty(); }
    bool contains(Vertex u, Vertex v) const;
};

// Accumulates edge proposals tagged with the recursion level that produced
// them (level -1 = outer shell). Proposals are merged across subproblem tasks
// in task order, then deduplicated in emission order: the first proposer of a
// pair owns it in the per-level accounting, so the per-level counts sum to
// |H| exactly. Duplicates of a weighted pair keep the minimum weight.
class AugmentAccum {
public:
    explicit AugmentAccum(bool weighted) : weighted_(weighted) {}

    void add(Vertex u, Vertex v, Weight w, int level) {
        if (u == v) return;
        proposals_.push_back({u, v, w, level});
    }

    void merge(AugmentAccum&& child) {
        proposals_.insert(proposals_.end(), child.proposals_.begin(), child.proposals_.end());
    }

    bool weighted() const { return weighted_; }
    size_t proposal_count() const { return proposals_.size(); }

    struct Finalized {
        AugmentSet set;
        std::vector<uint64_t> added_per_level; // index 0 = outer shell (level -1), 1 = level 0, ...
    };
    Finalized finalize() const;

private:
    struct Proposal {
        Vertex u, v;
        Weight w;
        int level;
    };
    bool weighted_;
    std::vector<Proposal> proposals_;
};

// Union of a base graph and an augment set, for searches over G ∪ H.
DiGraph union_graph(const DiGraph& g, const AugmentSet& h);
WDiGraph union_graph(const WDiGraph& g, const AugmentSet& h);

// Serialization: the graph edge-list format flagged with a "# augment" line.
void write_augment(std::ostream& os, const AugmentSet& h, Vertex n);
AugmentSet read_augment(std::istream& is, Vertex expect_n);

} // namespace hopcut
