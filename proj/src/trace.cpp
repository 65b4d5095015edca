#include "hopcut/trace.hpp"

#include <ostream>

namespace hopcut {

void write_trace(std::ostream& os, const RecursionTrace& t, const char* prefix) {
    os << prefix << ".levels=" << t.levels.size() << '\n';
    os << prefix << ".outer_edges=" << t.outer_edges << '\n';
    os << prefix << ".prune_work=" << t.prune_work << '\n';
    os << prefix << ".total_edges=" << t.total_edges << '\n';
    os << prefix << ".rounded_shell=" << (t.rounded_shell ? 1 : 0) << '\n';
    for (size_t r = 0; r < t.levels.size(); ++r) {
        const LevelStats& ls = t.levels[r];
        os << prefix << ".level" << r << ".subproblems=" << ls.subproblems << '\n';
        os << prefix << ".level" << r << ".pivots=" << ls.pivots << '\n';
        os << prefix << ".level" << r << ".max_ball=" << ls.max_ball << '\n';
        os << prefix << ".level" << r << ".prune_calls=" << ls.prune_calls << '\n';
        os << prefix << ".level" << r << ".edges_added=" << ls.edges_added << '\n';
    }
}

} // namespace hopcut
