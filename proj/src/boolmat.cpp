#include "hopcut/boolmat.hpp"

#include <functional>

namespace hopcut {

BoolMat BoolMat::identity(uint32_t dim) {
    BoolMat m(dim);
    for (uint32_t i = 0; i < dim; ++i) m.set(i, i);
    return m;
}

void BoolMat::or_with(const BoolMat& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
}

BoolMat bool_matmul(const BoolMat& a, const BoolMat& b, CostMeter* meter) {
    if (a.dim() != b.dim()) throw InputError("bool_matmul: dimension mismatch");
    const uint32_t dim = a.dim();
    const uint32_t words = a.words_per_row();
    BoolMat c(dim);
    if (dim == 0) return c;

    // Output rows are independent tasks; one level whose span is the busiest
    // row. Work unit: one machine-word OR.
    constexpr uint32_t kChunk = 64;
    const uint32_t n_chunks = (dim + kChunk - 1) / kChunk;
    std::vector<uint64_t> row_work(dim, 0);
    std::vector<std::function<void()>> tasks;
    tasks.reserve(n_chunks);
    for (uint32_t ch = 0; ch < n_chunks; ++ch) {
        tasks.emplace_back([&, ch] {
            uint32_t lo = ch * kChunk, hi = std::min(dim, lo + kChunk);
            for (uint32_t i = lo; i < hi; ++i) {
                const uint64_t* arow = a.row(i);
                uint64_t* crow = c.row(i);
                for (uint32_t k = 0; k < dim; ++k) {
                    if ((arow[k >> 6] >> (k & 63)) & 1) {
                        const uint64_t* brow = b.row(k);
                        for (uint32_t w = 0; w < words; ++w) crow[w] |= brow[w];
                        row_work[i] += words;
                    }
                }
            }
        });
    }
    TaskPool::instance().run(tasks);
    uint64_t total = 0, max_row = 0;
    for (uint64_t rw : row_work) {
        total += rw;
        max_row = std::max(max_row, rw);
    }
    if (meter) meter->add_level(total, max_row);
    return c;
}

std::vector<std::pair<Vertex, Vertex>> transitive_closure(const DiGraph& g,
                                                          const VertexSubset& s,
                                                          CostMeter* meter) {
    if (s.size() == 0) throw PreconditionError("transitive_closure: empty subset");
    const uint32_t dim = static_cast<uint32_t>(s.size());
    BoolMat m(dim);
    for (uint32_t lu = 0; lu < dim; ++lu) {
        Vertex gu = s.to_global(lu);
        for (Vertex gv : g.out(gu)) {
            Vertex lv = s.to_local(gv);
            if (lv != kUnreachedHops) m.set(lu, lv);
        }
    }
    for (uint32_t i = 0; i < dim; ++i) m.set(i, i);
    uint32_t rounds = ceil_log2(dim);
    for (uint32_t r = 0; r < rounds; ++r) m = bool_matmul(m, m, meter);

    std::vector<std::pair<Vertex, Vertex>> out;
    for (uint32_t i = 0; i < dim; ++i)
        for (uint32_t j = 0; j < dim; ++j)
            if (i != j && m.get(i, j)) out.emplace_back(s.to_global(i), s.to_global(j));
    return out;
}

} // namespace hopcut
