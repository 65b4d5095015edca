#pragma once

#include <cstdint>
#include <vector>

#include "hopcut/augment.hpp"
#include "hopcut/graph.hpp"
#include "hopcut/parexec.hpp"

namespace hopcut {

// Dense row-major bit matrix, machine-word blocked.
class BoolMat {
public:
    BoolMat() = default;
    explicit BoolMat(uint32_t dim)
        : dim_(dim), words_((dim + 63) / 64), bits_(static_cast<size_t>(dim) * words_, 0) {}

    static BoolMat identity(uint32_t dim);

    uint32_t dim() const { return dim_; }
    uint32_t words_per_row() const { return words_; }

    bool get(uint32_t i, uint32_t j) const {
        return (bits_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1;
    }
    void set(uint32_t i, uint32_t j) {
        bits_[static_cast<size_t>(i) * words_ + (j >> 6)] |= uint64_t(1) << (j & 63);
    }
    void clear(uint32_t i, uint32_t j) {
        bits_[static_cast<size_t>(i) * words_ + (j >> 6)] &= ~(uint64_t(1) << (j & 63));
    }

    const uint64_t* row(uint32_t i) const { return bits_.data() + static_cast<size_t>(i) * words_; }
    uint64_t* row(uint32_t i) { return bits_.data() + static_cast<size_t>(i) * words_; }

    void or_with(const BoolMat& o);
    bool operator==(const BoolMat& o) const = default;

private:
    uint32_t dim_ = 0;
    uint32_t words_ = 0;
    std::vector<uint64_t> bits_;
};

// C[i][j] = OR_k (A[i][k] AND B[k][j]); word-blocked cubic, parallel over
// output rows. One unit of metered work per word OR.
BoolMat bool_matmul(const BoolMat& a, const BoolMat& b, CostMeter* meter = nullptr);

// All ordered pairs (u,v), u != v, with u reaching v inside G[s], in global
// vertex ids; (A or I) squared ceil(log2 |s|) times. The reflexive closure is
// internal; diagonal pairs are stripped from the output.
std::vector<std::pair<Vertex, Vertex>> transitive_closure(const DiGraph& g,
                                                          const VertexSubset& s,
                                                          CostMeter* meter = nullptr);

} // namespace hopcut
