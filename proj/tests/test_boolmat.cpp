#include <doctest.h>

#include <set>

#include "hopcut/boolmat.hpp"
#include "hopcut/rng.hpp"
#include "oracles.hpp"

using namespace hopcut;

namespace {
BoolMat random_mat(uint32_t dim, uint64_t seed, double density = 0.3) {
    Rng rng(seed);
    BoolMat m(dim);
    uint64_t threshold = static_cast<uint64_t>(density * 18446744073709551615.0);
    for (uint32_t i = 0; i < dim; ++i)
        for (uint32_t j = 0; j < dim; ++j)
            if (rng.next() < threshold) m.set(i, j);
    return m;
}

std::vector<std::vector<uint8_t>> to_rows(const BoolMat& m) {
    std::vector<std::vector<uint8_t>> r(m.dim(), std::vector<uint8_t>(m.dim(), 0));
    for (uint32_t i = 0; i < m.dim(); ++i)
        for (uint32_t j = 0; j < m.dim(); ++j) r[i][j] = m.get(i, j);
    return r;
}
} // namespace

TEST_CASE("identity and zero behavior") {
    auto b = random_mat(20, 5);
    auto id = BoolMat::identity(20);
    CHECK(bool_matmul(id, b) == b);
    BoolMat zero(20);
    CHECK(bool_matmul(zero, b) == zero);
    CHECK_THROWS_AS(bool_matmul(BoolMat(3), BoolMat(4)), InputError);
}

TEST_CASE("matmul equals the triple-loop reference at dim 16") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        auto a = random_mat(16, seed * 2);
        auto b = random_mat(16, seed * 2 + 1);
        auto got = to_rows(bool_matmul(a, b));
        auto want = oracle::naive_matmul(to_rows(a), to_rows(b));
        CHECK(got == want);
    }
}

TEST_CASE("matmul associativity spot check") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto a = random_mat(32, seed * 3);
        auto b = random_mat(32, seed * 3 + 1);
        auto c = random_mat(32, seed * 3 + 2);
        CHECK(bool_matmul(bool_matmul(a, b), c) == bool_matmul(a, bool_matmul(b, c)));
    }
}

TEST_CASE("transitive closure of a chain") {
    auto g = gen_path(4);
    std::vector<Vertex> all{0, 1, 2, 3};
    auto got = transitive_closure(g, VertexSubset::of(all));
    std::sort(got.begin(), got.end());
    std::vector<std::pair<Vertex, Vertex>> want{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(got == want);
}

TEST_CASE("transitive closure of an edgeless subset is empty") {
    std::vector<std::pair<Vertex, Vertex>> none;
    auto g = DiGraph::from_edge_list(5, none);
    CHECK(transitive_closure(g, VertexSubset::of({0, 2, 4})).empty());
    CHECK_THROWS_AS(transitive_closure(g, VertexSubset::of({})), PreconditionError);
}

TEST_CASE("transitive closure equals per-vertex BFS closure on subsets") {
    Rng rng(77);
    for (uint64_t seed = 1; seed <= 12; ++seed) {
        auto g = gen_random_dag(48, 140, seed);
        std::vector<Vertex> pick;
        for (Vertex v = 0; v < 48; ++v)
            if (rng.next() % 48 < 20) pick.push_back(v);
        if (pick.empty()) pick.push_back(0);
        auto sub = VertexSubset::of(pick);
        auto got = transitive_closure(g, sub);
        std::sort(got.begin(), got.end());

        auto ind = induced(g, sub);
        auto reach = oracle::reach_matrix(ind);
        std::vector<std::pair<Vertex, Vertex>> want;
        for (Vertex lu = 0; lu < ind.n(); ++lu)
            for (Vertex lv = 0; lv < ind.n(); ++lv)
                if (lu != lv && reach[lu][lv])
                    want.emplace_back(sub.to_global(lu), sub.to_global(lv));
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("closure is idempotent and antisymmetric on DAGs") {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        auto g = gen_random_dag(30, 80, seed);
        std::vector<Vertex> all(30);
        for (Vertex v = 0; v < 30; ++v) all[v] = v;
        auto sub = VertexSubset::of(all);
        auto first = transitive_closure(g, sub);

        std::set<std::pair<Vertex, Vertex>> have(first.begin(), first.end());
        for (auto [u, v] : first) CHECK_FALSE(have.count({v, u}));

        auto edges = g.edge_list();
        edges.insert(edges.end(), first.begin(), first.end());
        auto aug = DiGraph::from_edge_list(30, edges);
        auto second = transitive_closure(aug, sub);
        std::sort(first.begin(), first.end());
        std::sort(second.begin(), second.end());
        CHECK(first == second);
    }
}

TEST_CASE("matmul meters work per machine-word op") {
    auto a = BoolMat::identity(8);
    auto b = random_mat(8, 3);
    CostMeter meter(8);
    bool_matmul(a, b, &meter);
    // Identity: one word OR per output row.
    CHECK(meter.work() == 8);
    CHECK(meter.span() == 1 + meter.barrier_units());
}
