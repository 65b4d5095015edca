#include <doctest.h>

#include "hopcut/hopset.hpp"
#include "hopcut/rng.hpp"
#include "hopcut/search.hpp"
#include "hopcut/shortcut.hpp"
#include "hopcut/verify.hpp"
#include "oracles.hpp"

using namespace hopcut;

namespace {
WDiGraph unit_chain(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
    return WDiGraph::from_edge_list(n, e);
}
} // namespace

TEST_CASE("tc_oracle basics") {
    auto chain = gen_path(3);
    auto m = tc_oracle(chain);
    for (Vertex i = 0; i < 3; ++i)
        for (Vertex j = 0; j < 3; ++j) CHECK(m.get(i, j) == (i <= j));

    std::vector<std::pair<Vertex, Vertex>> none;
    auto empty = DiGraph::from_edge_list(4, none);
    auto em = tc_oracle(empty);
    for (Vertex i = 0; i < 4; ++i)
        for (Vertex j = 0; j < 4; ++j) CHECK(em.get(i, j) == (i == j));

    auto big = gen_path(600);
    CHECK_THROWS_AS(tc_oracle(big), PreconditionError);
}

TEST_CASE("tc_oracle agrees with boolmat transitive closure") {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        auto g = gen_random_dag(40, 100, seed);
        auto m = tc_oracle(g);
        std::vector<Vertex> all(40);
        for (Vertex v = 0; v < 40; ++v) all[v] = v;
        auto closure = transitive_closure(g, VertexSubset::of(all));
        BoolMat from_closure = BoolMat::identity(40);
        for (auto [u, v] : closure) from_closure.set(u, v);
        CHECK(m == from_closure);
    }
}

TEST_CASE("verify_shortcut baselines") {
    auto chain = gen_path(4);
    AugmentSet empty;
    auto rep = verify_shortcut(chain, empty);
    CHECK(rep.ok());
    CHECK(rep.beta_meas == 3);

    AugmentSet full;
    for (Vertex i = 0; i < 4; ++i)
        for (Vertex j = i + 1; j < 4; ++j) full.edges.push_back({i, j, 0});
    auto rep2 = verify_shortcut(chain, full);
    CHECK(rep2.ok());
    CHECK(rep2.beta_meas == 1);
}

TEST_CASE("verify_shortcut catches planted corruption") {
    auto chain = gen_path(4);
    AugmentSet bad;
    bad.edges.push_back({3, 0, 0}); // 3 does not reach 0
    auto rep = verify_shortcut(chain, bad);
    CHECK_FALSE(rep.edges_valid);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("verify_shortcut beta equals the matrix-power hop diameter") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = gen_random_dag(28, 70, seed);
        AugmentSet empty;
        auto rep = verify_shortcut(g, empty);
        auto hops = oracle::hop_matrix_power(g);
        auto reach = oracle::reach_matrix(g);
        uint32_t want = 0;
        for (Vertex s = 0; s < 28; ++s)
            for (Vertex t = 0; t < 28; ++t)
                if (s != t && reach[s][t]) want = std::max(want, hops[s][t]);
        CHECK(rep.beta_meas == want);
    }
}

TEST_CASE("beta is monotone non-increasing under augment growth") {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        auto g = gen_random_dag(32, 80, seed);
        auto reach = oracle::reach_matrix(g);
        AugmentSet some, more;
        Rng rng(seed);
        for (Vertex u = 0; u < 32; ++u)
            for (Vertex v = 0; v < 32; ++v) {
                if (u == v || !reach[u][v]) continue;
                uint64_t roll = rng.next() % 100;
                if (roll < 10) some.edges.push_back({u, v, 0});
                if (roll < 25) more.edges.push_back({u, v, 0});
            }
        auto r1 = verify_shortcut(g, some);
        auto r2 = verify_shortcut(g, more);
        REQUIRE(r1.ok());
        REQUIRE(r2.ok());
        CHECK(r2.beta_meas <= r1.beta_meas);
    }
}

TEST_CASE("verify_hopset baselines") {
    auto chain = unit_chain(4);
    AugmentSet empty;
    empty.weighted = true;
    auto rep = verify_hopset(chain, empty, Rational(1, 2));
    CHECK(rep.ok());
    CHECK(rep.beta_meas == 3);

    auto full = folklore_hopset(chain, 4, 1);
    auto rep2 = verify_hopset(chain, full, Rational(1, 10));
    CHECK(rep2.ok());
    CHECK(rep2.beta_meas == 1);
}

TEST_CASE("verify_hopset rejects an underweight edge") {
    auto chain = unit_chain(4);
    AugmentSet bad;
    bad.weighted = true;
    bad.edges.push_back({0, 3, 2}); // true distance is 3
    auto rep = verify_hopset(chain, bad, Rational(1, 4));
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.reach_preserved); // the cheap edge shortens distances
}

TEST_CASE("verify_hopset left inequality is an exact equality of distance arrays") {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        auto wg = randomize_weights(gen_random_dag(48, 160, seed), 8, seed);
        auto h = folklore_hopset(wg, 12, seed);
        auto aug = union_graph(wg, h);
        for (Vertex s = 0; s < 48; s += 7) {
            auto a = oracle::simple_dijkstra(wg, s);
            auto b = oracle::simple_dijkstra(aug, s);
            CHECK(a == b);
        }
        auto rep = verify_hopset(wg, h, Rational(1, 4));
        CHECK(rep.ok());
    }
}

TEST_CASE("incremental per-source beta equals the doubling-then-bisect search") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto wg = randomize_weights(gen_random_dag(40, 130, seed), 6, seed);
        auto h = folklore_hopset(wg, 8, seed);
        auto aug = union_graph(wg, h);
        for (Vertex s = 0; s < 40; s += 5) {
            auto base = dijkstra(wg, s, Dir::fwd);
            for (auto eps : {Rational(1, 10), Rational(1, 2)}) {
                CHECK(hopset_beta_for_source(aug, s, base.dist, eps) ==
                      hopset_beta_for_source_bisect(aug, s, base.dist, eps));
            }
        }
    }
}

TEST_CASE("sampled-pair mode reports and still validates") {
    auto g = gen_path(600); // beyond the default oracle cap
    auto h = folklore_shortcut(g, 100, 4);
    auto rep = verify_shortcut(g, h, 512, 128, 9);
    CHECK(rep.sampled_pairs);
    CHECK(rep.ok());
    CHECK(rep.beta_meas > 0);
    CHECK(rep.beta_meas < 600);
}

TEST_CASE("density sweep produces one row per density") {
    SweepConfig cfg;
    cfg.n = 48;
    cfg.densities = {48, 200};
    cfg.seeds = {1, 2, 3};
    auto rows = density_sweep(cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].m == 48);
    CHECK(rows[1].m == 200);
    for (const auto& r : rows) {
        CHECK(r.median_beta >= 1);
        CHECK(r.median_parbfs_span > 0);
    }
}
