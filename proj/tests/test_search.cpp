#include <doctest.h>

#include "hopcut/search.hpp"
#include "oracles.hpp"

using namespace hopcut;

namespace {
WDiGraph unit_chain(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
    return WDiGraph::from_edge_list(n, e);
}
} // namespace

TEST_CASE("bfs on a path, both directions, hop cap") {
    auto g = gen_path(4);
    auto fwd = bfs(g, 0, Dir::fwd);
    CHECK(fwd.dist == std::vector<uint32_t>{0, 1, 2, 3});
    auto bwd = bfs(g, 3, Dir::bwd);
    CHECK(bwd.dist == std::vector<uint32_t>{3, 2, 1, 0});
    auto capped = bfs(g, 0, Dir::fwd, 1);
    CHECK(capped.dist == std::vector<uint32_t>{0, 1, kUnreachedHops, kUnreachedHops});
}

TEST_CASE("par_bfs equals bfs on 200 random graphs") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        auto g = gen_random_dag(24 + seed % 17, 3 * (24 + seed % 17), seed);
        CostMeter meter(g.n());
        auto par = par_bfs(g, static_cast<Vertex>(seed % g.n()), meter);
        auto ser = bfs(g, static_cast<Vertex>(seed % g.n()), Dir::fwd);
        CHECK(par.hops.dist == ser.dist);
    }
}

TEST_CASE("par_bfs level count and span on a path") {
    auto g = gen_path(256);
    CostMeter meter(256);
    auto res = par_bfs(g, 0, meter);
    CHECK(res.levels == 256);
    // One relax unit plus one barrier per processed frontier.
    CHECK(meter.span() == 256ull * (1 + meter.barrier_units()));
}

TEST_CASE("dijkstra with caps") {
    auto g = unit_chain(4);
    CHECK(dijkstra(g, 0, Dir::fwd).dist == std::vector<Weight>{0, 1, 2, 3});
    auto capped = dijkstra(g, 0, Dir::fwd, 1);
    CHECK(capped.dist == std::vector<Weight>{0, 1, kUnreachedW, kUnreachedW});
    CHECK(dijkstra(g, 3, Dir::bwd).dist == std::vector<Weight>{3, 2, 1, 0});
}

TEST_CASE("dijkstra equals hop_limited_bf at h = n on random weighted DAGs") {
    for (uint64_t seed = 1; seed <= 12; ++seed) {
        auto wg = randomize_weights(gen_random_dag(32, 110, seed), 9, seed);
        auto d = dijkstra(wg, 0, Dir::fwd);
        auto bf = hop_limited_bf(wg, 0, 32);
        CHECK(d.dist == bf.dist);
    }
}

TEST_CASE("trunc_sssp on a chain and isolated vertex") {
    auto g = unit_chain(3);
    auto t = trunc_sssp(g, 1, 1);
    REQUIRE(t.edges.size() == 2);
    CHECK(t.edges[0] == Edge{0, 1, 1});
    CHECK(t.edges[1] == Edge{1, 2, 1});

    std::vector<Edge> none;
    auto iso = WDiGraph::from_edge_list(3, none);
    CHECK(trunc_sssp(iso, 1, 5).edges.empty());
}

TEST_CASE("trunc_sssp matches top-y of full Dijkstra order under the tie-break") {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        auto wg = randomize_weights(gen_random_dag(32, 96, seed), 4, seed);
        const Vertex v = static_cast<Vertex>(seed % 32);
        const uint64_t y = 4;
        auto got = trunc_sssp(wg, v, y);

        auto check_side = [&](bool backward) {
            auto d = oracle::simple_dijkstra(wg, v, backward);
            std::vector<std::pair<uint64_t, Vertex>> order;
            for (Vertex t = 0; t < 32; ++t)
                if (t != v && d[t] != oracle::kInf) order.push_back({d[t], t});
            std::sort(order.begin(), order.end());
            order.resize(std::min<size_t>(order.size(), y));
            for (auto [dist, t] : order) {
                Edge want = backward ? Edge{t, v, dist} : Edge{v, t, dist};
                CHECK(std::find(got.edges.begin(), got.edges.end(), want) != got.edges.end());
            }
        };
        check_side(false);
        check_side(true);
        CHECK(got.edges.size() <= 2 * y);
    }
}

TEST_CASE("trunc_sssp edge weights equal true distances") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto wg = randomize_weights(gen_random_dag(48, 150, seed), 6, seed);
        auto t = trunc_sssp(wg, 5, 7);
        for (const Edge& e : t.edges) {
            auto d = oracle::simple_dijkstra(wg, e.u);
            CHECK(d[e.v] == e.w);
        }
    }
}

TEST_CASE("hop_limited_bf basics and monotonicity") {
    auto g = unit_chain(4);
    auto h0 = hop_limited_bf(g, 0, 0);
    CHECK(h0.dist == std::vector<Weight>{0, kUnreachedW, kUnreachedW, kUnreachedW});
    auto h2 = hop_limited_bf(g, 0, 2);
    CHECK(h2.dist == std::vector<Weight>{0, 1, 2, kUnreachedW});

    for (uint64_t seed = 1; seed <= 50; ++seed) {
        auto wg = randomize_weights(gen_random_dag(20, 60, seed), 5, seed);
        auto full = dijkstra(wg, 0, Dir::fwd);
        CHECK(hop_limited_bf(wg, 0, 19).dist == full.dist);
        auto prev = hop_limited_bf(wg, 0, 0);
        for (uint32_t h = 1; h <= 6; ++h) {
            auto cur = hop_limited_bf(wg, 0, h);
            for (Vertex v = 0; v < 20; ++v) CHECK(cur.dist[v] <= prev.dist[v]);
            prev = cur;
        }
    }
}

TEST_CASE("rounded search with unit 1 equals dijkstra") {
    // eps*delta/(9*h0) = 1 with eps = 9/10, delta = 10, h0 = 1.
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        auto wg = randomize_weights(gen_random_dag(24, 70, seed), 3, seed);
        CostMeter meter(24);
        auto rd = rounded_bounded_search(wg, 0, Rational(10, 1), Rational(9, 10), 1, meter);
        CHECK(rd.unit == Rational(1, 1));
        auto d = dijkstra(wg, 0, Dir::fwd);
        for (Vertex v = 0; v < 24; ++v) {
            if (d.dist[v] != kUnreachedW && d.dist[v] <= 20)
                CHECK(rd.units[v] == d.dist[v]);
        }
    }
}

TEST_CASE("rounded search ceiling arithmetic on one edge") {
    std::vector<Edge> e{{0, 1, 5}};
    auto g = WDiGraph::from_edge_list(2, e);
    CostMeter meter(2);
    // unit = eps*delta/9 = (9/10)*40/9 = 4 with h0 = 1.
    auto rd = rounded_bounded_search(g, 0, Rational(40, 1), Rational(9, 10), 1, meter);
    CHECK(rd.unit == Rational(4, 1));
    REQUIRE(rd.settled(1));
    CHECK(rd.units[1] * 4 == 8);
}

TEST_CASE("rounded search sandwich on random weighted DAGs") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto wg = randomize_weights(gen_random_dag(64, 220, seed), 7, seed);
        auto d = oracle::simple_dijkstra(wg, 0);
        const Rational eps(1, 4);
        const uint32_t h0 = 63;
        Weight maxd = 0;
        for (auto x : d)
            if (x != oracle::kInf) maxd = std::max<Weight>(maxd, x);
        if (maxd == 0) continue;
        Rational delta(static_cast<int64_t>(std::max<Weight>(1, maxd / 2)), 1);
        CostMeter meter(64);
        auto rd = rounded_bounded_search(wg, 0, delta, eps, h0, meter);
        for (Vertex v = 0; v < 64; ++v) {
            if (d[v] == oracle::kInf) {
                CHECK_FALSE(rd.settled(v));
                continue;
            }
            if (!rd.settled(v)) continue; // beyond the exploration cap
            auto [num, den] = rd.value(v);
            // Never underestimates.
            CHECK(num >= bigint(d[v]) * den);
            // (1+eps)-bounded for distances in [delta, 2*delta].
            bool in_band = delta.num <= static_cast<int64_t>(d[v]) &&
                           static_cast<int64_t>(d[v]) <= 2 * delta.num;
            if (in_band) CHECK(num * 4 <= bigint(d[v]) * den * 5);
        }
    }
}

TEST_CASE("rounded search input validation") {
    auto g = unit_chain(2);
    CostMeter meter(2);
    CHECK_THROWS_AS(rounded_bounded_search(g, 0, Rational(0, 1), Rational(1, 2), 1, meter),
                    InputError);
}

TEST_CASE("rounded search handles zero-weight edges within a level") {
    std::vector<Edge> e{{0, 1, 0}, {1, 2, 0}, {2, 3, 6}};
    auto g = WDiGraph::from_edge_list(4, e);
    CostMeter meter(4);
    auto rd = rounded_bounded_search(g, 0, Rational(12, 1), Rational(3, 4), 1, meter);
    CHECK(rd.units[0] == 0);
    CHECK(rd.units[1] == 0);
    CHECK(rd.units[2] == 0);
    REQUIRE(rd.settled(3));
    CHECK(rd.units[3] == 6); // unit = 1, ceil(6/1)
}
