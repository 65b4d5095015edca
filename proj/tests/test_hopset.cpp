#include <doctest.h>

#include "hopcut/hopset.hpp"
#include "hopcut/search.hpp"
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

TEST_CASE("folklore hopset extremes") {
    auto g = unit_chain(5);
    CHECK(folklore_hopset(g, 0, 1).empty());

    auto full = folklore_hopset(g, 5, 1);
    for (Vertex i = 0; i < 5; ++i)
        for (Vertex j = i + 1; j < 5; ++j) {
            Edge want{i, j, static_cast<Weight>(j - i)};
            CHECK(std::find(full.edges.begin(), full.edges.end(), want) != full.edges.end());
        }
    auto rep = verify_hopset(g, full, Rational(1, 4));
    CHECK(rep.ok());
    CHECK(rep.beta_meas == 1);
}

TEST_CASE("folklore hopset weights equal oracle distances") {
    auto wg = randomize_weights(gen_random_dag(64, 200, 5), 9, 5);
    auto h = folklore_hopset(wg, 16, 9);
    for (const Edge& e : h.edges) {
        auto d = oracle::simple_dijkstra(wg, e.u);
        CHECK(d[e.v] == e.w);
    }
}

TEST_CASE("assign_levels honors the override hook") {
    HopsetParams p = HopsetParams::make(Preset::desk, 100, Rational(1, 4), 3);

    p.level_prob_override = Rational(1, 1);
    auto all_zero = assign_levels(100, p, 42);
    for (uint32_t l : all_zero.level) CHECK(l == 0);

    p.level_prob_override = Rational(0, 1);
    auto none = assign_levels(100, p, 42);
    for (uint32_t l : none.level) CHECK(l == kNoLevel);
}

TEST_CASE("assign_levels empirical fractions match the clamped law") {
    // Desk parameters at n = 10^4 leave interior probabilities at the first
    // few levels; the empirical fraction must sit within 3 sigma of the
    // expectation computed from the exactly-realized thresholds.
    const uint64_t n = 10000;
    HopsetParams p = HopsetParams::make(Preset::desk, n, Rational(1, 4), 5);
    auto la = assign_levels(n, p, 5);

    std::vector<double> probs; // per-level success probability, clamped
    for (uint32_t r = 0;; ++r) {
        auto gate = sampling_gate(Rational(static_cast<int64_t>(p.lambda), 1), p.k, r, n);
        probs.push_back(gate.probability());
        if (gate.always) break;
    }
    std::vector<double> expect(probs.size());
    double fail = 1.0;
    for (size_t r = 0; r < probs.size(); ++r) {
        expect[r] = fail * probs[r];
        fail *= 1.0 - probs[r];
    }
    std::vector<uint64_t> counts(probs.size() + 1, 0);
    for (uint32_t l : la.level) {
        REQUIRE(l != kNoLevel);
        REQUIRE(l < counts.size());
        counts[l]++;
    }
    for (size_t r = 0; r < probs.size(); ++r) {
        double frac = static_cast<double>(counts[r]) / n;
        double sigma = std::sqrt(expect[r] * (1 - expect[r]) / n);
        CHECK(std::abs(frac - expect[r]) <= 3 * sigma + 1e-12);
    }

    // Paper preset saturates at level 0 here: everyone lands on 0, exactly.
    HopsetParams pp = HopsetParams::make(Preset::paper, n, Rational(1, 4), 5);
    auto lp = assign_levels(n, pp, 5);
    for (uint32_t l : lp.level) CHECK(l == 0);
}

TEST_CASE("choose_eta on an isolated vertex takes the window minimum") {
    std::vector<Edge> none;
    auto g = WDiGraph::from_edge_list(3, none);
    HopsetParams p = HopsetParams::make(Preset::desk, 3, Rational(1, 4), 1);
    auto spec = choose_eta(g, 1, 0, Rational(4, 1), p, 2);
    // window = mu[(sigma-1), sigma] + eta_min + 1 with mu = 2: [10, 12]
    CHECK(spec.eta == 2 * (2 - 1) + 7 + 1);
    CHECK(spec.fringe.empty());
}

TEST_CASE("choose_eta on a star: fringe is empty once the ball saturates") {
    std::vector<Edge> e;
    for (Vertex v = 1; v <= 10; ++v) e.push_back({0, v, 1});
    auto g = WDiGraph::from_edge_list(11, e);
    HopsetParams p = HopsetParams::make(Preset::desk, 11, Rational(1, 4), 1);
    // D_r = 1 at r = 0 with d_guess = 1: radii are the eta values themselves;
    // every eta - 1 >= 1 swallows the whole star, so every candidate has an
    // empty fringe and the tie-break picks the window minimum.
    auto spec = choose_eta(g, 0, 0, Rational(1, 1), p, 1);
    CHECK(spec.fringe.empty());
    CHECK(spec.eta == 8); // sigma = 1 window [8, 10]
}

TEST_CASE("choose_eta matches brute-force window enumeration") {
    for (uint64_t seed = 1; seed <= 15; ++seed) {
        auto wg = randomize_weights(gen_random_dag(64, 200, seed), 5, seed);
        HopsetParams p = HopsetParams::make(Preset::desk, 64, Rational(1, 4), seed);
        const Vertex v = static_cast<Vertex>(seed % 64);
        const uint64_t sigma = 1 + seed % p.sigma_max;
        const Rational d_guess(3, 2);
        auto spec = choose_eta(wg, v, 1, d_guess, p, sigma);

        // Brute force: full Dijkstras, then count the annulus per candidate.
        auto fw = oracle::simple_dijkstra(wg, v, false);
        auto bw = oracle::simple_dijkstra(wg, v, true);
        const uint64_t mu = p.window_mu();
        uint64_t best_eta = 0, best_size = UINT64_MAX;
        for (uint64_t eta = mu * (sigma - 1) + p.eta_min + 1;
             eta <= mu * sigma + p.eta_min + 1; ++eta) {
            auto count_le = [&](uint64_t term) {
                uint64_t cap = floor_scaled_radius(Rational(static_cast<int64_t>(term), 1),
                                                   d_guess, p.lambda, p.k, 1, UINT64_MAX - 1);
                uint64_t c = 0;
                for (Vertex u = 0; u < 64; ++u) {
                    uint64_t key = std::min(fw[u], bw[u]);
                    if (key != oracle::kInf && key <= cap) ++c;
                }
                return c;
            };
            uint64_t size = count_le(eta + 1) - count_le(eta - 1);
            if (size < best_size) {
                best_size = size;
                best_eta = eta;
            }
        }
        CHECK(spec.eta == best_eta);
        CHECK(spec.fringe.size() == best_size);
    }
}

TEST_CASE("cfr on trivial graphs") {
    std::vector<Edge> none;
    auto single = WDiGraph::from_edge_list(1, none);
    HopsetParams p = HopsetParams::make(Preset::desk, 1, Rational(1, 4), 1);
    CostMeter meter(1);
    auto res = cfr_build(single, p, true, meter);
    CHECK(res.H.empty());
}

TEST_CASE("cfr two vertices with forced shallow levels emits the shell edge") {
    std::vector<Edge> e{{0, 1, 1}};
    auto g = WDiGraph::from_edge_list(2, e);
    HopsetParams p = HopsetParams::make(Preset::desk, 2, Rational(1, 4), 1);
    p.level_prob_override = Rational(1, 1); // everyone lands on level 0 <= L
    p.boost_rounds = 1;
    CostMeter meter(2);
    auto res = cfr_build(g, p, false, meter);
    CHECK(res.H.contains(0, 1));
    for (const Edge& ed : res.H.edges)
        if (ed.u == 0 && ed.v == 1) CHECK(ed.w == 1);
    auto rep = verify_hopset(g, res.H, Rational(1, 4));
    CHECK(rep.ok());
    CHECK(rep.beta_meas == 1);
}

TEST_CASE("cfr verifies on random weighted DAGs, both prune modes") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        auto wg = randomize_weights(gen_random_dag(64, 256, seed), 9, seed);
        for (bool prune : {true, false}) {
            HopsetParams p = HopsetParams::make(Preset::desk, 64, Rational(1, 4), seed);
            p.rho = hopset_rho_preset(64, 256);
            CostMeter meter(64);
            auto res = cfr_build(wg, p, prune, meter);
            auto rep = verify_hopset(wg, res.H, Rational(1, 4));
            CHECK(rep.reach_preserved); // dist_{G∪H} == dist_G exactly
            CHECK(rep.edges_valid);
            CHECK(rep.beta_meas <= 63);
            CHECK(res.trace.depth() <= 4);

            uint64_t level_sum = res.trace.outer_edges;
            for (const auto& ls : res.trace.levels) level_sum += ls.edges_added;
            CHECK(level_sum == res.H.size());
        }
    }
}

TEST_CASE("cfr edge weights equal distances in their creation subgraphs") {
    auto wg = randomize_weights(gen_random_dag(48, 180, 11), 7, 11);
    HopsetParams p = HopsetParams::make(Preset::desk, 48, Rational(1, 4), 11);
    p.rho = 2;
    CostMeter meter(48);
    EdgeProvenance prov;
    auto res = cfr_build(wg, p, true, meter, &prov);
    CHECK(!prov.records.empty());
    for (const auto& rec : prov.records) {
        const auto& members = prov.subgraphs[rec.subgraph];
        VertexSubset sub = VertexSubset::of(members);
        auto local = induced(wg, sub);
        auto d = oracle::simple_dijkstra(local, sub.to_local(rec.u));
        REQUIRE(sub.contains(rec.u));
        REQUIRE(sub.contains(rec.v));
        CHECK(d[sub.to_local(rec.v)] == rec.w);
    }
    // The kept weight per pair is the minimum over its records.
    for (const Edge& e : res.H.edges) {
        Weight best = kUnreachedW;
        for (const auto& rec : prov.records)
            if (rec.u == e.u && rec.v == e.v) best = std::min(best, rec.w);
        CHECK(e.w == best);
    }
}

TEST_CASE("trunc pruning shortcuts short paths in small balls to one hop") {
    // A planted 3-hop path inside a tiny component: rho^2 covers the whole
    // ball, so TruncSSSP alone must produce the 1-hop exact edge.
    std::vector<Edge> e{{0, 1, 2}, {1, 2, 3}, {2, 3, 1}};
    auto g = WDiGraph::from_edge_list(4, e);
    HopsetParams p = HopsetParams::make(Preset::desk, 4, Rational(1, 4), 2);
    p.rho = 2; // rho^2 = 4 nearest
    p.level_prob_override = Rational(0, 1); // no pivots, no shortcutters
    p.boost_rounds = 1;
    CostMeter meter(4);
    auto res = cfr_build(g, p, true, meter);
    CHECK(res.H.contains(0, 3));
    for (const Edge& ed : res.H.edges)
        if (ed.u == 0 && ed.v == 3) CHECK(ed.w == 6);
}

TEST_CASE("fringe and core subproblem geometry") {
    // Fringe members are exactly the annulus; cores at one level are disjoint.
    auto wg = randomize_weights(gen_random_dag(64, 220, 3), 4, 3);
    HopsetParams p = HopsetParams::make(Preset::desk, 64, Rational(1, 4), 3);
    auto spec = choose_eta(wg, 7, 0, Rational(8, 1), p, 2);
    auto fw = oracle::simple_dijkstra(wg, 7, false);
    auto bw = oracle::simple_dijkstra(wg, 7, true);
    uint64_t cap_out = floor_scaled_radius(Rational(static_cast<int64_t>(spec.eta + 1), 1),
                                           Rational(8, 1), p.lambda, p.k, 0, UINT64_MAX - 1);
    uint64_t cap_in = floor_scaled_radius(Rational(static_cast<int64_t>(spec.eta - 1), 1),
                                          Rational(8, 1), p.lambda, p.k, 0, UINT64_MAX - 1);
    for (Vertex u = 0; u < 64; ++u) {
        uint64_t key = std::min(fw[u], bw[u]);
        bool in_fringe =
            std::find(spec.fringe.begin(), spec.fringe.end(), u) != spec.fringe.end();
        CHECK(in_fringe == (key != oracle::kInf && key > cap_in && key <= cap_out));
    }
}

TEST_CASE("hopset rho preset") {
    CHECK(hopset_rho_preset(100, 100) == 1);
    CHECK(hopset_rho_preset(256, 256 * 256) == 4); // floor(n^{1/4})
    CHECK(hopset_rho_preset(256, 4096) == 2);      // floor(16^{1/4})
    CHECK_THROWS_AS(hopset_rho_preset(10, 5), InputError);
}

TEST_CASE("trunc pruning never hurts the measured hopbound (statistical)") {
    std::vector<uint32_t> beta_on, beta_off;
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        auto wg = randomize_weights(gen_layered(12, 4, 0.4, seed), 6, seed);
        for (bool prune : {true, false}) {
            HopsetParams p = HopsetParams::make(Preset::desk, wg.n(), Rational(1, 4), seed);
            p.rho = 3;
            CostMeter meter(wg.n());
            auto res = cfr_build(wg, p, prune, meter);
            auto rep = verify_hopset(wg, res.H, Rational(1, 4));
            REQUIRE(rep.ok());
            (prune ? beta_on : beta_off).push_back(rep.beta_meas);
        }
    }
    auto med = [](std::vector<uint32_t> v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };
    CHECK(med(beta_on) <= med(beta_off));
}

TEST_CASE("paper preset degenerates but stays correct at desk scale") {
    // Every sampling probability clamps to 1, so levels collapse to 0 and the
    // shell covers everything; the verdicts must still be exact.
    auto wg = randomize_weights(gen_random_dag(32, 128, 4), 9, 4);
    HopsetParams p = HopsetParams::make(Preset::paper, 32, Rational(1, 4), 4);
    p.rho = 2;
    p.boost_rounds = 2; // keep the smoke test quick
    CostMeter meter(32);
    auto res = cfr_build(wg, p, true, meter);
    auto rep = verify_hopset(wg, res.H, Rational(1, 4));
    CHECK(rep.ok());
    CHECK(rep.beta_meas == 1);
}

TEST_CASE("rounded shell mode keeps weights valid") {
    auto wg = randomize_weights(gen_random_dag(32, 120, 9), 10, 9);
    HopsetParams p = HopsetParams::make(Preset::desk, 32, Rational(1, 4), 9);
    p.rounded_shell = true;
    p.boost_rounds = 1;
    CostMeter meter(32);
    auto res = cfr_build(wg, p, false, meter);
    CHECK(res.trace.rounded_shell);
    // Rounded weights are still >= true distances, so nothing shortens.
    auto rep = verify_hopset(wg, res.H, Rational(1, 2));
    CHECK(rep.reach_preserved);
    CHECK(rep.edges_valid);
}
