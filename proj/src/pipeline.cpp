#include "hopcut/pipeline.hpp"

#include "hopcut/augment.hpp"

namespace hopcut {

SsspResult approx_sssp(const WDiGraph& g, Vertex source, const SsspOptions& opt) {
    if (source >= g.n()) throw InputError("approx_sssp: source out of range");
    SsspResult res;
    res.build_meter = CostMeter(g.n());
    res.search_meter = CostMeter(g.n());

    Rational eps_h = opt.eps / Rational(2, 1);
    HopsetParams p = HopsetParams::make(opt.preset, g.n(), eps_h, opt.seed);
    p.rho = opt.rho != 0 ? opt.rho : hopset_rho_preset(g.n(), std::max<uint64_t>(g.m(), g.n()));
    if (opt.boost_rounds > 0) p.boost_rounds = opt.boost_rounds;
    auto built = cfr_build(g, p, opt.trunc_prune, res.build_meter);
    res.h_size = built.H.size();
    WDiGraph aug = union_graph(g, built.H);

    res.h0 = opt.hopbound > 0 ? opt.hopbound : (g.n() > 1 ? g.n() - 1 : 1);
    const int jmax = g.w_max() == 0
                         ? -1
                         : static_cast<int>(63 - __builtin_clzll(uint64_t(g.n()) * g.w_max()));

    res.num.assign(g.n(), bigint(-1));
    res.den.assign(g.n(), bigint(1));
    res.num[source] = 0;
    for (int j = -1; j <= jmax; ++j) {
        Rational delta = j >= 0 ? Rational(int64_t(1) << j, 1) : Rational(1, 2);
        auto rd = rounded_bounded_search(aug, source, delta, opt.eps, res.h0, res.search_meter);
        for (Vertex v = 0; v < g.n(); ++v) {
            if (!rd.settled(v)) continue;
            auto [num, den] = rd.value(v);
            if (res.num[v] < 0 || num * res.den[v] < res.num[v] * den) {
                res.num[v] = num;
                res.den[v] = den;
            }
        }
    }

    if (g.n() <= opt.oracle_cap) {
        res.have_oracle = true;
        auto oracle = dijkstra(g, source, Dir::fwd);
        for (Vertex v = 0; v < g.n(); ++v) {
            bool have = res.num[v] >= 0;
            bool want = oracle.dist[v] != kUnreachedW;
            if (have != want) {
                res.ratio_ok = false;
                continue;
            }
            if (!want) continue;
            if (oracle.dist[v] == 0) {
                if (res.num[v] != 0) res.ratio_ok = false;
                continue;
            }
            // approx <= (1+eps) * dist, exactly.
            bigint lhs = res.num[v] * opt.eps.den;
            bigint rhs = bigint(opt.eps.den + opt.eps.num) * oracle.dist[v] * res.den[v];
            if (lhs > rhs) res.ratio_ok = false;
            double ratio =
                res.num[v].convert_to<double>() /
                (res.den[v].convert_to<double>() * static_cast<double>(oracle.dist[v]));
            res.max_ratio = std::max(res.max_ratio, ratio);
        }
    }
    return res;
}

} // namespace hopcut
