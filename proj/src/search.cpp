#include "hopcut/search.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <queue>

namespace hopcut {

namespace {
template <typename G>
std::span<const Vertex> neighbors(const G& g, Vertex v, Dir dir) {
    return dir == Dir::fwd ? g.out(v) : g.in(v);
}
} // namespace

HopDistances bfs(const DiGraph& g, Vertex s, Dir dir, uint32_t hop_cap) {
    HopDistances res;
    res.dist.assign(g.n(), kUnreachedHops);
    res.dist[s] = 0;
    std::vector<Vertex> queue{s};
    for (size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        uint32_t d = res.dist[v];
        if (d >= hop_cap) continue;
        for (Vertex u : neighbors(g, v, dir)) {
            if (res.dist[u] == kUnreachedHops) {
                res.dist[u] = d + 1;
                queue.push_back(u);
            }
        }
    }
    return res;
}

ParBfsResult par_bfs(const DiGraph& g, Vertex s, CostMeter& meter, Dir dir) {
    const Vertex n = g.n();
    ParBfsResult res;
    res.hops.dist.assign(n, kUnreachedHops);
    res.hops.dist[s] = 0;

    // Settlement claims are atomic test-and-set so each vertex is settled
    // exactly once no matter how frontier chunks are scheduled. Chunk
    // boundaries are fixed by size, not thread count, so the frontier order
    // and the meter are identical at any parallelism.
    std::unique_ptr<std::atomic<uint8_t>[]> claimed(new std::atomic<uint8_t>[n]);
    for (Vertex v = 0; v < n; ++v) claimed[v].store(0, std::memory_order_relaxed);
    claimed[s].store(1, std::memory_order_relaxed);

    constexpr size_t kChunk = 512;
    std::vector<Vertex> frontier{s};
    uint32_t level_dist = 0;
    while (!frontier.empty()) {
        res.levels++;
        uint64_t scan_work = 0;
        for (Vertex v : frontier) scan_work += neighbors(g, v, dir).size() + 1;

        size_t n_chunks = (frontier.size() + kChunk - 1) / kChunk;
        std::vector<std::vector<Vertex>> found(n_chunks);
        std::vector<std::function<void()>> tasks;
        tasks.reserve(n_chunks);
        for (size_t c = 0; c < n_chunks; ++c) {
            tasks.emplace_back([&, c] {
                size_t lo = c * kChunk, hi = std::min(frontier.size(), lo + kChunk);
                for (size_t i = lo; i < hi; ++i) {
                    for (Vertex u : neighbors(g, frontier[i], dir)) {
                        if (!claimed[u].exchange(1, std::memory_order_relaxed)) {
                            res.hops.dist[u] = level_dist + 1;
                            found[c].push_back(u);
                        }
                    }
                }
            });
        }
        TaskPool::instance().run(tasks);
        meter.add_level(scan_work, 1);

        std::vector<Vertex> next;
        for (auto& f : found) next.insert(next.end(), f.begin(), f.end());
        frontier = std::move(next);
        ++level_dist;
    }
    return res;
}

WeightedDistances dijkstra(const WDiGraph& g, Vertex s, Dir dir,
                           Weight dist_cap, CostMeter* meter) {
    WeightedDistances res;
    res.dist.assign(g.n(), kUnreachedW);
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    res.dist[s] = 0;
    pq.push({0, s});
    uint64_t work = 0;
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d != res.dist[v]) continue;
        ++work;
        auto dst = dir == Dir::fwd ? g.out(v) : g.in(v);
        auto ws = dir == Dir::fwd ? g.out_w(v) : g.in_w(v);
        for (size_t i = 0; i < dst.size(); ++i) {
            ++work;
            Weight nd = d + ws[i];
            if (nd > dist_cap) continue;
            if (nd < res.dist[dst[i]]) {
                res.dist[dst[i]] = nd;
                pq.push({nd, dst[i]});
            }
        }
    }
    if (meter) meter->add_serial(work);
    return res;
}

AugmentSet trunc_sssp(const WDiGraph& g, Vertex v, uint64_t y, CostMeter* meter) {
    AugmentSet out;
    out.weighted = true;
    if (y == 0) return out;

    // Truncated Dijkstra. The y-th settle fixes a cutoff distance D*; the
    // search keeps settling through the whole D* tie group (equal distances
    // can surface late through zero-weight edges), then the nearest y under
    // the (dist, id) order are kept.
    auto one_side = [&](Dir dir) {
        std::vector<Weight> dist(g.n(), kUnreachedW);
        using Item = std::pair<Weight, Vertex>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[v] = 0;
        pq.push({0, v});
        uint64_t work = 0;
        Weight cutoff = kUnreachedW;
        std::vector<uint8_t> done(g.n(), 0);
        std::vector<std::pair<Weight, Vertex>> settled;
        while (!pq.empty()) {
            auto [d, x] = pq.top();
            pq.pop();
            if (done[x] || d != dist[x]) continue;
            if (settled.size() >= y && d > cutoff) break;
            done[x] = 1;
            ++work;
            if (x != v) {
                settled.push_back({d, x});
                if (settled.size() == y) cutoff = d;
            }
            auto dst = dir == Dir::fwd ? g.out(x) : g.in(x);
            auto ws = dir == Dir::fwd ? g.out_w(x) : g.in_w(x);
            for (size_t i = 0; i < dst.size(); ++i) {
                ++work;
                Weight nd = d + ws[i];
                if (!done[dst[i]] && nd < dist[dst[i]]) {
                    dist[dst[i]] = nd;
                    pq.push({nd, dst[i]});
                }
            }
        }
        std::sort(settled.begin(), settled.end());
        if (settled.size() > y) settled.resize(y);
        for (auto [d, x] : settled) {
            if (dir == Dir::fwd)
                out.edges.push_back({v, x, d});
            else
                out.edges.push_back({x, v, d});
        }
        if (meter) meter->add_serial(work);
    };
    one_side(Dir::fwd);
    one_side(Dir::bwd);
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

WeightedDistances hop_limited_bf(const WDiGraph& g, Vertex s, uint32_t h) {
    WeightedDistances cur;
    cur.dist.assign(g.n(), kUnreachedW);
    cur.dist[s] = 0;
    for (uint32_t round = 0; round < h; ++round) {
        WeightedDistances next = cur;
        bool changed = false;
        for (Vertex u = 0; u < g.n(); ++u) {
            if (cur.dist[u] == kUnreachedW) continue;
            auto dst = g.out(u);
            auto ws = g.out_w(u);
            for (size_t i = 0; i < dst.size(); ++i) {
                Weight nd = cur.dist[u] + ws[i];
                if (nd < next.dist[dst[i]]) {
                    next.dist[dst[i]] = nd;
                    changed = true;
                }
            }
        }
        cur = std::move(next);
        if (!changed) break;
    }
    return cur;
}

RoundedDistances rounded_bounded_search(const WDiGraph& g, Vertex s,
                                        const Rational& delta, const Rational& eps,
                                        uint32_t h0, CostMeter& meter) {
    if (delta.num <= 0) throw InputError("rounded_bounded_search: delta must be positive");
    if (eps.num <= 0 || !(eps < Rational(1, 1)) || h0 == 0)
        throw InputError("rounded_bounded_search: need eps in (0,1) and h0 >= 1");

    RoundedDistances res;
    // unit = eps * delta / (9 * h0); kept as bigint num/den, reduced.
    bigint unum = bigint(eps.num) * delta.num;
    bigint uden = bigint(eps.den) * delta.den * 9 * h0;
    bigint gg = boost::multiprecision::gcd(unum, uden);
    unum /= gg;
    uden /= gg;
    if (unum > std::numeric_limits<int64_t>::max() || uden > std::numeric_limits<int64_t>::max())
        throw InputError("rounding unit overflow");
    res.unit = Rational(static_cast<int64_t>(unum), static_cast<int64_t>(uden));

    auto to_units = [&](Weight w) -> uint64_t {
        bigint q = (bigint(w) * uden + unum - 1) / unum; // ceil(w / unit)
        if (q >= kUnreachedW) return kUnreachedW - 1;    // beyond any cap
        return static_cast<uint64_t>(q);
    };
    // cap = floor(2*delta / unit) + h0: everything with true distance <= 2*delta settles.
    bigint cap = (bigint(2) * delta.num * uden) / (bigint(delta.den) * unum);
    cap += h0;
    res.cap_units = cap > std::numeric_limits<uint64_t>::max()
                        ? UINT64_MAX
                        : static_cast<uint64_t>(cap);

    const Vertex n = g.n();
    res.units.assign(n, kUnreachedW);
    res.units[s] = 0;

    // Dial-style buckets over unit distance; zero-unit edges are expanded
    // within their bucket. Only non-empty buckets cost a level.
    std::map<uint64_t, std::vector<Vertex>> buckets;
    buckets[0].push_back(s);
    std::vector<uint8_t> done(n, 0);
    while (!buckets.empty()) {
        auto it = buckets.begin();
        uint64_t t = it->first;
        if (t > res.cap_units) break;
        std::vector<Vertex> bucket = std::move(it->second);
        buckets.erase(it);
        uint64_t work = 0;
        // FIFO within the bucket so zero-unit chains settle in this level.
        for (size_t head = 0; head < bucket.size(); ++head) {
            Vertex v = bucket[head];
            if (done[v]) continue;
            if (res.units[v] != t) continue;
            done[v] = 1;
            ++work;
            auto dst = g.out(v);
            auto ws = g.out_w(v);
            for (size_t i = 0; i < dst.size(); ++i) {
                ++work;
                __uint128_t nd_wide = static_cast<__uint128_t>(t) + to_units(ws[i]);
                if (nd_wide > res.cap_units) continue;
                uint64_t nd = static_cast<uint64_t>(nd_wide);
                if (nd < res.units[dst[i]] && !done[dst[i]]) {
                    res.units[dst[i]] = nd;
                    if (nd == t)
                        bucket.push_back(dst[i]);
                    else
                        buckets[nd].push_back(dst[i]);
                }
            }
        }
        res.levels++;
        meter.add_level(work, 1);
    }
    // Anything not settled within the cap reports unreached.
    for (Vertex v = 0; v < n; ++v)
        if (!done[v]) res.units[v] = kUnreachedW;
    return res;
}

} // namespace hopcut
