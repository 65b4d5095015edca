#pragma once

#include <cstdint>
#include <initializer_list>

namespace hopcut {

// Deterministic 64-bit PRNG (splitmix64). We deliberately avoid <random>
// distributions: their output is implementation-defined, and every sampled
// decision in this library must be bit-reproducible across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) via 128-bit multiply rejection.
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        while (true) {
            uint64_t x = next();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            uint64_t lo = static_cast<uint64_t>(m);
            if (lo >= bound || lo >= static_cast<uint64_t>(-bound) % bound)
                return static_cast<uint64_t>(m >> 64);
        }
    }

    // Success iff next() < threshold; threshold == 2^64 is expressed by always=true upstream.
    bool coin(uint64_t threshold) { return next() < threshold; }

private:
    uint64_t state_;
};

// Stream derivation: mixes tags into a fresh seed so that subproblems,
// generator calls, and boost rounds all own independent named streams.
inline uint64_t mix_stream(uint64_t seed, std::initializer_list<uint64_t> tags) {
    uint64_t h = seed ^ 0x2545f4914f6cdd1dull;
    for (uint64_t t : tags) {
        h ^= t + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        Rng r(h);
        h = r.next();
    }
    return h;
}

} // namespace hopcut
