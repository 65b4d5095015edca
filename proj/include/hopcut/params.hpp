#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hopcut/exact.hpp"

namespace hopcut {

enum class Preset { paper, desk };

Preset parse_preset(const std::string& s);
const char* preset_name(Preset p);

// Shortcut construction knobs. `paper` pins the literal constants of the
// construction (sample constant 100, pruning threshold k^2 log^2 n, and
// k = ceil(log2 n)); `desk` uses small constants that keep the recursion
// non-degenerate at desk-scale n. All correctness invariants are
// constant-free, so presets only move the measured hopbound/size.
struct BuildParams {
    uint64_t k = 4;
    uint64_t rho = 1;
    Rational sample_c{1, 1};       // multiplies k^{r+1} log n / n
    Rational tc_threshold_c{1, 1}; // multiplies rho^2 in the pruning threshold
    double omega = 3.0;            // enters only through the rho preset formula
    Preset preset = Preset::desk;
    uint64_t seed = 1;

    void validate() const;

    // Resolves preset-derived fields against a concrete base-graph size.
    static BuildParams make(Preset preset, uint64_t n, uint64_t seed);
};

// rho = max(1, floor((m/n)^{1/(2*omega-2)})).
uint64_t shortcut_rho_preset(uint64_t n, uint64_t m, double omega);

// Hopset construction knobs. The window from which eta_v is drawn is
// [mu*(sigma-1), mu*sigma] + (eta_min+1) with mu = (eta_min+1)/sigma_max;
// under the paper preset mu = 4k and the window is the literal
// 4k[(sigma_v-1), sigma_v] + 16 lambda^2 k^2 log^2 n. eta_max = 2(eta_min+1)
// is the top of the window under both presets.
struct HopsetParams {
    uint64_t k = 4;
    uint64_t lambda = 2;
    uint32_t L = 2;
    Rational kc{1, 1}; // the value of k^c; the paper leaves its constant open
    Rational eps{1, 4};
    uint64_t eta_min = 7;
    uint64_t sigma_max = 4;
    uint64_t rho = 1;
    uint32_t boost_rounds = 3;
    Preset preset = Preset::desk;
    uint64_t seed = 1;

    // Test hook: forces the per-level Bernoulli probability (0 => all levels
    // fail and every vertex gets no level; 1 => everyone lands on level 0).
    std::optional<Rational> level_prob_override;

    // Outer shell distance source: exact Dijkstra (sequential mode) or the
    // weight-rounded parallel shell. The trace records which one ran.
    bool rounded_shell = false;

    uint64_t eta_max() const { return 2 * (eta_min + 1); }
    uint64_t window_mu() const { return (eta_min + 1) / sigma_max; }

    void validate() const;
    static HopsetParams make(Preset preset, uint64_t n, const Rational& eps, uint64_t seed);
};

// rho = max(1, floor((m/n)^{1/4})).
uint64_t hopset_rho_preset(uint64_t n, uint64_t m);

} // namespace hopcut
