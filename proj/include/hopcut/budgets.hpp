#pragma once

#include <cmath>
#include <cstdint>

#include "hopcut/exact.hpp"

namespace hopcut::budgets {

// Regression budgets, enforced by the acceptance suite on every corpus run.
// The shapes follow the construction accounting (size ~ n rho^2 up to
// polylogs, pruning work ~ n rho^{2w-2} and n rho^4 up to polylogs); the
// leading constants are pinned here with roomy slack over measured values so
// that a genuine blow-up fails CI rather than drifting.
inline constexpr double kShortcutSizeC = 4.0;
inline constexpr double kHopsetSizeC = 4.0;
inline constexpr double kShortcutPruneWorkC = 8.0;
inline constexpr double kHopsetPruneWorkC = 8.0;

inline double shortcut_size_budget(uint64_t n, uint64_t rho) {
    double ln = static_cast<double>(log_n(n));
    return kShortcutSizeC * static_cast<double>(n) * static_cast<double>(rho * rho) * ln * ln;
}

inline double hopset_size_budget(uint64_t n, uint64_t rho, const Rational& eps) {
    double ln = static_cast<double>(log_n(n));
    double e = eps.to_double();
    return kHopsetSizeC * (static_cast<double>(n) / (e * e) +
                           static_cast<double>(n) * static_cast<double>(rho * rho)) *
           ln * ln;
}

// Whole-build metered work budgets: m + n rho^{2w-2} (shortcut) and
// m/eps^2 + n rho^4 (hopset), with log^3 slack.
inline constexpr double kShortcutTotalWorkC = 1.0;
inline constexpr double kHopsetTotalWorkC = 1.0;

inline double shortcut_total_work_budget(uint64_t n, uint64_t m, uint64_t rho, double omega) {
    double ln = static_cast<double>(log_n(n));
    return kShortcutTotalWorkC *
           (static_cast<double>(m) +
            static_cast<double>(n) * std::pow(static_cast<double>(rho), 2.0 * omega - 2.0)) *
           ln * ln * ln;
}

inline double hopset_total_work_budget(uint64_t n, uint64_t m, uint64_t rho,
                                       const Rational& eps) {
    double ln = static_cast<double>(log_n(n));
    double e = eps.to_double();
    double r4 = static_cast<double>(rho) * rho * rho * rho;
    return kHopsetTotalWorkC *
           (static_cast<double>(m) / (e * e) + static_cast<double>(n) * r4) * ln * ln * ln;
}

// Pruning-phase metered work budgets (criterion shapes with log^3 slack).
inline double shortcut_prune_budget(uint64_t n, uint64_t rho, double omega) {
    double ln = static_cast<double>(log_n(n));
    return kShortcutPruneWorkC * static_cast<double>(n) *
           std::pow(static_cast<double>(rho), 2.0 * omega - 2.0) * ln * ln * ln;
}

inline double hopset_prune_budget(uint64_t n, uint64_t rho) {
    double ln = static_cast<double>(log_n(n));
    double r4 = static_cast<double>(rho) * rho * rho * rho;
    return kHopsetPruneWorkC * static_cast<double>(n) * r4 * ln * ln * ln;
}

} // namespace hopcut::budgets
