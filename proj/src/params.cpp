#include "hopcut/params.hpp"

#include <cmath>

namespace hopcut {

Preset parse_preset(const std::string& s) {
    if (s == "paper") return Preset::paper;
    if (s == "desk") return Preset::desk;
    throw InputError("unknown preset '" + s + "' (expected paper|desk)");
}

const char* preset_name(Preset p) { return p == Preset::paper ? "paper" : "desk"; }

void BuildParams::validate() const {
    if (k < 2) throw InputError("BuildParams: k must be >= 2");
    if (rho < 1) throw InputError("BuildParams: rho must be >= 1");
    if (sample_c.num <= 0 || tc_threshold_c.num <= 0)
        throw InputError("BuildParams: constants must be positive");
    if (omega < 2.0 || omega > 3.0) throw InputError("BuildParams: omega in [2,3]");
}

BuildParams BuildParams::make(Preset preset, uint64_t n, uint64_t seed) {
    BuildParams p;
    p.preset = preset;
    p.seed = seed;
    if (preset == Preset::paper) {
        p.k = std::max<uint64_t>(2, ceil_log2(std::max<uint64_t>(2, n)));
        p.sample_c = Rational(100, 1);
        uint64_t ln = log_n(n);
        p.tc_threshold_c = Rational(static_cast<int64_t>(p.k * p.k * ln * ln), 1);
    } else {
        p.k = 4;
        p.sample_c = Rational(1, 1);
        p.tc_threshold_c = Rational(1, 1);
    }
    return p;
}

uint64_t shortcut_rho_preset(uint64_t n, uint64_t m, double omega) {
    if (n < 1 || m < n) throw InputError("shortcut_rho_preset: need m >= n >= 1");
    double value = std::pow(static_cast<double>(m) / static_cast<double>(n),
                            1.0 / (2.0 * omega - 2.0));
    uint64_t r = static_cast<uint64_t>(std::floor(value + 1e-12));
    return std::max<uint64_t>(1, r);
}

void HopsetParams::validate() const {
    if (k < 2) throw InputError("HopsetParams: k must be >= 2");
    if (lambda < 1) throw InputError("HopsetParams: lambda must be >= 1");
    if (eps.num <= 0 || !(eps < Rational(1, 1)))
        throw InputError("HopsetParams: eps must lie in (0,1)");
    if (rho < 1) throw InputError("HopsetParams: rho must be >= 1");
    if (sigma_max < 1) throw InputError("HopsetParams: sigma range must be non-empty");
    if ((eta_min + 1) % sigma_max != 0)
        throw InputError("HopsetParams: sigma_max must divide eta_min+1 so the eta windows tile");
    if (kc.num <= 0) throw InputError("HopsetParams: k^c must be positive");
    if (boost_rounds < 1) throw InputError("HopsetParams: need at least one boost round");
}

HopsetParams HopsetParams::make(Preset preset, uint64_t n, const Rational& eps, uint64_t seed) {
    HopsetParams p;
    p.preset = preset;
    p.eps = eps;
    p.seed = seed;
    if (preset == Preset::paper) {
        p.k = std::max<uint64_t>(2, ceil_log2(std::max<uint64_t>(2, n)));
        p.lambda = 100;
        uint64_t ln = log_n(n);
        // L = 15 - 2 log_k eps, rounded up to keep the level offset integral.
        double lk = std::log(eps.to_double()) / std::log(static_cast<double>(p.k));
        p.L = static_cast<uint32_t>(std::ceil(15.0 - 2.0 * lk));
        p.eta_min = 16 * p.lambda * p.lambda * p.k * p.k * ln * ln - 1;
        p.sigma_max = 4 * p.lambda * p.lambda * p.k * ln * ln;
        // k^c = Theta(lambda^L k^{(L-1)/2} / log^3 n) with the open constant
        // pinned to 1, floored to stay rational.
        double kcv = std::pow(static_cast<double>(p.lambda), p.L) *
                     std::pow(static_cast<double>(p.k), (p.L - 1) / 2.0) /
                     std::pow(static_cast<double>(ln), 3.0);
        if (kcv < 1.0 || !std::isfinite(kcv) || kcv > 9e17)
            p.kc = Rational(1, 1);
        else
            p.kc = Rational(static_cast<int64_t>(kcv), 1);
        p.boost_rounds = std::max<uint32_t>(1, ceil_log2(std::max<uint64_t>(2, n)));
    } else {
        p.k = 4;
        p.lambda = 2;
        p.L = 2;
        p.eta_min = 7;
        p.sigma_max = 4;
        p.kc = Rational(1, 1);
        p.boost_rounds = 3;
    }
    return p;
}

uint64_t hopset_rho_preset(uint64_t n, uint64_t m) {
    if (n < 1 || m < n) throw InputError("hopset_rho_preset: need m >= n >= 1");
    double value = std::pow(static_cast<double>(m) / static_cast<double>(n), 0.25);
    uint64_t r = static_cast<uint64_t>(std::floor(value + 1e-12));
    return std::max<uint64_t>(1, r);
}

} // namespace hopcut
