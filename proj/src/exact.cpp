#include "hopcut/exact.hpp"

#include <numeric>

namespace hopcut {

Rational::Rational(int64_t n, int64_t d) {
    if (d == 0) throw InputError("rational with zero denominator");
    if (n < 0 || d < 0) throw InputError("rationals here are non-negative");
    int64_t g = std::gcd(n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw InputError("empty rational");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        int64_t n = std::stoll(text.substr(0, slash));
        int64_t d = std::stoll(text.substr(slash + 1));
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text), 1);
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.size() > 18) frac = frac.substr(0, 18);
    int64_t scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    int64_t n = (whole.empty() ? 0 : std::stoll(whole)) * scale +
                (frac.empty() ? 0 : std::stoll(frac));
    return Rational(n, scale);
}

namespace {
Rational make_checked(const bigint& n, const bigint& d) {
    bigint g = boost::multiprecision::gcd(n, d);
    if (g == 0) g = 1;
    bigint rn = n / g, rd = d / g;
    if (rn > std::numeric_limits<int64_t>::max() || rd > std::numeric_limits<int64_t>::max())
        throw InputError("rational arithmetic overflow");
    return Rational(static_cast<int64_t>(rn), static_cast<int64_t>(rd));
}
} // namespace

Rational Rational::operator*(const Rational& o) const {
    return make_checked(bigint(num) * o.num, bigint(den) * o.den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw InputError("rational division by zero");
    return make_checked(bigint(num) * o.den, bigint(den) * o.num);
}

Rational Rational::operator+(const Rational& o) const {
    return make_checked(bigint(num) * o.den + bigint(o.num) * den, bigint(den) * o.den);
}

bool Rational::operator<(const Rational& o) const {
    return bigint(num) * o.den < bigint(o.num) * den;
}

bool Rational::operator<=(const Rational& o) const {
    return bigint(num) * o.den <= bigint(o.num) * den;
}

uint32_t ceil_log2(uint64_t x) {
    if (x <= 1) return 0;
    uint32_t e = 0;
    uint64_t v = 1;
    while (v < x) {
        if (v > (UINT64_MAX >> 1)) return 64;
        v <<= 1;
        ++e;
    }
    return e;
}

uint64_t isqrt_floor(const bigint& x) {
    if (x < 0) return 0;
    bigint r = boost::multiprecision::sqrt(x);
    if (r > std::numeric_limits<uint64_t>::max()) return UINT64_MAX;
    return static_cast<uint64_t>(r);
}

uint64_t floor_scaled_radius(const Rational& x, const Rational& d,
                             uint64_t lambda, uint64_t k, uint32_t r,
                             uint64_t clamp) {
    if (x.num == 0 || d.num == 0) return 0;
    bigint num = bigint(x.num) * d.num;
    num *= num;                                  // (Xnum*Dnum)^2
    bigint den = bigint(x.den) * d.den;
    den *= den;                                  // (Xden*Dden)^2
    bigint lam = 1, kk = 1;
    for (uint32_t i = 0; i < r; ++i) {
        lam *= lambda;
        kk *= k;
    }
    den *= lam * lam * kk;                       // lambda^{2r} * k^r
    uint64_t root = isqrt_floor(num / den);
    return root < clamp ? root : clamp;
}

uint64_t ceil_mul(const Rational& eps, uint64_t v) {
    bigint t = bigint(eps.num) * v;
    bigint q = (t + eps.den - 1) / eps.den;
    if (q > std::numeric_limits<uint64_t>::max()) throw InputError("ceil_mul overflow");
    return static_cast<uint64_t>(q);
}

double BernoulliGate::probability() const {
    if (always) return 1.0;
    return static_cast<double>(threshold) / 18446744073709551616.0; // 2^64
}

BernoulliGate sampling_gate(const Rational& c, uint64_t k, uint32_t r, uint64_t n) {
    BernoulliGate g;
    if (n == 0) return g;
    bigint num = bigint(c.num) * log_n(n);
    for (uint32_t i = 0; i <= r; ++i) num *= k;  // k^{r+1}
    bigint den = bigint(c.den) * n;
    if (num >= den) {
        g.always = true;
        return g;
    }
    bigint t = (num << 64) / den;
    g.threshold = static_cast<uint64_t>(t);
    return g;
}

} // namespace hopcut
