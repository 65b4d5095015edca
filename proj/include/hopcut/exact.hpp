#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopcut {

using bigint = boost::multiprecision::cpp_int;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact non-negative rational. Parameters such as eps, sampling constants and
// distance guesses are kept rational end to end; all threshold comparisons in
// the constructions reduce to integer arithmetic on these.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d);
    static Rational from_int(int64_t v) { return Rational(v, 1); }

    // Parses "0.25", "1", "3/4". Used by the CLI so that eps never touches floats.
    static Rational parse(const std::string& text);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_zero() const { return num == 0; }

    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator+(const Rational& o) const;

    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// Smallest e with 2^e >= x, for x >= 1.
uint32_t ceil_log2(uint64_t x);

// log n as it appears in every sampling formula and threshold of the paper
// constructions, realized as the integer max(1, ceil_log2(n)).
inline uint64_t log_n(uint64_t n) { return n <= 2 ? 1 : ceil_log2(n); }

uint64_t isqrt_floor(const bigint& x);

// floor(X * D / (lambda^r * k^{r/2})) computed exactly.  k^{r/2} is irrational
// for odd r, so the comparison "d <= cap" is carried out on squares:
//   d <= X*D/(lambda^r k^{r/2})  <=>  d^2 * (Xden*Dden)^2 * lambda^{2r} * k^r <= (Xnum*Dnum)^2.
// Distances are integers, so the floor of the cap is all any search needs.
uint64_t floor_scaled_radius(const Rational& x, const Rational& d,
                             uint64_t lambda, uint64_t k, uint32_t r,
                             uint64_t clamp);

// ceil(eps * v) with exact integer arithmetic; the (1+eps) comparisons in the
// verifier are "bdist <= v + ceil_mul(eps, v)".
uint64_t ceil_mul(const Rational& eps, uint64_t v);

// Bernoulli(min(1, c * k^{r+1} * log_n(n) / n)) realized as a 64-bit threshold.
// `probability` reports the exactly-realized value threshold/2^64 (or 1), which
// is what statistical tests should compare against.
struct BernoulliGate {
    bool always = false;
    uint64_t threshold = 0;
    double probability() const;
};
BernoulliGate sampling_gate(const Rational& c, uint64_t k, uint32_t r, uint64_t n);

} // namespace hopcut
