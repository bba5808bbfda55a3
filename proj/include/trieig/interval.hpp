#pragma once

#include <cfenv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "trieig/rational.hpp"
#include "trieig/tribool.hpp"

namespace trieig {

// Thrown when an interval operation cannot produce a finite enclosure
// (division by an interval containing zero, reflector norm straddling zero).
struct EnclosureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Directed-rounding scope: sets FE_UPWARD for the current thread, restores on
// exit. All iv::* kernels assume an active scope. The rounding mode is
// per-thread state on this platform, so concurrent workers do not interfere.
class RoundUpwardScope {
public:
    RoundUpwardScope() : prev_(std::fegetround()) { std::fesetround(FE_UPWARD); }
    ~RoundUpwardScope() { std::fesetround(prev_); }
    RoundUpwardScope(const RoundUpwardScope&) = delete;
    RoundUpwardScope& operator=(const RoundUpwardScope&) = delete;

private:
    int prev_;
};

// Closed interval [lo, hi] with double endpoints. Every operation rounds
// outward: the result contains all real results over members of the inputs.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double x) : lo(x), hi(x) {}  // NOLINT(google-explicit-constructor)
    Interval(double l, double h) : lo(l), hi(h) {}

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool straddles_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    bool valid() const { return lo <= hi; }
};

// Raw kernels: require an active RoundUpwardScope. With FE_UPWARD,
// up(x) = x rounded toward +inf and -up(-x) = x rounded toward -inf,
// so both endpoints are computed under a single rounding mode.
namespace iv {

inline Interval add(const Interval& a, const Interval& b) {
    return {-((-a.lo) + (-b.lo)), a.hi + b.hi};
}

inline Interval sub(const Interval& a, const Interval& b) {
    return {-(b.hi + (-a.lo)), a.hi + (-b.lo)};
}

inline Interval neg(const Interval& a) { return {-a.hi, -a.lo}; }

// Sign-classified product: two rounded multiplications in eight of the nine
// cases (down(x*y) is obtained as -up((-x)*y) under FE_UPWARD).
inline Interval mul(const Interval& a, const Interval& b) {
    if (a.lo >= 0.0) {
        if (b.lo >= 0.0) return {-((-a.lo) * b.lo), a.hi * b.hi};
        if (b.hi <= 0.0) return {-((-a.hi) * b.lo), a.lo * b.hi};
        return {-((-a.hi) * b.lo), a.hi * b.hi};
    }
    if (a.hi <= 0.0) {
        if (b.lo >= 0.0) return {-((-a.lo) * b.hi), a.hi * b.lo};
        if (b.hi <= 0.0) return {-((-a.hi) * b.hi), a.lo * b.lo};
        return {-((-a.lo) * b.hi), a.lo * b.lo};
    }
    if (b.lo >= 0.0) return {-((-a.lo) * b.hi), a.hi * b.hi};
    if (b.hi <= 0.0) return {-((-a.hi) * b.lo), a.lo * b.lo};
    const double n1 = (-a.lo) * b.hi, n2 = (-a.hi) * b.lo;
    const double h1 = a.lo * b.lo, h2 = a.hi * b.hi;
    return {-(n1 > n2 ? n1 : n2), h1 > h2 ? h1 : h2};
}

// Tight square: never dips below zero.
inline Interval sqr(const Interval& a) {
    const double u1 = a.lo * a.lo, u2 = a.hi * a.hi;
    const double hi = u1 > u2 ? u1 : u2;
    if (a.lo <= 0.0 && 0.0 <= a.hi) return {0.0, hi};
    double m = a.lo > 0.0 ? a.lo : -a.hi;  // min |x| over the interval
    return {-(m * (-m)), hi};              // -up(-m*m) = down(m*m)
}

inline Interval div(const Interval& a, const Interval& b) {
    if (b.lo <= 0.0 && 0.0 <= b.hi)
        throw EnclosureError("interval division by an interval containing zero");
    const double h1 = a.lo / b.lo, h2 = a.lo / b.hi, h3 = a.hi / b.lo, h4 = a.hi / b.hi;
    const double n1 = (-a.lo) / b.lo, n2 = (-a.lo) / b.hi, n3 = (-a.hi) / b.lo,
                 n4 = (-a.hi) / b.hi;
    double hi = h1;
    if (h2 > hi) hi = h2;
    if (h3 > hi) hi = h3;
    if (h4 > hi) hi = h4;
    double nl = n1;
    if (n2 > nl) nl = n2;
    if (n3 > nl) nl = n3;
    if (n4 > nl) nl = n4;
    return {-nl, hi};
}

// sqrt honours the rounding mode in hardware; the lower endpoint backs off
// one ulp from the up-rounded value of sqrt(lo).
inline Interval sqrt(const Interval& a) {
    if (a.lo < 0.0) throw std::domain_error("interval sqrt of a negative interval");
    const double hi = std::sqrt(a.hi);
    double s = std::sqrt(a.lo);
    double lo = std::nextafter(s, -std::numeric_limits<double>::infinity());
    if (lo < 0.0) lo = 0.0;
    return {lo, hi};
}

inline Interval scale2(const Interval& a, int e) {  // exact scaling by 2^e
    return {std::ldexp(a.lo, e), std::ldexp(a.hi, e)};
}

}  // namespace iv

// Checked entry points: each establishes its own rounding scope.
Interval interval_add(const Interval& a, const Interval& b);
Interval interval_sub(const Interval& a, const Interval& b);
Interval interval_mul(const Interval& a, const Interval& b);
Interval interval_div(const Interval& a, const Interval& b);
Interval interval_sqrt(const Interval& a);

enum class IvOpKind { Add, Sub, Mul, Div, Sqrt };

// Dispatching form of the arithmetic kernel; b is ignored for sqrt.
Interval iv_op(IvOpKind kind, const Interval& a, const Interval& b = Interval());

// Tightest double enclosure of an exact rational.
Interval interval_from_rational(const Rational& x);

// Sign certification. True only if lo > 0, False only if hi < 0.
TriBool iv_sign(const Interval& a);

// Exact containment test (endpoints converted to exact rationals).
bool interval_contains(const Interval& a, const Rational& x);

std::string interval_to_hex(const Interval& a);  // "lo;hi" as %a strings

}  // namespace trieig
