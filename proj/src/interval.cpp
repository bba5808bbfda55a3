#include "trieig/interval.hpp"

#include <cstdio>

#include "trieig/tribool.hpp"

namespace trieig {

Interval interval_add(const Interval& a, const Interval& b) {
    RoundUpwardScope r;
    return iv::add(a, b);
}

Interval interval_sub(const Interval& a, const Interval& b) {
    RoundUpwardScope r;
    return iv::sub(a, b);
}

Interval interval_mul(const Interval& a, const Interval& b) {
    RoundUpwardScope r;
    return iv::mul(a, b);
}

Interval interval_div(const Interval& a, const Interval& b) {
    RoundUpwardScope r;
    return iv::div(a, b);
}

Interval interval_sqrt(const Interval& a) {
    RoundUpwardScope r;
    return iv::sqrt(a);
}

Interval iv_op(IvOpKind kind, const Interval& a, const Interval& b) {
    switch (kind) {
        case IvOpKind::Add: return interval_add(a, b);
        case IvOpKind::Sub: return interval_sub(a, b);
        case IvOpKind::Mul: return interval_mul(a, b);
        case IvOpKind::Div: return interval_div(a, b);
        case IvOpKind::Sqrt: return interval_sqrt(a);
    }
    throw std::logic_error("iv_op: bad kind");
}

Interval interval_from_rational(const Rational& x) {
    // mpq_get_d truncates toward zero and is within one ulp; fix up the side
    // that got truncated by exact comparison.
    const double d = mpq_get_d(x.raw().get_mpq_t());
    if (!std::isfinite(d)) {
        const double big = std::numeric_limits<double>::max();
        const double inf = std::numeric_limits<double>::infinity();
        return d > 0 ? Interval(big, inf) : Interval(-inf, -big);
    }
    const Rational dr{mpq_class(d)};
    if (dr == x) return Interval(d, d);
    if (dr < x) return Interval(d, std::nextafter(d, std::numeric_limits<double>::infinity()));
    return Interval(std::nextafter(d, -std::numeric_limits<double>::infinity()), d);
}

TriBool iv_sign(const Interval& a) {
    if (a.lo > 0.0) return TriBool::True;
    if (a.hi < 0.0) return TriBool::False;
    return TriBool::Indeterminate;
}

bool interval_contains(const Interval& a, const Rational& x) {
    if (!(a.lo <= a.hi)) return false;
    const bool lo_ok = std::isinf(a.lo) ? a.lo < 0 : Rational(mpq_class(a.lo)) <= x;
    const bool hi_ok = std::isinf(a.hi) ? a.hi > 0 : x <= Rational(mpq_class(a.hi));
    return lo_ok && hi_ok;
}

std::string interval_to_hex(const Interval& a) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%a;%a", a.lo, a.hi);
    return buf;
}

TriBool tribool_from_string(const std::string& s) {
    if (s == "true") return TriBool::True;
    if (s == "false") return TriBool::False;
    if (s == "indeterminate") return TriBool::Indeterminate;
    throw std::invalid_argument("tribool_from_string: '" + s + "'");
}

}  // namespace trieig
