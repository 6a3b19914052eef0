#pragma once

#include <algorithm>

#include "polymaj/error.hpp"
#include "polymaj/rational.hpp"

namespace polymaj {

/// Closed interval with exact rational endpoints, lo <= hi.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) fail(Errc::InvalidArgument, "interval endpoints out of order");
    }

    static Interval point(const Rational& x) { return Interval(x, x); }
    static Interval hull(const Rational& a, const Rational& b) {
        return a <= b ? Interval(a, b) : Interval(b, a);
    }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    Rational half_width() const { return (hi - lo) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

inline bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }

namespace iv {

inline Interval add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Interval sub(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

inline Interval mul(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline Interval scale(const Interval& a, const Rational& c) {
    return sign(c) >= 0 ? Interval{c * a.lo, c * a.hi} : Interval{c * a.hi, c * a.lo};
}

/// Division; the divisor must not contain zero.
inline Interval div(const Interval& a, const Interval& b) {
    if (sign(b.lo) <= 0 && sign(b.hi) >= 0)
        fail(Errc::InvalidArgument, "interval division by an interval containing zero");
    return mul(a, Interval{Rational(1) / b.hi, Rational(1) / b.lo});
}

inline bool intersects(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

}  // namespace iv

}  // namespace polymaj
