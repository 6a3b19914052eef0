#pragma once

/* Exact-sign root isolation by rational bisection. Sign evaluations clear
 * denominators once and then run on integers only, which keeps the per-step
 * cost at a handful of mpz multiplies even at tolerances like 2^-60. */

#include <utility>
#include <vector>

#include "polymaj/error.hpp"
#include "polymaj/interval.hpp"
#include "polymaj/poly.hpp"
#include "polymaj/rational.hpp"

namespace polymaj {

/// Integer-coefficient image of a rational polynomial (scaled by a positive
/// constant, so signs agree everywhere).
struct IntPoly {
    std::vector<Integer> c;  // highest degree first, never empty

    static IntPoly from(const Poly& p) {
        Integer lcm = 1;
        for (const auto& q : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        IntPoly out;
        out.c.reserve(p.coefficients().size());
        for (const auto& q : p.coefficients()) out.c.push_back(q.get_num() * (lcm / q.get_den()));
        return out;
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }

    /// Sign of the polynomial at num/den; den must be positive.
    int sign_at(const Integer& num, const Integer& den) const {
        Integer acc = c[0], vp = 1;
        for (size_t i = 1; i < c.size(); ++i) {
            vp *= den;
            acc = acc * num + c[i] * vp;
        }
        return sgn(acc);
    }

    int sign_at(const Rational& x) const { return sign_at(x.get_num(), x.get_den()); }
};

/// Bisects `bracket` until its width is at most `tol`, keeping an exact sign
/// change (or an exact root hit) at every step. An exact zero at an endpoint
/// or midpoint short-circuits to a point interval.
inline Interval isolate_root_in_interval(const IntPoly& f, const Interval& bracket, const Rational& tol) {
    if (sign(tol) <= 0) fail(Errc::InvalidArgument, "tolerance must be positive");
    int slo = f.sign_at(bracket.lo);
    if (slo == 0) return Interval::point(bracket.lo);
    int shi = f.sign_at(bracket.hi);
    if (shi == 0) return Interval::point(bracket.hi);
    if (slo == shi) fail(Errc::NoSignChange, "no sign change across bracket");

    // Shared-denominator state: endpoints a/s and b/s.
    Integer s;
    mpz_lcm(s.get_mpz_t(), bracket.lo.get_den().get_mpz_t(), bracket.hi.get_den().get_mpz_t());
    Integer a = bracket.lo.get_num() * (s / bracket.lo.get_den());
    Integer b = bracket.hi.get_num() * (s / bracket.hi.get_den());

    // Number of halvings until (b-a)/s <= tol.
    unsigned long steps = 0;
    {
        Integer lhs = (b - a) * tol.get_den();
        Integer rhs = tol.get_num() * s;
        while (lhs > rhs) {
            rhs <<= 1;
            ++steps;
        }
    }
    for (unsigned long k = 0; k < steps; ++k) {
        Integer m = a + b;  // midpoint numerator at denominator 2s
        s <<= 1;
        a <<= 1;
        b <<= 1;
        int sm = f.sign_at(m, s);
        if (sm == 0) return Interval::point(rational(m, s));
        if (sm == slo)
            a = m;
        else
            b = m;
    }
    return Interval(rational(a, s), rational(b, s));
}

inline Interval isolate_root_in_interval(const Poly& p, const Interval& bracket, const Rational& tol) {
    return isolate_root_in_interval(IntPoly::from(p), bracket, tol);
}

}  // namespace polymaj
