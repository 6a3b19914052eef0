#pragma once

/* Exact scalar arithmetic. All certificate math in this library runs on
 * arbitrary-precision rationals; floating point never touches a verdict. */

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "polymaj/error.hpp"

namespace polymaj {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) fail(Errc::ParseError, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(Errc::ParseError, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

/// 2^e as an exact rational; e may be negative.
inline Rational pow2(long e) {
    Integer one = 1;
    Integer big;
    mpz_mul_2exp(big.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
    return e >= 0 ? Rational(big) : rational(one, big);
}

/// Parses "n" or "n/d" (optionally signed) into a reduced rational.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_int(num) || !is_int(den))
        fail(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
    Integer n(std::string(num), 10), d(std::string(den), 10);
    if (sgn(d) <= 0) fail(Errc::ParseError, "denominator must be positive: '" + std::string(text) + "'");
    return rational(n, d);
}

/// Canonical form: "n" when the denominator is 1, else "n/d", always reduced.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Fixed-point decimal with `digits` fractional digits, rounded half away
/// from zero. Used only for trajectory CSVs; reports stay exact.
inline std::string to_decimal(const Rational& q, int digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Integer num = abs(q.get_num()) * scale;
    const Integer& den = q.get_den();
    Integer scaled = (2 * num + den) / (2 * den);  // floor((2a+d)/(2d)) = round(a/d)
    Integer ipart = scaled / scale;
    Integer fpart = scaled % scale;
    std::string frac = fpart.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = ipart.get_str() + "." + frac;
    if (sgn(q) < 0 && scaled != 0) out.insert(out.begin(), '-');
    return out;
}

}  // namespace polymaj
