#pragma once

/* Dense polynomials with exact rational coefficients, and root lists kept in
 * nonincreasing order. poly_from_roots always produces a monic polynomial;
 * derivatives and differences are general (non-monic) polynomials of the
 * same type. */

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "polymaj/error.hpp"
#include "polymaj/rational.hpp"

namespace polymaj {

class Poly {
public:
    /// Coefficients highest degree first; the vector must be nonempty.
    explicit Poly(std::vector<Rational> coeffs_high_first) : c_(std::move(coeffs_high_first)) {
        if (c_.empty()) fail(Errc::InvalidArgument, "polynomial needs at least one coefficient");
        normalize();
    }
    Poly(std::initializer_list<long> coeffs_high_first) {
        for (long v : coeffs_high_first) c_.emplace_back(v);
        if (c_.empty()) fail(Errc::InvalidArgument, "polynomial needs at least one coefficient");
        normalize();
    }

    static Poly constant(const Rational& v) { return Poly(std::vector<Rational>{v}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^k (zero when k exceeds the degree).
    const Rational& coeff_for_power(int k) const {
        static const Rational zero(0);
        if (k < 0 || k > degree()) return zero;
        return c_[static_cast<size_t>(degree() - k)];
    }

    const std::vector<Rational>& coefficients() const { return c_; }
    const Rational& leading() const { return c_.front(); }
    bool monic() const { return leading() == 1; }
    bool is_zero() const { return degree() == 0 && sign(c_[0]) == 0; }

    /// Exact Horner evaluation.
    Rational operator()(const Rational& x) const {
        Rational acc = c_[0];
        for (size_t i = 1; i < c_.size(); ++i) acc = acc * x + c_[i];
        return acc;
    }

    /// Power-rule derivative; degree-0 input is rejected.
    Poly derivative() const {
        if (degree() < 1) fail(Errc::DegreeTooLow, "cannot differentiate a constant");
        std::vector<Rational> d(c_.size() - 1);
        int n = degree();
        for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] * (n - i);
        return Poly(std::move(d));
    }

    /// Sum of roots of a monic polynomial (negated subleading coefficient).
    Rational sum_of_roots() const {
        if (degree() < 1) return Rational(0);
        return -c_[1] / c_[0];
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> out(static_cast<size_t>(std::max(a.degree(), b.degree())) + 1);
        int n = static_cast<int>(out.size()) - 1;
        for (int k = 0; k <= n; ++k)
            out[static_cast<size_t>(n - k)] = a.coeff_for_power(k) + b.coeff_for_power(k);
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> out(static_cast<size_t>(std::max(a.degree(), b.degree())) + 1);
        int n = static_cast<int>(out.size()) - 1;
        for (int k = 0; k <= n; ++k)
            out[static_cast<size_t>(n - k)] = a.coeff_for_power(k) - b.coeff_for_power(k);
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        std::vector<Rational> out(static_cast<size_t>(a.degree() + b.degree()) + 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    friend Poly operator*(const Rational& s, const Poly& a) {
        std::vector<Rational> out = a.c_;
        for (auto& v : out) v *= s;
        return Poly(std::move(out));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void normalize() {
        size_t lead = 0;
        while (lead + 1 < c_.size() && sign(c_[lead]) == 0) ++lead;
        if (lead > 0) c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    }

    std::vector<Rational> c_;
};

/// Roots in nonincreasing order; construction sorts (stably) so callers may
/// pass values in any order.
class RootList {
public:
    explicit RootList(std::vector<Rational> roots) : r_(std::move(roots)) {
        if (r_.empty()) fail(Errc::InvalidArgument, "root list must be nonempty");
        std::stable_sort(r_.begin(), r_.end(), [](const Rational& a, const Rational& b) { return a > b; });
    }
    RootList(std::initializer_list<long> roots) {
        for (long v : roots) r_.emplace_back(v);
        if (r_.empty()) fail(Errc::InvalidArgument, "root list must be nonempty");
        std::stable_sort(r_.begin(), r_.end(), [](const Rational& a, const Rational& b) { return a > b; });
    }

    int size() const { return static_cast<int>(r_.size()); }
    const Rational& operator[](int i) const { return r_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& values() const { return r_; }
    auto begin() const { return r_.begin(); }
    auto end() const { return r_.end(); }

    /// True when the roots strictly decrease (all simple).
    bool simple() const {
        for (size_t i = 0; i + 1 < r_.size(); ++i)
            if (r_[i] == r_[i + 1]) return false;
        return true;
    }

    Rational sum() const {
        Rational s(0);
        for (const auto& v : r_) s += v;
        return s;
    }

    friend bool operator==(const RootList& a, const RootList& b) { return a.r_ == b.r_; }

private:
    std::vector<Rational> r_;
};

/// Monic polynomial with exactly the given roots (with multiplicity).
inline Poly poly_from_roots(const RootList& roots) {
    std::vector<Rational> c{Rational(1)};
    for (const Rational& r : roots) {
        c.push_back(Rational(0));
        for (size_t i = c.size() - 1; i >= 1; --i) c[i] -= r * c[i - 1];
    }
    return Poly(std::move(c));
}

}  // namespace polymaj
