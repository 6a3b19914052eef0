#pragma once

/* Vector-level majorization: partial-sum dominance with equal totals, plus
 * the Robin-Hood transfer that generates the majorization order. */

#include <optional>
#include <utility>
#include <vector>

#include "polymaj/error.hpp"
#include "polymaj/poly.hpp"
#include "polymaj/rational.hpp"

namespace polymaj {

struct MajorizationVerdict {
    bool holds = false;
    std::vector<Rational> partial_sum_gaps;  // sum_{i<=k} a_i - sum_{i<=k} b_i, k = 1..n
    std::optional<int> first_violation;      // 1-based k, set iff !holds
    bool sums_equal = false;
};

/// a majorizes b: every prefix-sum gap for k < n is >= 0 and the total gap
/// is exactly zero.
inline MajorizationVerdict majorizes(const RootList& a, const RootList& b) {
    if (a.size() != b.size()) fail(Errc::LengthMismatch, "vectors differ in length");
    int n = a.size();
    MajorizationVerdict v;
    v.partial_sum_gaps.reserve(static_cast<size_t>(n));
    Rational gap(0);
    for (int k = 0; k < n; ++k) {
        gap += a[k] - b[k];
        v.partial_sum_gaps.push_back(gap);
        if (k < n - 1 && sign(gap) < 0 && !v.first_violation) v.first_violation = k + 1;
    }
    v.sums_equal = sign(v.partial_sum_gaps.back()) == 0;
    if (!v.sums_equal && !v.first_violation) v.first_violation = n;
    v.holds = !v.first_violation.has_value();
    return v;
}

/// Transfers eps from a[i] to a[j] (0-based, i < j in the nonincreasing
/// order, 0 < eps < a[i]-a[j]) and re-sorts. The input majorizes the output.
inline RootList robin_hood(const RootList& a, int i, int j, const Rational& eps) {
    if (i < 0 || j >= a.size() || i >= j) fail(Errc::IndexError, "need 0 <= i < j < n");
    Rational span = a[i] - a[j];
    if (sign(eps) <= 0 || eps >= span) fail(Errc::EpsOutOfRange, "eps must lie in (0, a[i]-a[j])");
    std::vector<Rational> out = a.values();
    out[static_cast<size_t>(i)] -= eps;
    out[static_cast<size_t>(j)] += eps;
    return RootList(std::move(out));
}

}  // namespace polymaj
