#pragma once

/* Common-interlacer detection via the paired-interval criterion, proper
 * interlacing via residue signs, and the shared-root reduction that strips
 * positionally matched roots without touching the surviving residues. */

#include <optional>
#include <utility>
#include <vector>

#include "polymaj/error.hpp"
#include "polymaj/interval.hpp"
#include "polymaj/poly.hpp"
#include "polymaj/rational.hpp"

namespace polymaj {

/// Two monic real-rooted polynomials of equal degree, kept together with
/// their (nonincreasing) root lists. p is built from lam, q from mu.
class PolyPair {
public:
    PolyPair(RootList lam, RootList mu)
        : lam_(std::move(lam)), mu_(std::move(mu)), p_(poly_from_roots(lam_)), q_(poly_from_roots(mu_)) {
        if (lam_.size() != mu_.size()) fail(Errc::LengthMismatch, "root lists differ in length");
    }

    const RootList& lam() const { return lam_; }
    const RootList& mu() const { return mu_; }
    const Poly& p() const { return p_; }
    const Poly& q() const { return q_; }
    int n() const { return lam_.size(); }
    bool sums_equal() const { return lam_.sum() == mu_.sum(); }

    /// Paired root intervals [min(lam_i, mu_i), max(lam_i, mu_i)].
    std::vector<Interval> pair_intervals() const {
        std::vector<Interval> out;
        out.reserve(static_cast<size_t>(n()));
        for (int i = 0; i < n(); ++i) out.push_back(Interval::hull(lam_[i], mu_[i]));
        return out;
    }

private:
    RootList lam_, mu_;
    Poly p_, q_;
};

struct InterlaceVerdict {
    bool has_common_interlacer = false;
    std::vector<Interval> pair_intervals;
    std::optional<std::pair<int, int>> first_crossing;  // 1-based interval indices
    bool properly_interlacing = false;
};

namespace detail {

/// Roots of p and q strictly alternate when merged (all 2n values distinct
/// and list membership flips at every step).
inline bool strictly_alternating(const PolyPair& pair) {
    struct Tagged {
        const Rational* v;
        bool from_lam;
    };
    std::vector<Tagged> merged;
    merged.reserve(static_cast<size_t>(2 * pair.n()));
    int i = 0, j = 0;
    while (i < pair.n() || j < pair.n()) {
        if (j == pair.n() || (i < pair.n() && pair.lam()[i] >= pair.mu()[j]))
            merged.push_back({&pair.lam()[i++], true});
        else
            merged.push_back({&pair.mu()[j++], false});
    }
    for (size_t k = 0; k + 1 < merged.size(); ++k) {
        if (*merged[k].v == *merged[k + 1].v) return false;
        if (merged[k].from_lam == merged[k + 1].from_lam) return false;
    }
    return true;
}

}  // namespace detail

/// Checks the paired intervals for strict pairwise disjointness. Touching
/// endpoints of distinct pair intervals count as a crossing; a root shared
/// at the same position yields a point interval, which is fine as long as
/// it stays strictly apart from its neighbors.
inline InterlaceVerdict common_interlacer_check(const PolyPair& pair) {
    InterlaceVerdict v;
    v.pair_intervals = pair.pair_intervals();
    for (int i = 0; i + 1 < pair.n(); ++i) {
        // Intervals are ordered rightmost first; i+1 must end strictly left of i.
        if (!(v.pair_intervals[static_cast<size_t>(i + 1)].hi < v.pair_intervals[static_cast<size_t>(i)].lo)) {
            v.first_crossing = std::make_pair(i + 1, i + 2);
            break;
        }
    }
    v.has_common_interlacer = !v.first_crossing.has_value();
    v.properly_interlacing = detail::strictly_alternating(pair);
    return v;
}

/// True iff all residues p(mu_i)/q'(mu_i) carry one strict sign. Requires
/// all 2n roots distinct.
inline bool proper_interlacing_check(const PolyPair& pair) {
    if (!pair.lam().simple() || !pair.mu().simple())
        fail(Errc::NonSimpleRoots, "roots must be simple");
    for (int i = 0; i < pair.n(); ++i)
        for (int j = 0; j < pair.n(); ++j)
            if (pair.lam()[i] == pair.mu()[j]) fail(Errc::SharedRoots, "p and q share a root");
    const Poly qd = pair.q().derivative();
    int expected = 0;
    for (int i = 0; i < pair.n(); ++i) {
        int s = sign(pair.p()(pair.mu()[i])) * sign(qd(pair.mu()[i]));
        if (s == 0) fail(Errc::NonSimpleRoots, "vanishing residue denominator");
        if (expected == 0)
            expected = s;
        else if (s != expected)
            return false;
    }
    return true;
}

/// Drops every root shared at equal positions (lam_i == mu_i), returning the
/// deflated pair. Residues at surviving roots are unchanged by this.
inline PolyPair reduce_shared_roots(const PolyPair& pair) {
    std::vector<Rational> lam, mu;
    for (int i = 0; i < pair.n(); ++i) {
        if (pair.lam()[i] == pair.mu()[i]) continue;
        lam.push_back(pair.lam()[i]);
        mu.push_back(pair.mu()[i]);
    }
    if (lam.empty()) fail(Errc::DegenerateEmpty, "all roots shared: p equals q");
    if (static_cast<int>(lam.size()) == pair.n()) return pair;
    return PolyPair(RootList(std::move(lam)), RootList(std::move(mu)));
}

}  // namespace polymaj
