#pragma once

/* Root trajectories of p_t = t*p + (1-t)*q over a rational t-grid.
 *
 * For a pair with a common interlacer, each pair interval holds exactly one
 * root of p_t for every t in [0,1], so bisection inside the fixed intervals
 * tracks all n trajectories with rigorous enclosures and no index swaps.
 * Partial root sums S_k(t) carry midpoint values plus error bounds; their
 * monotonicity verdicts are three-valued per step (increase proven,
 * decrease proven, inconclusive); inconclusive steps are refined by halving
 * the step and quartering the isolation tolerance until resolved or the
 * refinement cap trips. The grid verdict means "no violation found at this
 * resolution"; the exact verdict is the residue certificate's job. */

#include <optional>
#include <utility>
#include <vector>

#include "polymaj/detail/parallel.hpp"
#include "polymaj/error.hpp"
#include "polymaj/interlace.hpp"
#include "polymaj/interval.hpp"
#include "polymaj/poly.hpp"
#include "polymaj/rational.hpp"
#include "polymaj/residue.hpp"
#include "polymaj/root_isolation.hpp"

namespace polymaj {

/// The convex path p_t = t*p + (1-t)*q with exact rational coefficients at
/// rational t (p_1 = p, p_0 = q; monic throughout).
class ConvexPath {
public:
    explicit ConvexPath(PolyPair pair) : pair_(std::move(pair)) {
        IntPoly pi = IntPoly::from(pair_.p());
        IntPoly qi = IntPoly::from(pair_.q());
        // Rescale both to the shared denominator so p_t clears in one step.
        Integer lp = pair_.p().coefficients()[0].get_den(), lq = 1;
        for (const auto& c : pair_.p().coefficients()) mpz_lcm(lp.get_mpz_t(), lp.get_mpz_t(), c.get_den().get_mpz_t());
        for (const auto& c : pair_.q().coefficients()) mpz_lcm(lq.get_mpz_t(), lq.get_mpz_t(), c.get_den().get_mpz_t());
        pnum_ = std::move(pi.c);
        qnum_ = std::move(qi.c);
        for (auto& v : pnum_) v *= lq;
        for (auto& v : qnum_) v *= lp;
    }

    const PolyPair& pair() const { return pair_; }

    Poly at(const Rational& t) const { return t * pair_.p() + (1 - t) * pair_.q(); }

    /// Integer image of p_t (positive rescale of `at(t)`), for sign work.
    IntPoly int_at(const Rational& t) const {
        const Integer& a = t.get_num();
        Integer rest = t.get_den() - a;
        IntPoly out;
        out.c.resize(pnum_.size());
        for (size_t i = 0; i < pnum_.size(); ++i) out.c[i] = a * pnum_[i] + rest * qnum_[i];
        return out;
    }

private:
    PolyPair pair_;
    std::vector<Integer> pnum_, qnum_;  // scaled to a common denominator
};

struct SumApprox {
    Rational value;  // midpoint approximation
    Rational error;  // rigorous bound: |true - value| <= error
};

enum class Monotonicity { Increasing, Nondecreasing, ViolatedAt };

struct MonotoneVerdict {
    Monotonicity kind = Monotonicity::Nondecreasing;
    std::optional<Rational> violated_at;  // left end of a proven-decrease step
};

struct TrajectoryBundle {
    std::vector<Rational> t_grid;
    std::vector<std::vector<Interval>> roots_at;  // [grid][i], nonincreasing in i
    std::vector<std::vector<SumApprox>> sums;     // [grid][k-1], k = 1..n
    std::vector<MonotoneVerdict> monotone_verdicts;  // [k-1], k = 1..n
    bool sums_equal = false;
};

namespace detail {

inline std::vector<Interval> brackets_or_throw(const PolyPair& pair) {
    InterlaceVerdict iv = common_interlacer_check(pair);
    if (!iv.has_common_interlacer) fail(Errc::NoCommonInterlacer, "pair has no common interlacer");
    return iv.pair_intervals;
}

inline std::vector<Interval> isolate_all(const IntPoly& f, const std::vector<Interval>& brackets,
                                         const Rational& tol) {
    std::vector<Interval> roots;
    roots.reserve(brackets.size());
    for (const Interval& br : brackets) {
        try {
            roots.push_back(isolate_root_in_interval(f, br, tol));
        } catch (const Error& e) {
            if (e.code() == Errc::NoSignChange)
                fail(Errc::BracketFailure, "no root bracketed in a pair interval");
            throw;
        }
    }
    return roots;
}

inline std::vector<SumApprox> prefix_sums(const std::vector<Interval>& roots) {
    std::vector<SumApprox> out;
    out.reserve(roots.size());
    Rational v(0), e(0);
    for (const Interval& r : roots) {
        v += r.mid();
        e += r.half_width();
        out.push_back({v, e});
    }
    return out;
}

// Net change of S_k across a step, classified against the error bounds.
enum class StepClass { Increase, Decrease, Flat, Inconclusive };

inline StepClass classify_step(const SumApprox& lo, const SumApprox& hi) {
    Rational dlo = (hi.value - hi.error) - (lo.value + lo.error);
    Rational dhi = (hi.value + hi.error) - (lo.value - lo.error);
    if (sign(dlo) > 0) return StepClass::Increase;
    if (sign(dhi) < 0) return StepClass::Decrease;
    if (sign(dlo) == 0 && sign(dhi) == 0) return StepClass::Flat;
    return StepClass::Inconclusive;
}

struct StepOutcome {
    bool violated = false;
    bool strict = false;  // proven strict increase over the whole step
    Rational violated_at;
};

class StepResolver {
public:
    StepResolver(const ConvexPath& path, const std::vector<Interval>& brackets, int k)
        : path_(path), brackets_(brackets), k_(k) {}

    SumApprox sum_at(const Rational& t, const Rational& tol) const {
        IntPoly f = path_.int_at(t);
        Rational v(0), e(0);
        for (int i = 0; i < k_; ++i) {
            Interval r = isolate_root_in_interval(f, brackets_[static_cast<size_t>(i)], tol);
            v += r.mid();
            e += r.half_width();
        }
        return {v, e};
    }

    StepOutcome resolve(const Rational& ta, const SumApprox& sa, const Rational& tb, const SumApprox& sb,
                        const Rational& tol, int depth) const {
        switch (classify_step(sa, sb)) {
            case StepClass::Increase: return {false, true, Rational(0)};
            case StepClass::Flat: return {false, false, Rational(0)};
            case StepClass::Decrease: return {true, false, ta};
            case StepClass::Inconclusive: break;
        }
        if (depth >= kMaxDepth)
            fail(Errc::GridExhausted, "monotonicity unresolved at refinement cap near t=" + to_string(ta));
        Rational tol2 = tol / 4;
        Rational tm = (ta + tb) / 2;
        SumApprox sa2 = sum_at(ta, tol2), sm = sum_at(tm, tol2), sb2 = sum_at(tb, tol2);
        StepOutcome left = resolve(ta, sa2, tm, sm, tol2, depth + 1);
        if (left.violated) return left;
        StepOutcome right = resolve(tm, sm, tb, sb2, tol2, depth + 1);
        if (right.violated) return right;
        return {false, left.strict && right.strict, Rational(0)};
    }

    static constexpr int kMaxDepth = 16;  // local resolution up to 2^16 per base step

private:
    const ConvexPath& path_;
    const std::vector<Interval>& brackets_;
    int k_;
};

}  // namespace detail

/// Tracks all root trajectories on a uniform grid of `grid_size` rational
/// points (t = g/(grid_size-1)) and classifies S_k monotonicity per k.
inline TrajectoryBundle track(const PolyPair& pair, int grid_size, const Rational& tol) {
    if (grid_size < 2) fail(Errc::GridTooSmall, "need at least 2 grid points");
    if (sign(tol) <= 0) fail(Errc::InvalidArgument, "tolerance must be positive");
    std::vector<Interval> brackets = detail::brackets_or_throw(pair);
    ConvexPath path(pair);
    int n = pair.n();

    TrajectoryBundle bundle;
    bundle.sums_equal = pair.sums_equal();
    bundle.t_grid.resize(static_cast<size_t>(grid_size));
    bundle.roots_at.resize(static_cast<size_t>(grid_size));
    bundle.sums.resize(static_cast<size_t>(grid_size));
    for (int g = 0; g < grid_size; ++g)
        bundle.t_grid[static_cast<size_t>(g)] = rational(g, grid_size - 1);

    detail::parallel_for(static_cast<size_t>(grid_size), [&](size_t g) {
        IntPoly f = path.int_at(bundle.t_grid[g]);
        bundle.roots_at[g] = detail::isolate_all(f, brackets, tol);
        bundle.sums[g] = detail::prefix_sums(bundle.roots_at[g]);
    });

    bundle.monotone_verdicts.resize(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        MonotoneVerdict& verdict = bundle.monotone_verdicts[static_cast<size_t>(k - 1)];
        if (k == n) {
            // S_n(t) = t*sum(lam) + (1-t)*sum(mu) exactly.
            Rational slope = pair.lam().sum() - pair.mu().sum();
            if (sign(slope) > 0)
                verdict.kind = Monotonicity::Increasing;
            else if (sign(slope) == 0)
                verdict.kind = Monotonicity::Nondecreasing;
            else {
                verdict.kind = Monotonicity::ViolatedAt;
                verdict.violated_at = bundle.t_grid.front();
            }
            continue;
        }
        detail::StepResolver resolver(path, brackets, k);
        bool all_strict = true;
        for (int g = 0; g + 1 < grid_size; ++g) {
            const auto& sa = bundle.sums[static_cast<size_t>(g)][static_cast<size_t>(k - 1)];
            const auto& sb = bundle.sums[static_cast<size_t>(g + 1)][static_cast<size_t>(k - 1)];
            detail::StepOutcome out = resolver.resolve(bundle.t_grid[static_cast<size_t>(g)], sa,
                                                       bundle.t_grid[static_cast<size_t>(g + 1)], sb, tol, 0);
            if (out.violated) {
                verdict.kind = Monotonicity::ViolatedAt;
                verdict.violated_at = out.violated_at;
                break;
            }
            all_strict = all_strict && out.strict;
        }
        if (verdict.kind != Monotonicity::ViolatedAt)
            verdict.kind = all_strict ? Monotonicity::Increasing : Monotonicity::Nondecreasing;
    }
    return bundle;
}

/// Isolates the i-th trajectory (0-based, largest root first) at one t.
inline Interval isolate_root_at(const PolyPair& pair, const Rational& t, int i, const Rational& tol) {
    if (i < 0 || i >= pair.n()) fail(Errc::IndexError, "root index out of range");
    std::vector<Interval> brackets = detail::brackets_or_throw(pair);
    ConvexPath path(pair);
    return isolate_root_in_interval(path.int_at(t), brackets[static_cast<size_t>(i)], tol);
}

struct RootVelocity {
    Rational value;         // midpoint of the (q-p)/p_t' enclosure
    Rational error;         // half-width of that enclosure
    Interval form_difference;  // (q-p)/p_t' over the isolated root
    Interval form_q_over_t;    // (1/t) q/p_t'
    Interval form_p_over_1mt;  // (-1/(1-t)) p/p_t'
};

namespace detail {

inline Interval eval_over(const Poly& p, const Interval& x) {
    Interval acc = Interval::point(p.coefficients()[0]);
    for (size_t i = 1; i < p.coefficients().size(); ++i)
        acc = iv::add(iv::mul(acc, x), Interval::point(p.coefficients()[i]));
    return acc;
}

}  // namespace detail

/// dlambda_i/dt at interior rational t, via the three equivalent residue
/// forms evaluated over the isolated root. The 1/t and 1/(1-t) forms are
/// singular at the endpoints, hence the open-range requirement.
inline RootVelocity root_velocity(const PolyPair& pair, const Rational& t, int i, const Rational& tol) {
    if (sign(t) <= 0 || t >= 1) fail(Errc::TOutOfOpenRange, "t must lie strictly inside (0,1)");
    if (i < 0 || i >= pair.n()) fail(Errc::IndexError, "root index out of range");
    std::vector<Interval> brackets = detail::brackets_or_throw(pair);
    ConvexPath path(pair);
    IntPoly f = path.int_at(t);
    Poly pt_deriv = path.at(t).derivative();
    Poly diff = pair.q() - pair.p();

    Rational tol_i = tol;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Interval root = isolate_root_in_interval(f, brackets[static_cast<size_t>(i)], tol_i);
        Interval den = detail::eval_over(pt_deriv, root);
        if (sign(den.lo) <= 0 && sign(den.hi) >= 0) {
            tol_i /= 16;  // enclosure too loose to exclude zero; tighten
            continue;
        }
        RootVelocity v;
        v.form_difference = iv::div(detail::eval_over(diff, root), den);
        v.form_q_over_t = iv::scale(iv::div(detail::eval_over(pair.q(), root), den), 1 / t);
        v.form_p_over_1mt = iv::scale(iv::div(detail::eval_over(pair.p(), root), den), Rational(-1) / (1 - t));
        v.value = v.form_difference.mid();
        v.error = v.form_difference.half_width();
        return v;
    }
    fail(Errc::BracketFailure, "derivative enclosure keeps straddling zero (non-simple root?)");
}

struct EmpiricalVerdict {
    bool overall = false;  // every S_k (k<n) nondecreasing on the grid and S_n constant
    bool strict = false;   // every step of every S_k (k<n) proved a strict increase
    bool sums_equal = false;
    std::vector<MonotoneVerdict> per_k;
};

/// Grid check of strong majorization. `overall` means "no violation found
/// at this resolution"; the exact answer is strong_majorization_certificate.
inline EmpiricalVerdict strong_majorization_empirical(const PolyPair& pair, int grid_size,
                                                      const Rational& tol) {
    TrajectoryBundle bundle = track(pair, grid_size, tol);
    EmpiricalVerdict v;
    v.per_k = bundle.monotone_verdicts;
    v.sums_equal = bundle.sums_equal;
    v.overall = bundle.sums_equal;
    v.strict = true;
    for (int k = 1; k <= pair.n(); ++k) {
        const MonotoneVerdict& mv = v.per_k[static_cast<size_t>(k - 1)];
        if (k < pair.n()) {
            if (mv.kind == Monotonicity::ViolatedAt) v.overall = false;
            if (mv.kind != Monotonicity::Increasing) v.strict = false;
        }
    }
    return v;
}

}  // namespace polymaj
