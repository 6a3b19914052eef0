#pragma once

/* Partial fraction residues of p/q (and q/p) and the two exact partial-sum
 * certificates built on them:
 *
 *   - necessary condition: if p majorizes q, every proper partial sum of
 *     p(mu_i)/q'(mu_i) is strictly negative and the total is zero. A failed
 *     check refutes majorization; a pass does not prove it.
 *   - strong majorization: q(lambda_i)/p'(lambda_i) partial sums all >= 0
 *     together with equal root sums is equivalent to every partial root sum
 *     S_k(t) of tp+(1-t)q being nondecreasing in t, and implies majorization.
 *
 * All arithmetic is exact; a verdict never depends on a tolerance. */

#include <optional>
#include <utility>
#include <vector>

#include "polymaj/error.hpp"
#include "polymaj/interlace.hpp"
#include "polymaj/poly.hpp"
#include "polymaj/rational.hpp"

namespace polymaj {

enum class Direction { P_over_Q, Q_over_P };

struct ResidueReport {
    Direction direction = Direction::P_over_Q;
    std::vector<Rational> residues;      // delta_i, i = 1..n
    std::vector<Rational> partial_sums;  // f_k = sum_{i<=k} delta_i
    Rational total;                      // f_n; equals sum(mu)-sum(lam) for P_over_Q
    bool sums_equal = false;             // sum(lam) == sum(mu)
};

enum class CertificateKind {
    NecessaryConditionPassed,
    NecessaryConditionFailed,
    StrongMajorization,
    NotStrongMajorization,
};

struct Certificate {
    CertificateKind kind;
    std::optional<int> witness_k;    // 1-based index of the offending partial sum
    bool witness_is_boundary = false;  // witness sum is exactly zero (NCM only)
    ResidueReport detail;
};

/// Simple-pole decomposition of p/q (direction P_over_Q: residues
/// p(mu_i)/q'(mu_i) at the roots of q) or of q/p (Q_over_P, roles swapped).
/// Requires simple roots, distinct across the two polynomials.
inline ResidueReport decompose(const PolyPair& pair, Direction direction) {
    if (!pair.lam().simple() || !pair.mu().simple())
        fail(Errc::NonSimpleRoots, "roots must be simple");
    for (int i = 0; i < pair.n(); ++i)
        for (int j = 0; j < pair.n(); ++j)
            if (pair.lam()[i] == pair.mu()[j]) fail(Errc::SharedRoots, "p and q share a root");

    const bool pq = direction == Direction::P_over_Q;
    const Poly& num = pq ? pair.p() : pair.q();
    const Poly& den = pq ? pair.q() : pair.p();
    const RootList& poles = pq ? pair.mu() : pair.lam();
    const Poly dden = den.derivative();

    ResidueReport rep;
    rep.direction = direction;
    rep.residues.reserve(static_cast<size_t>(pair.n()));
    rep.partial_sums.reserve(static_cast<size_t>(pair.n()));
    Rational acc(0);
    for (int i = 0; i < pair.n(); ++i) {
        Rational delta = num(poles[i]) / dden(poles[i]);
        acc += delta;
        rep.residues.push_back(std::move(delta));
        rep.partial_sums.push_back(acc);
    }
    rep.total = acc;
    rep.sums_equal = pair.sums_equal();
    return rep;
}

namespace detail {

inline PolyPair normalized_for_certificate(const PolyPair& pair) {
    PolyPair reduced = reduce_shared_roots(pair);
    if (!common_interlacer_check(reduced).has_common_interlacer)
        fail(Errc::NoCommonInterlacer, "pair has no common interlacer");
    return reduced;
}

}  // namespace detail

/// Exact test of the necessary condition for p majorizing q. Shared roots
/// are reduced away first. Failed refutes majorization; Passed does not
/// prove it. A zero partial sum at k < n is reported as Failed with the
/// boundary flag set.
inline Certificate necessary_condition(const PolyPair& input) {
    PolyPair pair = detail::normalized_for_certificate(input);
    Certificate cert{CertificateKind::NecessaryConditionPassed, std::nullopt, false,
                     decompose(pair, Direction::P_over_Q)};
    int n = pair.n();
    for (int k = 1; k < n; ++k) {
        const Rational& fk = cert.detail.partial_sums[static_cast<size_t>(k - 1)];
        if (sign(fk) >= 0) {
            cert.kind = CertificateKind::NecessaryConditionFailed;
            cert.witness_k = k;
            cert.witness_is_boundary = sign(fk) == 0;
            return cert;
        }
    }
    if (sign(cert.detail.total) != 0) {
        cert.kind = CertificateKind::NecessaryConditionFailed;
        cert.witness_k = n;
    }
    return cert;
}

/// Exact strong-majorization certificate: all partial sums of
/// q(lambda_i)/p'(lambda_i) for k < n nonnegative and root sums equal.
/// StrongMajorization implies p majorizes q.
inline Certificate strong_majorization_certificate(const PolyPair& input) {
    PolyPair pair = detail::normalized_for_certificate(input);
    Certificate cert{CertificateKind::StrongMajorization, std::nullopt, false,
                     decompose(pair, Direction::Q_over_P)};
    int n = pair.n();
    for (int k = 1; k < n; ++k) {
        if (sign(cert.detail.partial_sums[static_cast<size_t>(k - 1)]) < 0) {
            cert.kind = CertificateKind::NotStrongMajorization;
            cert.witness_k = k;
            return cert;
        }
    }
    if (!cert.detail.sums_equal) {
        cert.kind = CertificateKind::NotStrongMajorization;
        cert.witness_k = n;
    }
    return cert;
}

}  // namespace polymaj
