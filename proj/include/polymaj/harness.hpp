#pragma once

/* Seeded instance generation and theorem-verification campaigns.
 *
 * Pairs are drawn on the lattice (1/denom)*Z: the root box splits into n
 * equal containers separated by at least interval_gap, and each container
 * receives one lambda and one mu (distinct), which guarantees a common
 * interlacer with strict separation by construction. Campaigns derive one
 * sub-seed per trial, so parallel and serial runs produce identical
 * reports. RNG: mt19937_64 raw output, splitmix64 sub-seeding, draws by
 * modulo reduction (see kRngId). */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "polymaj/detail/parallel.hpp"
#include "polymaj/error.hpp"
#include "polymaj/homotopy.hpp"
#include "polymaj/interlace.hpp"
#include "polymaj/interval.hpp"
#include "polymaj/majorize.hpp"
#include "polymaj/poly.hpp"
#include "polymaj/rational.hpp"
#include "polymaj/residue.hpp"

namespace polymaj {

inline constexpr const char* kRngId = "mt19937_64/splitmix64-subseed/mod-draw";

struct GenSpec {
    int degree = 4;
    Rational interval_gap = rational(1, 2);  // min spacing between consecutive containers
    Interval root_box = Interval(rational(-10), rational(10));
    std::uint64_t seed = 0;
    bool equalize_sums = false;
    long denom = 65536;  // roots are drawn as i/denom
};

struct TrialRecord {
    int trial = 0;
    std::vector<Rational> lam, mu;
    std::string note;  // which assertion failed, certificate detail
};

struct CampaignReport {
    std::string theorem;
    GenSpec spec;
    int trials = 0;
    int applicable = 0;  // trials that met the theorem's premise
    bool vacuous = false;
    std::vector<TrialRecord> counterexamples;
    std::map<std::string, long> stats;
    std::string rng_id = kRngId;
    long runtime_ms = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t sub_seed(std::uint64_t seed, int trial) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1));
}

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    /// Uniform-ish integer in [0, bound] (modulo reduction; bias is
    /// irrelevant for test-instance generation, determinism is not).
    std::uint64_t upto(std::uint64_t bound) { return rng_() % (bound + 1); }
    bool coin() { return (rng_() & 1) != 0; }

private:
    std::mt19937_64 rng_;
};

inline void validate_spec(const GenSpec& spec) {
    if (spec.degree < 2) fail(Errc::SpecInvalid, "degree must be at least 2");
    if (sign(spec.interval_gap) <= 0) fail(Errc::SpecInvalid, "interval_gap must be positive");
    if (spec.denom < 2) fail(Errc::SpecInvalid, "denominator must be at least 2");
    if (spec.root_box.lo >= spec.root_box.hi) fail(Errc::SpecInvalid, "empty root box");
}

/// One raw draw: n containers, two distinct lattice points each.
inline std::pair<std::vector<Rational>, std::vector<Rational>> draw_lattice_pair(const GenSpec& spec,
                                                                                 Draw& draw) {
    Integer d(spec.denom);
    Integer lo_u, hi_u;
    mpz_cdiv_q(lo_u.get_mpz_t(), Integer(spec.root_box.lo.get_num() * d).get_mpz_t(),
               spec.root_box.lo.get_den().get_mpz_t());
    mpz_fdiv_q(hi_u.get_mpz_t(), Integer(spec.root_box.hi.get_num() * d).get_mpz_t(),
               spec.root_box.hi.get_den().get_mpz_t());
    Integer gap_u;
    mpz_cdiv_q(gap_u.get_mpz_t(), Integer(spec.interval_gap.get_num() * d).get_mpz_t(),
               spec.interval_gap.get_den().get_mpz_t());
    if (gap_u < 1) gap_u = 1;

    Integer span = hi_u - lo_u;
    Integer n(spec.degree);
    Integer width = (span - (n - 1) * gap_u) / n;
    if (width < 1) fail(Errc::SpecInfeasible, "root box cannot fit the intervals at this gap");
    Integer leftover = span - n * width - (n - 1) * gap_u;
    if (!width.fits_ulong_p() || !leftover.fits_ulong_p())
        fail(Errc::SpecInfeasible, "lattice too large for the draw routine");

    Integer base = lo_u + static_cast<unsigned long>(draw.upto(leftover.get_ui()));
    std::vector<Rational> lam, mu;
    for (int i = 0; i < spec.degree; ++i) {
        unsigned long w = width.get_ui();
        unsigned long u = static_cast<unsigned long>(draw.upto(w));
        unsigned long v = u;
        while (v == u) v = static_cast<unsigned long>(draw.upto(w));
        lam.push_back(rational(base + u, d));
        mu.push_back(rational(base + v, d));
        base += width + gap_u;
    }
    // Largest container first, so index 0 pairs with the top roots.
    std::reverse(lam.begin(), lam.end());
    std::reverse(mu.begin(), mu.end());
    return {std::move(lam), std::move(mu)};
}

inline bool positionally_distinct(const PolyPair& pair) {
    for (int i = 0; i < pair.n(); ++i)
        if (pair.lam()[i] == pair.mu()[i]) return false;
    return true;
}

inline bool valid_generated_pair(const PolyPair& pair) {
    return common_interlacer_check(pair).has_common_interlacer && positionally_distinct(pair);
}

}  // namespace detail

/// Draws a pair with a common interlacer by construction. With
/// equalize_sums, mu is shifted by (sum lam - sum mu)/n and the pair is
/// re-validated, resampling up to 100 times.
inline PolyPair generate_pair(const GenSpec& spec) {
    detail::validate_spec(spec);
    detail::Draw draw(spec.seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        auto [lam, mu] = detail::draw_lattice_pair(spec, draw);
        if (spec.equalize_sums) {
            Rational slam(0), smu(0);
            for (const auto& x : lam) slam += x;
            for (const auto& x : mu) smu += x;
            Rational shift = (slam - smu) / spec.degree;
            for (auto& x : mu) x += shift;
        }
        PolyPair pair{RootList(std::move(lam)), RootList(std::move(mu))};
        if (detail::valid_generated_pair(pair)) return pair;
        if (!spec.equalize_sums)
            fail(Errc::BracketFailure, "lattice construction produced an invalid pair");  // unreachable
    }
    fail(Errc::SpecInfeasible, "sum equalization kept breaking the intervals (100 resamples)");
}

namespace detail {

template <typename TrialFn>
CampaignReport run_campaign(const std::string& theorem, const GenSpec& spec, int trials,
                            const TrialFn& trial_fn) {
    if (trials < 1) fail(Errc::TrialsOutOfRange, "need at least one trial");
    auto started = std::chrono::steady_clock::now();

    struct Slot {
        bool applicable = false;
        bool failed = false;
        TrialRecord record;
        std::map<std::string, long> stats;
    };
    std::vector<Slot> slots(static_cast<size_t>(trials));
    parallel_for(static_cast<size_t>(trials), [&](size_t t) {
        GenSpec sub = spec;
        sub.seed = sub_seed(spec.seed, static_cast<int>(t));
        Slot& slot = slots[t];
        trial_fn(static_cast<int>(t), sub, slot.applicable, slot.failed, slot.record, slot.stats);
    });

    CampaignReport report;
    report.theorem = theorem;
    report.spec = spec;
    report.trials = trials;
    for (auto& slot : slots) {
        if (slot.applicable) ++report.applicable;
        if (slot.failed) report.counterexamples.push_back(std::move(slot.record));
        for (const auto& [k, v] : slot.stats) report.stats[k] += v;
    }
    report.vacuous = report.applicable == 0;
    report.stats["passed"] = report.applicable - static_cast<long>(report.counterexamples.size());
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

inline TrialRecord make_record(int trial, const PolyPair& pair, std::string note) {
    TrialRecord r;
    r.trial = trial;
    r.lam = pair.lam().values();
    r.mu = pair.mu().values();
    r.note = std::move(note);
    return r;
}

}  // namespace detail

/// Theorem check: every generated pair that majorizes must pass the
/// necessary condition. Any counterexample signals an implementation bug.
inline CampaignReport campaign_ncm(const GenSpec& spec, int trials) {
    return detail::run_campaign("ncm", spec, trials,
                                [](int t, const GenSpec& sub, bool& applicable, bool& failed,
                                   TrialRecord& record, std::map<std::string, long>&) {
                                    PolyPair pair = generate_pair(sub);
                                    if (!majorizes(pair.lam(), pair.mu()).holds) return;
                                    applicable = true;
                                    Certificate cert = necessary_condition(pair);
                                    if (cert.kind != CertificateKind::NecessaryConditionPassed) {
                                        failed = true;
                                        record = detail::make_record(
                                            t, pair,
                                            "majorizing pair failed NCM at k=" +
                                                std::to_string(cert.witness_k.value_or(-1)));
                                    }
                                });
}

/// Equivalence check: exact strong-majorization certificate vs the grid
/// verdict. On disagreement the grid is refined (x4 steps, capped) before a
/// mismatch is recorded.
inline CampaignReport campaign_nscm(const GenSpec& spec, int trials, int grid_size) {
    if (!spec.equalize_sums) fail(Errc::SpecInvalid, "nscm campaign requires equalize_sums");
    if (grid_size < 2) fail(Errc::GridTooSmall, "need at least 2 grid points");
    const Rational tol = pow2(-60);
    return detail::run_campaign(
        "nscm", spec, trials,
        [grid_size, &tol](int t, const GenSpec& sub, bool& applicable, bool& failed,
                          TrialRecord& record, std::map<std::string, long>& stats) {
            PolyPair pair = generate_pair(sub);
            applicable = true;
            Certificate cert = strong_majorization_certificate(pair);
            bool cert_strong = cert.kind == CertificateKind::StrongMajorization;
            stats[cert_strong ? "certificate_strong" : "certificate_not_strong"] += 1;
            int grid = grid_size;
            bool agree = false;
            for (;;) {
                EmpiricalVerdict emp = strong_majorization_empirical(pair, grid, tol);
                agree = emp.overall == cert_strong;
                if (agree) break;
                int next = (grid - 1) * 4 + 1;
                if (next > (1 << 16) + 1) break;
                grid = next;
                stats["grid_refinements"] += 1;
            }
            if (!agree) {
                failed = true;
                record = detail::make_record(t, pair,
                                             cert_strong ? "certificate strong, grid found a violation"
                                                         : "certificate not strong, grid saw no violation");
            }
        });
}

/// Constructs majorizing pairs whose partial root sums tie at an interior k
/// (block-wise sum equalization), then asserts the DiffMaj conclusion: some
/// residue partial sum at k0 <= k is strictly negative, so no strong
/// majorization. With `perturb`, each confirmed pair is also re-tested
/// after a random jitter of mu (counts only, no assertion).
inline CampaignReport search_diffmaj(const GenSpec& spec, int trials,
                                     const std::optional<Rational>& perturb = std::nullopt) {
    if (!spec.equalize_sums) fail(Errc::SpecInvalid, "diffmaj search requires equalize_sums");
    if (spec.degree < 4)
        fail(Errc::SpecInfeasible,
             "interior partial-sum equality with distinct roots needs degree >= 4");
    return detail::run_campaign(
        "diffmaj", spec, trials,
        [&perturb](int t, const GenSpec& sub, bool& applicable, bool& failed, TrialRecord& record,
                   std::map<std::string, long>& stats) {
            detail::Draw draw(sub.seed);
            int n = sub.degree;
            int k = 2 + static_cast<int>(draw.upto(static_cast<std::uint64_t>(n - 4)));  // 2..n-2
            applicable = true;

            std::optional<PolyPair> found;
            for (int attempt = 0; attempt < 100 && !found; ++attempt) {
                auto [lam, mu] = detail::draw_lattice_pair(sub, draw);
                Rational top_gap(0), bot_gap(0);
                for (int i = 0; i < k; ++i) top_gap += lam[static_cast<size_t>(i)] - mu[static_cast<size_t>(i)];
                for (int i = k; i < n; ++i) bot_gap += lam[static_cast<size_t>(i)] - mu[static_cast<size_t>(i)];
                Rational s_top = top_gap / k, s_bot = bot_gap / (n - k);
                for (int i = 0; i < k; ++i) mu[static_cast<size_t>(i)] += s_top;
                for (int i = k; i < n; ++i) mu[static_cast<size_t>(i)] += s_bot;
                // Block shifts must not reorder mu, or the positional tie at k is lost.
                if (!(mu[static_cast<size_t>(k - 1)] > mu[static_cast<size_t>(k)])) continue;
                PolyPair pair{RootList(lam), RootList(mu)};
                if (!detail::valid_generated_pair(pair)) continue;
                if (!majorizes(pair.lam(), pair.mu()).holds) continue;
                found = pair;
            }
            if (!found) {
                failed = true;
                record.trial = t;
                record.note = "could not construct a tied majorizing pair in 100 draws";
                return;
            }
            applicable = true;
            Certificate cert = strong_majorization_certificate(*found);
            bool confirmed = cert.kind == CertificateKind::NotStrongMajorization &&
                             cert.witness_k.has_value() && *cert.witness_k <= k;
            if (!confirmed) {
                failed = true;
                record = detail::make_record(
                    t, *found, "expected NotStrongMajorization with witness <= " + std::to_string(k));
                return;
            }
            stats["confirmed"] += 1;

            if (perturb) {
                std::vector<Rational> mu2 = found->mu().values();
                Rational step = *perturb / 16;
                for (auto& x : mu2) {
                    long j = static_cast<long>(draw.upto(32)) - 16;  // jitter in [-eps, eps]
                    x += j * step;
                }
                stats["perturb_checked"] += 1;
                try {
                    PolyPair jittered{found->lam(), RootList(std::move(mu2))};
                    if (detail::valid_generated_pair(jittered) &&
                        strong_majorization_certificate(jittered).kind ==
                            CertificateKind::NotStrongMajorization)
                        stats["perturb_not_strong"] += 1;
                } catch (const Error&) {
                    // jitter produced a degenerate pair; counted as checked only
                }
            }
        });
}

}  // namespace polymaj
