#pragma once

/* Instance parsing and machine-readable reports. Canonical JSON: keys
 * sorted, exact quantities serialized as reduced "num/den" strings (never
 * floats), output newline-terminated, so identical analyses are
 * byte-identical. Decimals appear only in trajectory CSVs, whose precision
 * is derived from the isolation tolerance recorded in the report. */

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "polymaj/error.hpp"
#include "polymaj/harness.hpp"
#include "polymaj/homotopy.hpp"
#include "polymaj/interlace.hpp"
#include "polymaj/majorize.hpp"
#include "polymaj/poly.hpp"
#include "polymaj/rational.hpp"
#include "polymaj/residue.hpp"

namespace polymaj {

using Json = nlohmann::json;

struct Instance {
    std::string name;
    std::vector<Rational> lambda;
    std::vector<Rational> mu;

    PolyPair pair() const { return PolyPair{RootList(lambda), RootList(mu)}; }
};

namespace report {

inline Json rational_json(const Rational& q) { return to_string(q); }

inline Json rationals_json(const std::vector<Rational>& qs) {
    Json arr = Json::array();
    for (const auto& q : qs) arr.push_back(rational_json(q));
    return arr;
}

inline std::vector<Rational> parse_rational_array(const Json& arr, const std::string& key) {
    if (!arr.is_array() || arr.empty()) fail(Errc::ParseError, "'" + key + "' must be a nonempty array");
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
        if (item.is_number_integer())
            out.push_back(Rational(static_cast<long>(item.get<std::int64_t>())));
        else if (item.is_string())
            out.push_back(parse_rational(item.get<std::string>()));
        else
            fail(Errc::ParseError, "'" + key + "' entries must be integers or \"num/den\" strings");
    }
    return out;
}

inline Instance parse_instance(const Json& doc) {
    if (!doc.is_object()) fail(Errc::ParseError, "instance must be a JSON object");
    if (!doc.contains("lambda") || !doc.contains("mu"))
        fail(Errc::ParseError, "instance needs 'lambda' and 'mu'");
    Instance inst;
    inst.lambda = parse_rational_array(doc["lambda"], "lambda");
    inst.mu = parse_rational_array(doc["mu"], "mu");
    if (inst.lambda.size() != inst.mu.size())
        fail(Errc::ParseError, "'lambda' and 'mu' must have equal length");
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) fail(Errc::ParseError, "'name' must be a string");
        inst.name = doc["name"].get<std::string>();
    }
    return inst;
}

inline Instance parse_instance_text(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(Errc::ParseError, "invalid JSON");
    return parse_instance(doc);
}

inline Json instance_echo(const Instance& inst) {
    Json j;
    j["lambda"] = rationals_json(RootList(inst.lambda).values());
    j["mu"] = rationals_json(RootList(inst.mu).values());
    if (!inst.name.empty()) j["name"] = inst.name;
    return j;
}

inline Json interlace_json(const InterlaceVerdict& v) {
    Json j;
    j["has_common_interlacer"] = v.has_common_interlacer;
    j["properly_interlacing"] = v.properly_interlacing;
    if (v.first_crossing)
        j["first_crossing"] = Json::array({v.first_crossing->first, v.first_crossing->second});
    else
        j["first_crossing"] = nullptr;
    Json intervals = Json::array();
    for (const auto& iv : v.pair_intervals)
        intervals.push_back(Json::array({rational_json(iv.lo), rational_json(iv.hi)}));
    j["pair_intervals"] = intervals;
    return j;
}

inline Json majorization_json(const MajorizationVerdict& v) {
    Json j;
    j["holds"] = v.holds;
    j["partial_sum_gaps"] = rationals_json(v.partial_sum_gaps);
    j["first_violation"] = v.first_violation ? Json(*v.first_violation) : Json(nullptr);
    j["sums_equal"] = v.sums_equal;
    return j;
}

inline const char* direction_name(Direction d) {
    return d == Direction::P_over_Q ? "p_over_q" : "q_over_p";
}

inline Json residue_json(const ResidueReport& r) {
    Json j;
    j["direction"] = direction_name(r.direction);
    j["residues"] = rationals_json(r.residues);
    j["partial_sums"] = rationals_json(r.partial_sums);
    j["total"] = rational_json(r.total);
    j["sums_equal"] = r.sums_equal;
    return j;
}

inline const char* certificate_status(CertificateKind k) {
    switch (k) {
        case CertificateKind::NecessaryConditionPassed: return "passed";
        case CertificateKind::NecessaryConditionFailed: return "failed";
        case CertificateKind::StrongMajorization: return "strong_majorization";
        case CertificateKind::NotStrongMajorization: return "not_strong_majorization";
    }
    return "unknown";
}

inline Json certificate_json(const Certificate& c) {
    Json j;
    j["status"] = certificate_status(c.kind);
    j["witness_k"] = c.witness_k ? Json(*c.witness_k) : Json(nullptr);
    j["witness_is_boundary"] = c.witness_is_boundary;
    j["detail"] = residue_json(c.detail);
    return j;
}

inline const char* monotonicity_name(Monotonicity m) {
    switch (m) {
        case Monotonicity::Increasing: return "increasing";
        case Monotonicity::Nondecreasing: return "nondecreasing";
        case Monotonicity::ViolatedAt: return "violated";
    }
    return "unknown";
}

inline Json monotone_verdicts_json(const std::vector<MonotoneVerdict>& verdicts) {
    Json arr = Json::array();
    for (size_t k = 0; k < verdicts.size(); ++k) {
        Json j;
        j["k"] = static_cast<int>(k + 1);
        j["kind"] = monotonicity_name(verdicts[k].kind);
        j["violated_at"] = verdicts[k].violated_at ? Json(rational_json(*verdicts[k].violated_at))
                                                   : Json(nullptr);
        arr.push_back(std::move(j));
    }
    return arr;
}

inline Json genspec_json(const GenSpec& spec) {
    Json j;
    j["degree"] = spec.degree;
    j["interval_gap"] = rational_json(spec.interval_gap);
    j["root_box"] = Json::array({rational_json(spec.root_box.lo), rational_json(spec.root_box.hi)});
    j["seed"] = spec.seed;
    j["equalize_sums"] = spec.equalize_sums;
    j["denominator"] = spec.denom;
    return j;
}

inline Json campaign_json(const CampaignReport& r) {
    Json j;
    j["theorem"] = r.theorem;
    j["spec"] = genspec_json(r.spec);
    j["trials"] = r.trials;
    j["applicable"] = r.applicable;
    j["vacuous"] = r.vacuous;
    Json cx = Json::array();
    for (const auto& rec : r.counterexamples) {
        Json c;
        c["trial"] = rec.trial;
        c["lambda"] = rationals_json(rec.lam);
        c["mu"] = rationals_json(rec.mu);
        c["note"] = rec.note;
        cx.push_back(std::move(c));
    }
    j["counterexamples"] = cx;
    Json stats;
    for (const auto& [k, v] : r.stats) stats[k] = v;
    j["stats"] = stats;
    j["rng"] = r.rng_id;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

/// Canonical serialization: sorted keys (nlohmann objects are ordered
/// maps), compact separators, trailing newline.
inline std::string dump_canonical(const Json& j) { return j.dump() + "\n"; }

/// Decimal digits needed so that rounding error stays below tol.
inline int decimal_digits_for(const Rational& tol) {
    int digits = 1;
    Rational scale(1, 10);
    while (scale >= tol && digits < 64) {
        scale /= 10;
        ++digits;
    }
    return digits;
}

/// CSV rows "t,lambda_1..lambda_n,S_1..S_n" in fixed-point decimal.
inline std::string trajectory_csv(const TrajectoryBundle& bundle, const Rational& tol) {
    int n = bundle.roots_at.empty() ? 0 : static_cast<int>(bundle.roots_at.front().size());
    int digits = decimal_digits_for(tol);
    std::string out = "t";
    for (int i = 1; i <= n; ++i) out += ",lambda_" + std::to_string(i);
    for (int k = 1; k <= n; ++k) out += ",S_" + std::to_string(k);
    out += "\n";
    for (size_t g = 0; g < bundle.t_grid.size(); ++g) {
        out += to_decimal(bundle.t_grid[g], digits);
        for (int i = 0; i < n; ++i) out += "," + to_decimal(bundle.roots_at[g][static_cast<size_t>(i)].mid(), digits);
        for (int k = 0; k < n; ++k) out += "," + to_decimal(bundle.sums[g][static_cast<size_t>(k)].value, digits);
        out += "\n";
    }
    return out;
}

}  // namespace report

}  // namespace polymaj
