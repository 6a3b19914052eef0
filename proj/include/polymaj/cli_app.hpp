#pragma once

/* Command-line front end. Subcommands: check, track, campaign, decompose.
 * Exit codes are a stable contract: 0 analysis complete (whatever the
 * verdicts), 2 input or flag error, 3 structural precondition failure.
 * Campaigns return 0 only when no counterexamples/mismatches were found. */

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polymaj/error.hpp"
#include "polymaj/harness.hpp"
#include "polymaj/homotopy.hpp"
#include "polymaj/report.hpp"

namespace polymaj::cli {

inline int exit_code_for(Errc code) {
    switch (code) {
        case Errc::ParseError:
        case Errc::LengthMismatch:
        case Errc::GridTooSmall:
        case Errc::TrialsOutOfRange:
        case Errc::SpecInvalid:
        case Errc::InvalidArgument:
        case Errc::EpsOutOfRange:
        case Errc::IndexError:
        case Errc::TOutOfOpenRange:
        case Errc::DegreeTooLow:
            return 2;
        default:
            return 3;
    }
}

namespace detail {

inline std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::ParseError, "cannot open '" + path + "' for writing");
    out << text;
}

/// Tolerances accept "2^-60" shorthand or any "num/den" rational.
inline Rational parse_tol(const std::string& text) {
    if (text.rfind("2^", 0) == 0) {
        try {
            return pow2(std::stol(text.substr(2)));
        } catch (const std::exception&) {
            fail(Errc::ParseError, "bad exponent in '" + text + "'");
        }
    }
    Rational tol = parse_rational(text);
    if (sign(tol) <= 0) fail(Errc::ParseError, "tolerance must be positive");
    return tol;
}

inline Json reduction_json(const PolyPair& original) {
    Json j;
    Json removed = Json::array();
    for (int i = 0; i < original.n(); ++i)
        if (original.lam()[i] == original.mu()[i]) removed.push_back(report::rational_json(original.lam()[i]));
    j["applied"] = !removed.empty();
    j["removed"] = removed;
    return j;
}

inline int cmd_check(const std::string& input, const std::string& json_path) {
    Instance inst = report::parse_instance_text(read_input(input));
    PolyPair pair = inst.pair();
    Json out;
    out["instance"] = report::instance_echo(inst);
    out["interlace"] = report::interlace_json(common_interlacer_check(pair));
    out["majorization"] = report::majorization_json(majorizes(pair.lam(), pair.mu()));
    out["reduction"] = reduction_json(pair);
    auto run_certificate = [&](auto&& fn) -> Json {
        try {
            return report::certificate_json(fn(pair));
        } catch (const Error& e) {
            if (e.code() == Errc::NoCommonInterlacer) return Json{{"status", "no_common_interlacer"}};
            if (e.code() == Errc::DegenerateEmpty) return Json{{"status", "degenerate_pair"}};
            throw;
        }
    };
    out["ncm"] = run_certificate([](const PolyPair& p) { return necessary_condition(p); });
    out["nscm"] = run_certificate([](const PolyPair& p) { return strong_majorization_certificate(p); });
    write_output(report::dump_canonical(out), json_path);
    return 0;
}

inline int cmd_decompose(const std::string& input, const std::string& direction,
                         const std::string& json_path) {
    Instance inst = report::parse_instance_text(read_input(input));
    PolyPair pair = inst.pair();
    PolyPair reduced = reduce_shared_roots(pair);  // DegenerateEmpty -> exit 3
    Direction dir = direction == "pq" ? Direction::P_over_Q : Direction::Q_over_P;
    Json out;
    out["instance"] = report::instance_echo(inst);
    out["reduction"] = reduction_json(pair);
    out["decomposition"] = report::residue_json(decompose(reduced, dir));
    write_output(report::dump_canonical(out), json_path);
    return 0;
}

inline int cmd_track(const std::string& input, int grid, const std::string& tol_text,
                     const std::string& csv_path, const std::string& json_path) {
    if (grid < 2) fail(Errc::GridTooSmall, "need at least 2 grid points");
    Rational tol = parse_tol(tol_text);
    Instance inst = report::parse_instance_text(read_input(input));
    PolyPair pair = inst.pair();
    TrajectoryBundle bundle = track(pair, grid, tol);

    Json out;
    out["instance"] = report::instance_echo(inst);
    out["grid_size"] = grid;
    out["tol"] = report::rational_json(tol);
    out["sums_equal"] = bundle.sums_equal;
    out["monotone_verdicts"] = report::monotone_verdicts_json(bundle.monotone_verdicts);
    bool overall = bundle.sums_equal, strict = true;
    for (int k = 1; k < pair.n(); ++k) {
        const auto& mv = bundle.monotone_verdicts[static_cast<size_t>(k - 1)];
        if (mv.kind == Monotonicity::ViolatedAt) overall = false;
        if (mv.kind != Monotonicity::Increasing) strict = false;
    }
    out["nondecreasing_on_grid"] = overall;
    out["strictly_increasing_on_grid"] = strict;
    out["csv"] = csv_path.empty() ? Json(nullptr) : Json(csv_path);
    if (!csv_path.empty()) write_output(report::trajectory_csv(bundle, tol), csv_path);
    write_output(report::dump_canonical(out), json_path);
    return 0;
}

inline int cmd_campaign(const std::string& theorem, int trials, std::uint64_t seed, int degree,
                        int grid, const std::string& gap_text, long denom,
                        const std::string& perturb_text, const std::string& json_path) {
    GenSpec spec;
    spec.degree = degree;
    spec.seed = seed;
    spec.equalize_sums = true;
    spec.denom = denom;
    spec.interval_gap = parse_tol(gap_text);

    CampaignReport rep;
    if (theorem == "ncm")
        rep = campaign_ncm(spec, trials);
    else if (theorem == "nscm")
        rep = campaign_nscm(spec, trials, grid);
    else if (theorem == "diffmaj") {
        std::optional<Rational> perturb;
        if (!perturb_text.empty()) perturb = parse_tol(perturb_text);
        rep = search_diffmaj(spec, trials, perturb);
    } else
        fail(Errc::SpecInvalid, "unknown theorem '" + theorem + "'");

    write_output(report::dump_canonical(report::campaign_json(rep)), json_path);
    return rep.counterexamples.empty() ? 0 : 1;
}

}  // namespace detail

inline int run(int argc, const char* const* argv) {
    CLI::App app{"majorization and strong-majorization certificates for real-rooted polynomials"};
    app.require_subcommand(1);

    std::string input, json_path, csv_path, direction = "pq", theorem, tol_text = "2^-60";
    std::string gap_text = "1/2", perturb_text;
    int grid = 1024, trials = 0, degree = 4;
    long denom = 65536;
    std::uint64_t seed = 0;

    auto* check = app.add_subcommand("check", "interlacing, majorization, and residue certificates");
    check->add_option("instance", input, "instance JSON path, or '-' for stdin")->required();
    check->add_option("--json", json_path, "write report to this path instead of stdout");

    auto* decompose_cmd = app.add_subcommand("decompose", "partial fraction residues and partial sums");
    decompose_cmd->add_option("instance", input, "instance JSON path, or '-' for stdin")->required();
    decompose_cmd->add_option("--direction", direction, "pq = p/q at roots of q, qp = q/p at roots of p")
        ->check(CLI::IsMember({"pq", "qp"}));
    decompose_cmd->add_option("--json", json_path, "write report to this path instead of stdout");

    auto* track_cmd = app.add_subcommand("track", "root trajectories of t*p + (1-t)*q");
    track_cmd->add_option("instance", input, "instance JSON path, or '-' for stdin")->required();
    track_cmd->add_option("--grid", grid, "number of grid points (default 1024)");
    track_cmd->add_option("--tol", tol_text, "isolation tolerance, '2^-60' or 'num/den'");
    track_cmd->add_option("--csv", csv_path, "write trajectory CSV to this path");
    track_cmd->add_option("--json", json_path, "write report to this path instead of stdout");

    auto* campaign_cmd = app.add_subcommand("campaign", "seeded theorem-verification campaigns");
    campaign_cmd->add_option("--theorem", theorem, "ncm, nscm, or diffmaj")
        ->required()
        ->check(CLI::IsMember({"ncm", "nscm", "diffmaj"}));
    campaign_cmd->add_option("--trials", trials, "number of trials")->required();
    campaign_cmd->add_option("--seed", seed, "campaign seed (default 0)");
    campaign_cmd->add_option("--degree", degree, "polynomial degree (default 4)");
    campaign_cmd->add_option("--grid", grid, "grid points for nscm (default 1024)");
    campaign_cmd->add_option("--gap", gap_text, "min spacing between root intervals (default 1/2)");
    campaign_cmd->add_option("--denom", denom, "lattice denominator for drawn roots (default 65536)");
    campaign_cmd->add_option("--perturb", perturb_text,
                             "diffmaj only: jitter size for the neighborhood sweep (counts only)");
    campaign_cmd->add_option("--json", json_path, "write report to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return detail::cmd_check(input, json_path);
        if (decompose_cmd->parsed()) return detail::cmd_decompose(input, direction, json_path);
        if (track_cmd->parsed()) return detail::cmd_track(input, grid, tol_text, csv_path, json_path);
        if (campaign_cmd->parsed()) {
            if (trials < 1) fail(Errc::TrialsOutOfRange, "need at least one trial");
            return detail::cmd_campaign(theorem, trials, seed, degree, grid, gap_text, denom,
                                        perturb_text, json_path);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace polymaj::cli
