#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>
#include <vector>

#include "polymaj/cli_app.hpp"
#include "polymaj/report.hpp"
#include "test_support.hpp"

using namespace polymaj;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("polymaj_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(dir, ec); }
    std::string file(const std::string& name, const std::string& content = "") const {
        fs::path p = dir / name;
        if (!content.empty()) std::ofstream(p) << content;
        return p.string();
    }
};

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"polymaj"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("instance parsing accepts integers and rational strings") {
    Instance inst = report::parse_instance_text(R"({"lambda":[2,"-6/3"],"mu":["1",-1],"name":"demo"})");
    CHECK(RootList(inst.lambda) == RootList{2, -2});
    CHECK(RootList(inst.mu) == RootList{1, -1});
    CHECK(inst.name == "demo");
    // Echo canonicalizes: -6/3 -> -2, sorted nonincreasing.
    Json echo = report::instance_echo(inst);
    CHECK(echo["lambda"] == Json::array({"2", "-2"}));
}

TEST_CASE("instance parsing rejects malformed documents") {
    CHECK_THROWS_AS(report::parse_instance_text("not json"), Error);
    CHECK_THROWS_AS(report::parse_instance_text(R"({"lambda":[1]})"), Error);
    CHECK_THROWS_AS(report::parse_instance_text(R"({"lambda":[1],"mu":[1,2]})"), Error);
    CHECK_THROWS_AS(report::parse_instance_text(R"({"lambda":[],"mu":[]})"), Error);
    CHECK_THROWS_AS(report::parse_instance_text(R"({"lambda":[1.5],"mu":[1]})"), Error);
    CHECK_THROWS_AS(report::parse_instance_text(R"({"lambda":["1/0"],"mu":[1]})"), Error);
    try {
        report::parse_instance_text(R"({"lambda":[1],"mu":[1,2]})");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
    }
}

TEST_CASE("canonical reports round-trip byte-identically") {
    TempDir tmp;
    std::string instance = tmp.file("d4.json", R"({"lambda":[5,1,-1,-5],"mu":[4,2,-2,-4]})");
    std::string out = tmp.file("report.json");
    REQUIRE(run_cli({"check", instance, "--json", out}) == 0);
    std::string text = slurp(out);
    CHECK(!text.empty());
    CHECK(text.back() == '\n');
    Json parsed = Json::parse(text);
    CHECK(report::dump_canonical(parsed) == text);
}

TEST_CASE("check reports the worked degree-2 analysis") {
    TempDir tmp;
    std::string instance = tmp.file("d2.json", R"({"lambda":[2,-2],"mu":[1,-1]})");
    std::string out = tmp.file("report.json");
    REQUIRE(run_cli({"check", instance, "--json", out}) == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["interlace"]["has_common_interlacer"] == true);
    CHECK(j["majorization"]["holds"] == true);
    CHECK(j["ncm"]["status"] == "passed");
    CHECK(j["nscm"]["status"] == "strong_majorization");
    CHECK(j["nscm"]["detail"]["partial_sums"] == Json::array({"3/4", "0"}));
}

TEST_CASE("check reports the degree-4 witness value -3/20") {
    TempDir tmp;
    std::string instance = tmp.file("d4.json", R"({"lambda":[5,1,-1,-5],"mu":[4,2,-2,-4]})");
    std::string out = tmp.file("report.json");
    REQUIRE(run_cli({"check", instance, "--json", out}) == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["majorization"]["holds"] == true);
    CHECK(j["nscm"]["status"] == "not_strong_majorization");
    CHECK(j["nscm"]["witness_k"] == 2);
    CHECK(j["nscm"]["detail"]["partial_sums"][1] == "-3/20");
}

TEST_CASE("check handles no-interlacer and degenerate pairs in-body with exit 0") {
    TempDir tmp;
    std::string crossing = tmp.file("x.json", R"({"lambda":[5,4],"mu":[3,1]})");
    std::string out = tmp.file("r.json");
    REQUIRE(run_cli({"check", crossing, "--json", out}) == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["interlace"]["has_common_interlacer"] == false);
    CHECK(j["ncm"]["status"] == "no_common_interlacer");

    std::string identical = tmp.file("same.json", R"({"lambda":[1,0],"mu":[1,0]})");
    REQUIRE(run_cli({"check", identical, "--json", out}) == 0);
    j = Json::parse(slurp(out));
    CHECK(j["ncm"]["status"] == "degenerate_pair");
    CHECK(j["majorization"]["holds"] == true);
}

TEST_CASE("parse errors exit with code 2") {
    TempDir tmp;
    std::string mismatch = tmp.file("bad.json", R"({"lambda":[1],"mu":[1,2]})");
    CHECK(run_cli({"check", mismatch}) == 2);
    CHECK(run_cli({"check", tmp.file("missing_file.json")}) == 2);
    CHECK(run_cli({"nonsense-subcommand"}) == 2);
}

TEST_CASE("decompose emits exact residue strings and honors direction") {
    TempDir tmp;
    std::string d2 = tmp.file("d2.json", R"({"lambda":[2,-2],"mu":[1,-1]})");
    std::string out = tmp.file("r.json");
    REQUIRE(run_cli({"decompose", d2, "--direction", "pq", "--json", out}) == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["decomposition"]["residues"] == Json::array({"-3/2", "3/2"}));

    std::string d4 = tmp.file("d4.json", R"({"lambda":[5,1,-1,-5],"mu":[4,2,-2,-4]})");
    REQUIRE(run_cli({"decompose", d4, "--direction", "qp", "--json", out}) == 0);
    j = Json::parse(slurp(out));
    CHECK(j["decomposition"]["partial_sums"] == Json::array({"63/80", "-3/20", "63/80", "0"}));
}

TEST_CASE("decompose reduces shared roots with a notice and rejects full cancellation") {
    TempDir tmp;
    std::string shared = tmp.file("s.json", R"({"lambda":[3,1],"mu":[3,0]})");
    std::string out = tmp.file("r.json");
    REQUIRE(run_cli({"decompose", shared, "--direction", "pq", "--json", out}) == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["reduction"]["applied"] == true);
    CHECK(j["reduction"]["removed"] == Json::array({"3"}));
    CHECK(j["decomposition"]["residues"].size() == 1);

    std::string identical = tmp.file("same.json", R"({"lambda":[1,0],"mu":[1,0]})");
    CHECK(run_cli({"decompose", identical, "--direction", "pq", "--json", out}) == 3);
}

TEST_CASE("track writes the CSV contract and flags the DiffMaj violation") {
    TempDir tmp;
    std::string d2 = tmp.file("d2.json", R"({"lambda":[2,-2],"mu":[1,-1]})");
    std::string out = tmp.file("r.json"), csv = tmp.file("t.csv");
    REQUIRE(run_cli({"track", d2, "--grid", "4", "--tol", "2^-40", "--csv", csv, "--json", out}) == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["grid_size"] == 4);
    CHECK(j["nondecreasing_on_grid"] == true);
    CHECK(j["csv"] == csv);

    std::istringstream rows(slurp(csv));
    std::string header, row0;
    std::getline(rows, header);
    CHECK(header == "t,lambda_1,lambda_2,S_1,S_2");
    std::getline(rows, row0);
    // t = 0 row: roots equal mu = (1,-1) to tolerance; fixed-point decimals parse exactly.
    auto cell = [&](const std::string& line, int idx) {
        std::istringstream ss(line);
        std::string item;
        for (int c = 0; c <= idx; ++c) std::getline(ss, item, ',');
        return item;
    };
    Rational tol = pow2(-40);
    auto parse_decimal = [](const std::string& s) {
        auto dot = s.find('.');
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, s.size() - dot - 1);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        bool neg = digits[0] == '-';
        if (neg) digits.erase(0, 1);
        Rational v = rational(Integer(digits, 10), scale);
        return neg ? Rational(-v) : v;
    };
    CHECK(abs(parse_decimal(cell(row0, 1)) - 1) <= tol);
    CHECK(abs(parse_decimal(cell(row0, 2)) - (-1)) <= tol);
    std::string row1, row2, row3;
    std::getline(rows, row1);
    std::getline(rows, row2);
    std::getline(rows, row3);
    CHECK(abs(parse_decimal(cell(row3, 1)) - 2) <= tol);  // t=1 row: lambda_1 = 2

    std::string d4 = tmp.file("d4.json", R"({"lambda":[5,1,-1,-5],"mu":[4,2,-2,-4]})");
    REQUIRE(run_cli({"track", d4, "--grid", "256", "--json", out}) == 0);
    j = Json::parse(slurp(out));
    CHECK(j["monotone_verdicts"][1]["kind"] == "violated");
    CHECK(j["nondecreasing_on_grid"] == false);

    CHECK(run_cli({"track", d2, "--grid", "1", "--json", out}) == 2);  // GridTooSmall
    std::string crossing = tmp.file("x.json", R"({"lambda":[5,4],"mu":[3,1]})");
    CHECK(run_cli({"track", crossing, "--json", out}) == 3);  // NoCommonInterlacer
}

TEST_CASE("campaign subcommand: exit codes and deterministic reports") {
    TempDir tmp;
    std::string out = tmp.file("c.json");
    REQUIRE(run_cli({"campaign", "--theorem", "ncm", "--trials", "40", "--seed", "7", "--degree", "4",
                     "--json", out}) == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["counterexamples"] == Json::array());
    CHECK(j["trials"] == 40);
    CHECK(j["rng"] == kRngId);

    std::string out2 = tmp.file("c2.json");
    REQUIRE(run_cli({"campaign", "--theorem", "ncm", "--trials", "40", "--seed", "7", "--degree", "4",
                     "--json", out2}) == 0);
    Json a = Json::parse(slurp(out)), b = Json::parse(slurp(out2));
    a.erase("runtime_ms");
    b.erase("runtime_ms");
    CHECK(a == b);

    CHECK(run_cli({"campaign", "--theorem", "ncm", "--trials", "0", "--json", out}) == 2);
    CHECK(run_cli({"campaign", "--theorem", "bogus", "--trials", "5", "--json", out}) == 2);
    CHECK(run_cli({"campaign", "--theorem", "diffmaj", "--trials", "3", "--degree", "3",
                   "--json", out}) == 3);  // SpecInfeasible below degree 4
}

TEST_CASE("campaign diffmaj confirms all constructed instances") {
    TempDir tmp;
    std::string out = tmp.file("c.json");
    REQUIRE(run_cli({"campaign", "--theorem", "diffmaj", "--trials", "12", "--degree", "5", "--seed",
                     "3", "--json", out}) == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["stats"]["confirmed"] == 12);
    CHECK(j["counterexamples"] == Json::array());
}

TEST_CASE("check prints the canonical report to stdout by default") {
    TempDir tmp;
    std::string d2 = tmp.file("d2.json", R"({"lambda":[2,-2],"mu":[1,-1]})");
    std::ostringstream captured;
    auto* old = std::cout.rdbuf(captured.rdbuf());
    int rc = run_cli({"check", d2});
    std::cout.rdbuf(old);
    REQUIRE(rc == 0);
    Json j = Json::parse(captured.str());
    CHECK(j["nscm"]["status"] == "strong_majorization");
    CHECK(report::dump_canonical(j) == captured.str());
}
