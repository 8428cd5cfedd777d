#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "schema_check.hpp"
#include "toroidal/report_json.hpp"

using toroidal::cli::run_cli;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("classify finds the unique survivor") {
    const CliRun result = run({"classify", "--json"});
    REQUIRE(result.exit_code == 0);

    const auto doc = nlohmann::json::parse(result.out);
    REQUIRE_FALSE(doc["survivor"].is_null());
    CHECK(doc["survivor"]["order"] == "eisenstein");
    CHECK(doc["survivor"]["slopes"] == nlohmann::json::array({"inf", "0", "1", "t"}));
    CHECK(doc["survivor"]["boundary_selfints"] == nlohmann::json::array({-1, -1, -1, -1}));
    CHECK(doc["survivor"]["c1bar_sq"] == 3);
    CHECK(doc["survivor"]["c2bar"] == 1);

    // Text mode lists the slopes in canonical order.
    const CliRun text = run({"classify"});
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("slopes   = {inf, 0, 1, t}") != std::string::npos);
    CHECK(text.out.find("survivor:") != std::string::npos);
}

TEST_CASE("classify --orders is a negative control") {
    const CliRun result = run({"classify", "--orders", "rational,gaussian", "--json"});
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["survivor"].is_null());
    CHECK(doc["steps"].size() > 10);

    const CliRun text = run({"classify", "--orders", "rational,gaussian"});
    CHECK(text.out.find("survivor: none") != std::string::npos);
}

TEST_CASE("classify JSON validates against the shipped schema") {
    std::ifstream schema_file(std::string(TOROIDAL_SOURCE_DIR) +
                              "/schema/classify_report.schema.json");
    REQUIRE(schema_file.good());
    nlohmann::json schema;
    schema_file >> schema;

    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"classify", "--json"},
          std::vector<std::string>{"classify", "--orders", "rational", "--json"}}) {
        const CliRun result = run(args);
        REQUIRE(result.exit_code == 0);
        CHECK(schema_check::validates(schema, nlohmann::json::parse(result.out)));
    }

    // A mangled report must not validate.
    auto broken = nlohmann::json::parse(run({"classify", "--json"}).out);
    broken["steps"][0]["verdict"] = "unknown";
    CHECK_FALSE(schema_check::validates(schema, broken));
}

TEST_CASE("torsion subcommand") {
    const CliRun result = run({"torsion", "eisenstein", "2-1t"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("count = 3") != std::string::npos);
    CHECK(result.out.find("(2/3, 2/3)") != std::string::npos);

    const CliRun json_result = run({"torsion", "eisenstein", "2-1t", "--json"});
    REQUIRE(json_result.exit_code == 0);
    const auto doc = nlohmann::json::parse(json_result.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 3);
    CHECK(doc[0] == nlohmann::json::array({"0/1", "0/1"}));

    // gamma = 0 is a domain error, not a crash.
    const CliRun zero = run({"torsion", "eisenstein", "0"});
    CHECK(zero.exit_code == 1);
    CHECK_FALSE(zero.err.empty());

    // An element of the wrong order is a domain error.
    const CliRun misparse = run({"torsion", "gaussian", "2-1t"});
    CHECK(misparse.exit_code == 1);
}

TEST_CASE("intersect subcommand") {
    const CliRun result = run({"intersect", "gaussian", "1", "i"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("number = 2") != std::string::npos);
    CHECK(result.out.find("(1/2, 1/2)") != std::string::npos);

    const CliRun json_result = run({"intersect", "gaussian", "1", "i", "--json"});
    const auto doc = nlohmann::json::parse(json_result.out);
    CHECK(doc["number"] == 2);
    REQUIRE(doc["points"].size() == 2);
    CHECK(doc["points"][1]["z"] == nlohmann::json::array({"1/2", "1/2"}));

    const CliRun inf = run({"intersect", "eisenstein", "0", "inf"});
    CHECK(inf.out.find("number = 1") != std::string::npos);

    // Equal slopes: the intersection number is 0 and there is no point list.
    const CliRun equal = run({"intersect", "eisenstein", "t", "t"});
    REQUIRE(equal.exit_code == 0);
    CHECK(equal.out.find("number = 0") != std::string::npos);
}

TEST_CASE("search subcommand") {
    const CliRun eis = run({"search", "eisenstein"});
    REQUIRE(eis.exit_code == 0);
    CHECK(eis.out.find("classes = 1") != std::string::npos);
    CHECK(eis.out.find("{inf, 0, 1, t}") != std::string::npos);

    for (const std::string order : {"gaussian", "rational"}) {
        const CliRun result = run({"search", order});
        REQUIRE(result.exit_code == 0);
        CHECK(result.out.find("classes = 0") != std::string::npos);
    }

    const CliRun json_result = run({"search", "eisenstein", "--json"});
    const auto doc = nlohmann::json::parse(json_result.out);
    CHECK(doc["classes"] == nlohmann::json::array({{"inf", "0", "1", "t"}}));
}

TEST_CASE("chern subcommand") {
    const CliRun result = run({"chern", "--base", "abelian", "--blowups", "1", "--boundary",
                               "-1,-1,-1,-1", "--json"});
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["c1bar_sq"] == 3);
    CHECK(doc["c2bar"] == 1);
    CHECK(doc["bmy_equality"] == true);
    CHECK(doc["noether"] == true);   // c1^2 + c2 = -1 + 1

    const CliRun text = run({"chern", "--base", "k3", "--blowups", "2"});
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("c2bar    = 26") != std::string::npos);
    CHECK(text.out.find("bmy      = false") != std::string::npos);

    const CliRun ruled = run({"chern", "--base", "ruled:2", "--blowups", "0", "--json"});
    CHECK(nlohmann::json::parse(ruled.out)["c2"] == -4);

    CHECK(run({"chern", "--base", "nonsense", "--blowups", "0"}).exit_code == 1);
    CHECK(run({"chern", "--base", "abelian", "--blowups", "1", "--boundary", "0"}).exit_code == 1);
}

TEST_CASE("rings subcommand") {
    const CliRun result = run({"rings", "eisenstein", "2-1t", "1+2t"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("norm(x)  = 3") != std::string::npos);
    CHECK(result.out.find("x*y      = 4+t") != std::string::npos);

    const CliRun units_only = run({"rings", "gaussian"});
    REQUIRE(units_only.exit_code == 0);
    CHECK(units_only.out.find("units: 1 i -1 -i") != std::string::npos);

    const CliRun quotient = run({"rings", "eisenstein", "3-3t", "2-1t", "--json"});
    const auto doc = nlohmann::json::parse(quotient.out);
    CHECK(doc["quotient"] != nlohmann::json(nullptr));

    CHECK(run({"rings", "eisenstein", "junk"}).exit_code == 1);
}

TEST_CASE("usage errors exit with 2 and help exits with 0") {
    CHECK(run({}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"torsion"}).exit_code == 2);                       // missing arguments
    CHECK(run({"torsion", "eisenstein", "2-1t", "--bogus"}).exit_code == 2);
    CHECK(run({"classify", "--orders", "klingon"}).exit_code == 1);   // bad order value

    const CliRun help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK_FALSE(help.out.empty());
    for (const std::string sub : {"rings", "torsion", "intersect", "search", "chern", "classify"}) {
        const CliRun sub_help = run({sub, "--help"});
        CHECK(sub_help.exit_code == 0);
        CHECK_FALSE(sub_help.out.empty());
    }
}

TEST_CASE("output is byte-identical across runs and honors --output") {
    const CliRun first = run({"classify", "--json"});
    const CliRun second = run({"classify", "--json"});
    CHECK(first.out == second.out);

    const std::string path = "cli_report_output.json";
    const CliRun to_file = run({"classify", "--json", "-o", path});
    REQUIRE(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    std::ifstream file(path);
    REQUIRE(file.good());
    std::stringstream contents;
    contents << file.rdbuf();
    CHECK(contents.str() == first.out);
    file.close();
    std::remove(path.c_str());

    const CliRun bad_path = run({"classify", "-o", "no_such_dir/report.txt"});
    CHECK(bad_path.exit_code == 1);
    CHECK(bad_path.err.find("no_such_dir") != std::string::npos);
}

TEST_CASE("emit_report text and JSON round-trip") {
    const auto report = toroidal::run_classification();
    const std::string text = toroidal::cli::emit_report(report, toroidal::cli::OutputFormat::Text);
    CHECK(text.find("steps:") != std::string::npos);
    CHECK(text.find("kappa=2/c1sq=1") != std::string::npos);
    CHECK(text.find("3*c2bar == c1bar^2: true") != std::string::npos);

    const std::string json_text =
        toroidal::cli::emit_report(report, toroidal::cli::OutputFormat::Json);
    CHECK(toroidal::report_from_json_string(json_text) == report);
}
