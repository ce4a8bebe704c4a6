#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "pbtk/cli.hpp"

using namespace pbtk;
using pbtk::testing::golden_path;
using pbtk::testing::golden_text;
using pbtk::testing::TempDir;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("validate on the worked example reports a clean file") {
    CliResult r = run_cli({"validate", golden_path()});
    CHECK(r.exit_code == cli::exit_ok);
    CHECK(r.out == "0 errors, 0 warnings\n");
}

TEST_CASE("outcome on the worked example funds projects 4 and 5") {
    CliResult r = run_cli({"outcome", golden_path()});
    CHECK(r.exit_code == cli::exit_ok);
    CHECK(r.out.find("funded: 4 5") != std::string::npos);
    CHECK(r.out.find("spent: 2400") != std::string::npos);
    CHECK(r.out.find("remaining: 100") != std::string::npos);
}

TEST_CASE("outcome JSON is machine readable") {
    CliResult r = run_cli({"outcome", golden_path(), "--format", "json"});
    REQUIRE(r.exit_code == cli::exit_ok);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["variant"] == "skip_unaffordable");
    CHECK(doc["tie_break"] == "by_project_id_ascending");
    CHECK(doc["funded"] == nlohmann::json::array({"4", "5"}));
    CHECK(doc["spent"] == "2400");
    CHECK(doc["remaining"] == "100");
    CHECK(doc["scores"][0]["project_id"] == "4");
    CHECK(doc["scores"][0]["score"] == "6");
    CHECK(doc["skipped"].size() == 3);
}

TEST_CASE("outcome variants and tie-breaks are selectable") {
    CliResult r = run_cli({"outcome", golden_path(), "--variant", "stop", "--tie-break",
                           "cost"});
    CHECK(r.exit_code == cli::exit_ok);
    CHECK(r.out.find("stop_at_first_unaffordable") != std::string::npos);
    CHECK(r.out.find("by_cost_ascending_then_id") != std::string::npos);
}

TEST_CASE("validate flags violations with exit 1") {
    TempDir dir;
    std::string text = golden_text();
    text.replace(text.find("num_votes; 10"), 13, "num_votes; 9");
    auto path = dir.write("bad_count.pb", text);
    CliResult r = run_cli({"validate", path.string()});
    CHECK(r.exit_code == cli::exit_violations);
    CHECK(r.out.find("ERROR COUNT_VOTES meta:") != std::string::npos);
    CHECK(r.out.find("1 errors, 0 warnings") != std::string::npos);
}

TEST_CASE("validate reports parse failures with exit 2") {
    TempDir dir;
    auto path = dir.write("broken.pb", "not a pb file\n");
    CliResult r = run_cli({"validate", path.string()});
    CHECK(r.exit_code == cli::exit_data_error);
    CHECK(r.err.find("SECTION_MISSING") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("validate JSON mode reports diagnostics on the error stream") {
    TempDir dir;
    auto path = dir.write("broken.pb", "VOTES\nMETA\n");
    CliResult r = run_cli({"validate", path.string(), "--format", "json"});
    CHECK(r.exit_code == cli::exit_data_error);
    auto doc = nlohmann::json::parse(r.err.substr(0, r.err.rfind("pbtk:")));
    CHECK(doc["diagnostics"].size() > 0);
}

TEST_CASE("outcome refuses invalid instances with exit 2") {
    TempDir dir;
    std::string text = golden_text();
    text.replace(text.find("num_votes; 10"), 13, "num_votes; 9");
    auto path = dir.write("bad_count.pb", text);
    CliResult r = run_cli({"outcome", path.string()});
    CHECK(r.exit_code == cli::exit_data_error);
    CHECK(r.err.find("VALIDATION_REQUIRED") != std::string::npos);
}

TEST_CASE("info prints the summary in both formats") {
    CliResult text = run_cli({"info", golden_path()});
    CHECK(text.exit_code == cli::exit_ok);
    CHECK(text.out.find("vote length: min 1, max 3, mean 2.2") != std::string::npos);

    CliResult json = run_cli({"info", golden_path(), "--format", "json"});
    REQUIRE(json.exit_code == cli::exit_ok);
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["num_projects"] == 5);
    CHECK(doc["budget"] == "2500");
    CHECK(doc["total_project_cost"] == "5000");
    CHECK(doc["vote_length"]["mean"] == "2.2");
    CHECK(doc["category_counts"]["culture"] == 2);
}

TEST_CASE("canonicalize is idempotent at the byte level") {
    TempDir dir;
    auto once = dir.file("once.pb");
    auto twice = dir.file("twice.pb");
    CliResult first = run_cli({"canonicalize", golden_path(), "-o", once.string()});
    REQUIRE(first.exit_code == cli::exit_ok);
    CliResult second = run_cli({"canonicalize", once.string(), "-o", twice.string()});
    REQUIRE(second.exit_code == cli::exit_ok);
    CHECK(pbtk::testing::read_file(once.string()) ==
          pbtk::testing::read_file(twice.string()));
    CliResult to_stdout = run_cli({"canonicalize", once.string()});
    CHECK(to_stdout.out == pbtk::testing::read_file(once.string()));
}

TEST_CASE("generate writes byte-identical output for identical seeds") {
    CliResult a = run_cli({"generate", "--vote-type", "scoring", "--num-projects", "6",
                           "--num-votes", "9", "--seed", "11"});
    CliResult b = run_cli({"generate", "--vote-type", "scoring", "--num-projects", "6",
                           "--num-votes", "9", "--seed", "11"});
    CliResult c = run_cli({"generate", "--vote-type", "scoring", "--num-projects", "6",
                           "--num-votes", "9", "--seed", "12"});
    CHECK(a.exit_code == cli::exit_ok);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

TEST_CASE("generated mutations flow through validate") {
    TempDir dir;
    auto path = dir.file("mutated.pb");
    CliResult gen = run_cli({"generate", "--vote-type", "approval", "--num-projects", "5",
                             "--num-votes", "8", "--seed", "3", "--mutation", "VOTE_LEN",
                             "-o", path.string()});
    REQUIRE(gen.exit_code == cli::exit_ok);
    CliResult val = run_cli({"validate", path.string()});
    CHECK(val.exit_code == cli::exit_violations);
    CHECK(val.out.find("VOTE_LEN") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run_cli({}).exit_code == cli::exit_usage);
    CHECK(run_cli({"frobnicate", "x.pb"}).exit_code == cli::exit_usage);
    CHECK(run_cli({"validate"}).exit_code == cli::exit_usage);
    CHECK(run_cli({"validate", golden_path(), "--format", "xml"}).exit_code ==
          cli::exit_usage);
    CHECK(run_cli({"generate", "--vote-type", "approval", "--num-projects", "0",
                   "--num-votes", "5"})
              .exit_code == cli::exit_usage);
    CHECK(run_cli({"generate", "--vote-type", "approval", "--num-projects", "5",
                   "--num-votes", "5", "--mutation", "BOGUS"})
              .exit_code == cli::exit_usage);
}

TEST_CASE("a missing input file exits 66") {
    CliResult r = run_cli({"validate", "/no/such/file.pb"});
    CHECK(r.exit_code == cli::exit_no_input);
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("help goes to standard output with exit 0") {
    CliResult r = run_cli({"--help"});
    CHECK(r.exit_code == cli::exit_ok);
    CHECK(r.out.find("validate") != std::string::npos);
    CHECK(r.out.find("outcome") != std::string::npos);
}
