#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cgt/cli.hpp"
#include "cgt/report.hpp"

using namespace cgt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval") {
  Run r = cli({"eval", "--group", "C3", "--word", "x1^2", "--assign", "x1=1"});
  CHECK(r.code == 0);
  CHECK(r.out == "2  (r^2)\n");

  // cycle-notation assignments on permutation groups
  r = cli({"eval", "--group", "S3", "--word", "[x1,x2]", "-a", "x1=(1 2)", "-a", "x2=(1 3)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(1 3 2)") != std::string::npos);

  r = cli({"--json", "eval", "--group", "C3", "--word", "x1^2", "--assign", "x1=1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"]["id"] == 2);

  // cycle notation is rejected on table-backed groups
  r = cli({"eval", "--group", "Q8", "--word", "x1", "-a", "x1=(1 2)"});
  CHECK(r.code == 2);
}

TEST_CASE("values, verbal, chain, width") {
  Run r = cli({"values", "--group", "S3", "--word", "[x1,x2]"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3 value(s): 0 2 5") != std::string::npos);

  r = cli({"--json", "values", "--group", "S3", "--word", "[x1,x2]", "--star"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 3);
  CHECK(j["starred"] == true);

  r = cli({"verbal", "--group", "D8", "--word", "[x1,x2]"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order 2") != std::string::npos);

  r = cli({"chain", "--group", "D8", "--word", "[x1,x2]", "-m", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("V1: order 1") != std::string::npos);

  r = cli({"width", "--group", "S4", "--word", "[x1,x2]"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = cli({"width", "--group", "A4", "--word", "x1^2"});
  CHECK(r.out == "2\n");
}

TEST_CASE("decompose") {
  Run r = cli({"decompose", "--group", "S3", "--word", "[x1,x2]", "-m", "1", "--tuple", "1,3,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verified") != std::string::npos);

  r = cli({"--json", "decompose", "--group", "D8", "--word", "[x1,x2]", "-m", "2", "--random",
           "3", "--seed", "7"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["verified"] == true);
    CHECK(j["factors"].size() <= 4);
    ++count;
  }
  CHECK(count == 3);

  // m = 0 is a usage error
  r = cli({"decompose", "--group", "S3", "--word", "[x1,x2]", "-m", "0", "--random", "1"});
  CHECK(r.code == 2);
}

TEST_CASE("verify named checks") {
  for (const char* check : {"conjugacy-bound", "central-exponent", "fc-embedding",
                            "bfc-embedding", "width-order-bound"}) {
    Run r = cli({"--json", "verify", check, "--group", "S3", "--word", "[x1,x2]", "-m", "1"});
    CAPTURE(check);
    CHECK(r.code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    std::string error;
    CHECK(validate_report_json(j, &error));
    CAPTURE(error);
    CHECK(j["pass"] == true);
  }

  Run r = cli({"verify", "axioms", "--group", "wr2(C3)"});
  CHECK(r.code == 0);

  r = cli({"verify", "decomposition", "--group", "S4", "--word", "[x1,x2]", "-m", "2",
           "--tuples", "25"});
  CHECK(r.code == 0);

  r = cli({"verify", "commutator-identity", "--group", "D8"});
  CHECK(r.code == 0);

  r = cli({"--json", "verify", "wreath-orbit", "--t", "1", "--t", "3", "-m", "1"});
  CHECK(r.code == 0);

  r = cli({"verify", "no-such-check", "--group", "S3"});
  CHECK(r.code == 2);
}

TEST_CASE("exit codes") {
  // word parse error: usage (2) with a caret under the offending position
  Run r = cli({"values", "--group", "S3", "--word", "x1^"});
  CHECK(r.code == 2);
  CHECK(r.err.find("^") != std::string::npos);

  // unknown group family: usage
  r = cli({"values", "--group", "Z9", "--word", "x1"});
  CHECK(r.code == 2);

  // budget exceeded: 3
  r = cli({"values", "--group", "S4", "--word", "[x1,x2,x3]", "--max-tuples", "100"});
  CHECK(r.code == 3);
  CHECK(r.err.find("budget") != std::string::npos);

  // order cap exceeded: 3
  r = cli({"group", "describe", "--group", "S9", "--max-order", "1000"});
  CHECK(r.code == 3);

  // inapplicable single identity instance: 4 (b = r has order 4 in D8)
  r = cli({"verify", "commutator-identity", "--group", "D8", "--y", "2", "--b", "1", "-m", "1"});
  CHECK(r.code == 4);
  CHECK(r.err.find("inapplicable") != std::string::npos);

  // missing subcommand
  r = cli({});
  CHECK(r.code == 2);
}

TEST_CASE("group describe and files") {
  Run r = cli({"group", "describe", "--group", "Q8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order 8") != std::string::npos);
  CHECK(r.out.find("center of order 2") != std::string::npos);

  std::ofstream("cli_group.json") << R"({"type":"perm","degree":3,)"
                                     R"("generators":[[1,0,2],[1,2,0]],"name":"fileS3"})";
  r = cli({"--json", "group", "describe", "--group", "@cli_group.json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["name"] == "fileS3");
  CHECK(j["order"] == 6);

  std::ofstream("cli_bad.json") << "{oops";
  r = cli({"group", "describe", "--group", "@cli_bad.json"});
  CHECK(r.code == 2);
  std::remove("cli_group.json");
  std::remove("cli_bad.json");
}

TEST_CASE("suite over a restricted battery") {
  std::vector<std::string> args = {"--json",   "suite", "--groups", "S3",     "--groups",
                                   "Q8",       "--words", "[x1,x2]", "--m-values", "0",
                                   "--m-values", "1"};
  Run r = cli(args);
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int reports = 0;
  bool saw_summary = false;
  while (std::getline(lines, line)) {
    auto j = nlohmann::ordered_json::parse(line);
    if (j.contains("check")) {
      std::string error;
      CHECK(validate_report_json(j, &error));
      CAPTURE(error);
      CHECK(j["pass"] == true);
      ++reports;
    } else if (j.contains("summary")) {
      saw_summary = true;
      CHECK(j["summary"]["all_pass"] == true);
      CHECK(j["summary"]["reports"] == reports);
    }
  }
  CHECK(reports > 10);
  CHECK(saw_summary);

  // identical bytes across runs
  Run again = cli(args);
  CHECK(again.out == r.out);

  // a tight budget surfaces skip records without failing the suite
  args.push_back("--max-tuples");
  args.push_back("30");
  Run tight = cli(args);
  CHECK(tight.code == 0);
  CHECK(tight.out.find("skipped") != std::string::npos);

  Run bad = cli({"suite", "--battery", "exotic"});
  CHECK(bad.code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
  auto args = std::vector<std::string>{"--json",  "verify", "fc-embedding", "--group",
                                       "wr2(C3)", "--word", "[x1,x2]",      "-m",
                                       "1"};
  Run a = cli(args);
  Run b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
