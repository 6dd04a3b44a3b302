#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "regsem/cli.hpp"

using json = nlohmann::json;

namespace {

std::string data(const std::string& name) {
  return std::string(REGSEM_DATA_DIR) + "/" + name;
}

struct Run {
  int rc;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = regsem::run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

json cli_json(std::vector<std::string> args) {
  args.push_back("--json");
  Run r = cli(std::move(args));
  REQUIRE_MESSAGE(!r.out.empty(), r.err);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("analyze") {
  Run r = cli({"analyze", data("lz2.sgp")});
  CHECK(r.rc == 0);
  CHECK(r.out.find("unambiguous: true") != std::string::npos);
  json j = cli_json({"analyze", data("lz2.sgp")});
  CHECK(j["order"] == 2);
  CHECK(j["unambiguous"] == true);
  CHECK(j["green"]["l_classes"].size() == 1);
  CHECK(j["green"]["r_classes"].size() == 2);
}

TEST_CASE("analyze reports an ambiguity witness") {
  json j = cli_json({"analyze", data("sl3z.sgp")});
  CHECK(j["unambiguous"] == false);
  CHECK(j["violation"]["side"] == "L");
  CHECK(j["violation"]["upper_left"] == "a");
  CHECK(j["violation"]["lower"] == "ab");
  CHECK(j["violation"]["upper_right"] == "b");
}

TEST_CASE("reduce") {
  json j = cli_json({"reduce", data("lz2.sgp"), "-w", "b' b", "--trace"});
  CHECK(j["normal_form"] == "a' a");
  CHECK(j["steps"] == 1);
  CHECK(j["trace"][0]["rule"] == "R23");
  CHECK(j["authoritative"] == true);
}

TEST_CASE("reduce is deterministic across runs") {
  auto a = cli({"reduce", data("b2.sgp"), "-w", "e12 e21 e11' e12", "--json",
                "--strategy", "random", "--seed", "7", "--trace"});
  auto b = cli({"reduce", data("b2.sgp"), "-w", "e12 e21 e11' e12", "--json",
                "--strategy", "random", "--seed", "7", "--trace"});
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("multiply") {
  json j = cli_json({"multiply", data("z2.sgp"), "-a", "g", "-b", "g' e"});
  CHECK(j["product"] == "e");
}

TEST_CASE("enumerate") {
  json j = cli_json({"enumerate", data("lz2.sgp")});
  CHECK(j["size"] == 10);
  CHECK(j["axiom_violations"].empty());
  CHECK(j["conjugate_consistency_violations"].empty());
  CHECK(j["j_structure"]["map_injective"] == true);
}

TEST_CASE("enumerate output re-ingests through analyze") {
  const std::string path = "cli_roundtrip_tmp.sgp";
  Run e = cli({"enumerate", data("b2.sgp"), "-o", path});
  REQUIRE(e.rc == 0);
  json j = cli_json({"analyze", path, "--max-order", "100"});
  CHECK(j["order"] == 17);
  CHECK(j["zero"] == "zero");
  std::remove(path.c_str());
}

TEST_CASE("verify") {
  json j = cli_json({"verify", data("z2.sgp"), "--maxlen", "3"});
  CHECK(j["status"] == "ok");
  CHECK(j["confluence"]["multiple_normal_forms"] == 0);
  CHECK(j["critical_pairs"]["divergent"].empty());
  CHECK(j["laws"]["violations"].empty());
  CHECK(j["termination"]["strategy_disagreements"] == 0);
}

TEST_CASE("verify fails with exit 1 on an ambiguous input") {
  std::ostringstream out, err;
  std::vector<std::string> args = {"verify", data("sl3z.sgp"), "--maxlen",
                                   "3", "--json"};
  int rc = regsem::run_cli(args, out, err);
  CHECK(rc == 1);
  json j = json::parse(out.str());
  CHECK(j["status"] == "fail");
  CHECK(j["confluence"]["multiple_normal_forms"] > 0);
}

TEST_CASE("exit codes") {
  SUBCASE("help is success") {
    CHECK(cli({"--help"}).rc == 0);
    CHECK(cli({"reduce", "--help"}).rc == 0);
  }
  SUBCASE("usage errors") {
    CHECK(cli({}).rc == 2);
    CHECK(cli({"bogus"}).rc == 2);
    CHECK(cli({"reduce", data("lz2.sgp")}).rc == 2);  // missing -w
    CHECK(cli({"analyze", "no_such_file.sgp"}).rc == 2);
    CHECK(cli({"reduce", data("lz2.sgp"), "-w", "nope"}).rc == 2);
    CHECK(cli({"reduce", data("lz2.sgp"), "-w", "a", "--strategy", "x"}).rc ==
          2);
  }
  SUBCASE("ambiguous input refused without --force") {
    Run r = cli({"reduce", data("sl3z.sgp"), "-w", "a b'"});
    CHECK(r.rc == 2);
    CHECK(r.err.find("ambiguous") != std::string::npos);
    json j = cli_json({"reduce", data("sl3z.sgp"), "-w", "a b'", "--force"});
    CHECK(j["normal_form"] == "0");
    CHECK(j["authoritative"] == false);
  }
  SUBCASE("step cap maps to exit 3") {
    Run r = cli({"reduce", data("b2.sgp"), "-w", "e11 e11 e11 e11",
                 "--cap-steps", "1"});
    CHECK(r.rc == 3);
    CHECK(r.err.find("error") != std::string::npos);
  }
}

TEST_CASE("representative overrides flow through the CLI") {
  const std::string path = "cli_reps_tmp.txt";
  {
    std::ofstream f(path);
    f << "R e21 e22\n";
  }
  Run r = cli({"reduce", data("b2.sgp"), "-w", "e11", "--reps", path});
  CHECK(r.rc == 2);  // incoherent without --force
  Run forced =
      cli({"reduce", data("b2.sgp"), "-w", "e11", "--reps", path, "--force"});
  CHECK(forced.rc == 0);
  CHECK(forced.out.find("authoritative: false") != std::string::npos);
  std::remove(path.c_str());
}
