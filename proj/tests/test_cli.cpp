#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = tripext::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(TRIPEXT_FIXTURE_DIR) + "/" + name; }

std::string scratch(const std::string& name, const std::string& body) {
  const std::string path = std::string(TRIPEXT_SCRATCH_DIR) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("chromatic index") {
    const Run r = run({"chromatic-index", "--n", "7", "--lambda", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "18\n");
  }

  TEST_CASE("extend prints the quota certificate") {
    const Run r = run({"extend", "--instance", fixture("k6_to_k9.json")});
    CHECK(r.code == 1);
    CHECK(r.out == "{\"kind\":\"QuotaSum\",\"sum\":54,\"edges\":45}\n");
  }

  TEST_CASE("extend result feeds verify") {
    const std::string inst = scratch(
        "three_to_nine.json", R"({"nX":3,"nY":9,"lambda":1,"coloring":{"k":28,"classes":[{"color":1,"edges":[[1,2,3]]}]}})");
    const Run r = run({"extend", "--instance", inst});
    REQUIRE(r.code == 0);
    const std::string produced = scratch("three_to_nine_out.json", r.out);
    const Run v = run({"verify", "--in", produced, "--one-factorization", "--lambda", "1"});
    CHECK(v.code == 0);
    CHECK(v.out.find("\"ok\":true") != std::string::npos);
  }

  TEST_CASE("factorize feeds verify") {
    const std::string out = std::string(TRIPEXT_SCRATCH_DIR) + "/nine.json";
    REQUIRE(run({"factorize", "--n", "9", "--lambda", "1", "--one-factorization", "-o", out}).code == 0);
    CHECK(run({"verify", "--in", out, "--one-factorization", "--lambda", "1"}).code == 0);
  }

  TEST_CASE("cube commands") {
    CHECK(run({"cube", "verify", "--in", fixture("order5_cube.json")}).code == 0);
    CHECK(run({"cube", "verify", "--in", fixture("order5_mixed.json")}).code == 0);
    const Run none = run({"cube", "search", "--n", "3"});
    CHECK(none.code == 1);
    CHECK(none.out.find("SearchExhausted") != std::string::npos);
    const std::string cube = std::string(TRIPEXT_SCRATCH_DIR) + "/cube5.json";
    REQUIRE(run({"cube", "search", "--n", "5", "--cube", "-o", cube}).code == 0);
    CHECK(run({"cube", "verify", "--in", cube}).code == 0);
  }

  TEST_CASE("usage errors") {
    const Run bogus = run({"--bogus"});
    CHECK(bogus.code == 2);
    CHECK_FALSE(bogus.err.empty());
    CHECK(run({"factorize"}).code == 2);
    CHECK(run({"verify", "--in", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"extend", "--instance", scratch("bad.json", "{not json")}).code == 2);
  }

  TEST_CASE("not divisible") {
    const Run r = run({"factorize", "--n", "7", "--one-factorization"});
    CHECK(r.code == 1);
    CHECK(r.out.find("NotDivisible") != std::string::npos);
  }

  TEST_CASE("oracle limits") {
    const Run capped = run({"oracle", "extend", "--instance", fixture("k6_to_k9.json")});
    CHECK(capped.code == 3);
    const Run listed = run({"oracle", "enumerate", "--n", "6"});
    CHECK(listed.code == 0);
    CHECK(listed.out.find("\"count\":1") != std::string::npos);
  }
}
