#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sbraid/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int s = sbraid::cli::run(args, o, e);
  return {s, o.str(), e.str()};
}

}  // namespace

TEST_CASE("parse") {
  auto r = run({"parse", "--n", "3", "s1   S2\tt1"});
  CHECK(r.status == sbraid::cli::kVerdict);
  CHECK(r.out == "s1 S2 t1\n");
  CHECK(run({"parse", "--n", "5", "e"}).out == "e\n");
  r = run({"parse", "--n", "3", "t9"});
  CHECK(r.status == sbraid::cli::kUsage);
  CHECK(r.err.find("index out of range at token 1") != std::string::npos);
  CHECK(run({"parse", "--n", "3", "x1"}).status == sbraid::cli::kUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).status == sbraid::cli::kUsage);
  CHECK(run({"bogus"}).status == sbraid::cli::kUsage);
  CHECK(run({"equal", "--n", "2", "s1"}).status == sbraid::cli::kUsage);
  CHECK(run({"nf", "--n", "2", "t1"}).status == sbraid::cli::kUsage);
  CHECK(run({"equal", "--calc", "Q", "--n", "2", "s1", "s1"}).status == sbraid::cli::kUsage);
  CHECK(run({"eta", "--calc", "SB", "--n", "2", "u1"}).status == sbraid::cli::kUsage);
}

TEST_CASE("equal verdicts and statuses") {
  auto r = run({"equal", "--calc", "SG", "--n", "2", "t1 u1", "e"});
  CHECK(r.status == sbraid::cli::kVerdict);
  CHECK(r.out.rfind("equal", 0) == 0);

  r = run({"equal", "--calc", "M", "--n", "2", "t1 u1", "u1 t1", "--max-len", "4"});
  CHECK(r.status == sbraid::cli::kVerdict);
  CHECK(r.out.rfind("distinct", 0) == 0);
  CHECK(r.out.find("max_length 4") != std::string::npos);

  r = run({"equal", "--calc", "M", "--n", "3", "s1 S1 t1", "t1 s1 S1", "--max-nodes", "3"});
  CHECK(r.status == sbraid::cli::kInconclusive);

  CHECK(run({"equal", "--calc", "B", "--n", "3", "s1 s2 s1", "s2 s1 s2"}).out.rfind("equal", 0) ==
        0);
  CHECK(run({"equal", "--calc", "SB", "--n", "3", "s1 s2 t1", "t2 s1 s2"}).out.rfind("equal",
                                                                                  0) == 0);
}

TEST_CASE("json output carries the schema") {
  auto r = run({"equal", "--calc", "M", "--n", "2", "s1 t1", "t1 s1", "--format", "json"});
  REQUIRE(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["verdict"] == "equal");
  CHECK(j["witness"].size() == 1);

  r = run({"inject", "--n", "2", "--max-len", "3", "--format", "json"});
  CHECK(r.status == 0);
  j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["violations"] == 0);
  CHECK(j["violation_samples"].empty());

  r = run({"diamond", "--n", "3", "t1 u1 t2 u2", "--format", "json"});
  CHECK(r.status == 0);
  j = json::parse(r.out);
  CHECK(j["peaks"].size() == 3);
}

TEST_CASE("other verbs") {
  CHECK(run({"perm", "--n", "3", "s1 s2 s1"}).out == "3,2,1\n");
  CHECK(run({"nf", "--n", "3", "s1 s2 s1"}).out == "D^1\n");
  CHECK(run({"eta", "--calc", "SB", "--n", "2", "t1"}).out == "-1·D^-1 + 1·D^1\n");
  CHECK(run({"reduce", "--n", "2", "u1 s1 t1"}).out.rfind("s1", 0) == 0);
  auto c = run({"closure", "--calc", "B", "--n", "3", "s1 s2 s1", "--max-len", "3",
                "--length-preserving"});
  CHECK(c.out.find("s2 s1 s2") != std::string::npos);
  CHECK(c.out.find("# 2 words") != std::string::npos);
}
