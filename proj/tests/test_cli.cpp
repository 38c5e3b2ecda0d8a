#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "markov/cli.hpp"
#include "markov/golden.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = markov::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return markov::default_fixture_dir() + "/" + name + ".json";
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

const char* kHalf = R"({"kind":"stoch","dom":["•"],"cod":["a","b","c"],"matrix":[["1/2"],["1/2"],["0"]]})";

}  // namespace

TEST_CASE("classify") {
  const Result r = run({"--format", "json", "classify", fixture("e_static")});
  CHECK(r.code == markov::cli::kOk);
  const auto doc = json_of(r);
  CHECK(doc["idempotent"] == true);
  CHECK(doc["static"] == true);
  CHECK(doc["strong"] == false);
  CHECK(doc["balanced"] == true);

  const auto m = json_of(run({"--format", "json", "classify", fixture("multi_e")}));
  CHECK(m["balanced"] == false);
  CHECK(m["witnesses"]["balanced"]["x"] == "0");

  const Result swap = run({"classify", "-"},
                          R"({"kind":"stoch","dom":["a","b"],"cod":["a","b"],"matrix":[[0,1],[1,0]]})");
  CHECK(swap.code == markov::cli::kPropertyFailed);
}

TEST_CASE("split") {
  const Result r = run({"--format", "json", "split", fixture("e_balanced4")});
  CHECK(r.code == markov::cli::kOk);
  const auto doc = json_of(r);
  CHECK(doc["classes"] == nlohmann::json::parse(R"([["1","2"],["3"]])"));
  CHECK(doc["transient"] == nlohmann::json::parse(R"(["4"])"));
  CHECK(run({"split", fixture("signed_e")}).code == markov::cli::kInputError);

  const auto multi = json_of(run({"--format", "json", "--max-size", "2", "split", fixture("multi_e")}));
  CHECK(multi["split"] == false);
}

TEST_CASE("validate and malformed input") {
  CHECK(run({"validate", "-"}, kHalf).code == markov::cli::kOk);
  const Result bad = run({"validate", "-"}, R"({"kind":"stoch","dom":["a"],"cod":["x"],"matrix":[["3/4"]]})");
  CHECK(bad.code == markov::cli::kPropertyFailed);
  const Result broken = run({"classify", "-"}, "{not json");
  CHECK(broken.code == markov::cli::kInputError);
  CHECK_FALSE(broken.err.empty());
  CHECK(run({"classify", "/nonexistent.json"}).code == markov::cli::kInputError);
  CHECK(run({"frobnicate"}).code == markov::cli::kInputError);
  CHECK(run({}).code == markov::cli::kInputError);
}

TEST_CASE("supports and absolute continuity") {
  const auto s = json_of(run({"--format", "json", "support", "-"}, kHalf));
  CHECK(s["support"] == nlohmann::json::parse(R"(["a","b"])"));
  CHECK(run({"split-support", "-"}, kHalf).code == markov::cli::kOk);

  CHECK(run({"abscont", fixture("e_strong"), fixture("e_strong")}).code == markov::cli::kOk);
  const Result no = run({"--format", "json", "abscont", fixture("e_static"), fixture("e_strong_iota")});
  CHECK(no.code == markov::cli::kInputError);
}

TEST_CASE("remaining subcommands") {
  const Result up = run({"--format", "json", "upsilon", "-"}, kHalf);
  CHECK(up.code == markov::cli::kOk);
  CHECK(json_of(up)["kind"] == "multi");

  const Result cs = run({"--format", "json", "cauchy-schwarz", fixture("multi_e"), fixture("multi_e"),
                         fixture("multi_e")});
  CHECK(cs.code == markov::cli::kPropertyFailed);
  CHECK(json_of(cs)["antecedent"] == true);

  const Result cs2 = run({"cauchy-schwarz", fixture("e_strong"), fixture("e_strong"), fixture("e_strong")});
  CHECK(cs2.code == markov::cli::kOk);

  const Result env = run({"--format", "json", "envelope-check", fixture("e_balanced4")});
  CHECK(env.code == markov::cli::kOk);
  const Result env_bad = run({"envelope-check", fixture("multi_e")});
  CHECK(env_bad.code == markov::cli::kPropertyFailed);
  // The copy formula stays coassociative on this small Multi cell.
  const Result karoubi = run({"--format", "json", "envelope-check", "--flavor", "karoubi", fixture("multi_e")});
  CHECK(karoubi.code == markov::cli::kOk);

  const std::string joint =
      R"j({"kind":"stoch","dom":["•"],"cod":["(0,0)","(0,1)","(1,0)","(1,1)"],"matrix":[["1/2"],[0],[0],["1/2"]]})j";
  const Result cond = run({"--format", "json", "conditional", "--left-size", "2", "-"}, joint);
  CHECK(cond.code == markov::cli::kOk);
  CHECK(run({"conditional", "--left-size", "3", "-"}, joint).code == markov::cli::kInputError);
}

TEST_CASE("ase subcommand") {
  const Result same = run({"--format", "json", "ase", fixture("e_strong"), fixture("e_strong_pi"),
                           fixture("e_strong_pi")});
  CHECK(same.code == markov::cli::kOk);
  CHECK(json_of(same)["ase"] == true);
}

TEST_CASE("worked-example suite") {
  const Result r = run({"verify-paper"});
  CHECK(r.code == markov::cli::kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);

  const auto doc = json_of(run({"--format", "json", "verify-paper"}));
  CHECK(doc["passed"] == true);
  CHECK(doc["checks"].size() > 10);

  CHECK(run({"--fixtures", "/nonexistent", "verify-paper"}).code != markov::cli::kOk);
}

TEST_CASE("reports are deterministic") {
  const auto a = run({"--seed", "9", "--format", "json", "envelope-check", fixture("e_static")});
  const auto b = run({"--seed", "9", "--format", "json", "envelope-check", fixture("e_static")});
  CHECK(a.out == b.out);
}
