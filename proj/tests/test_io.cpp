#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "markov/error.hpp"
#include "markov/io.hpp"
#include "markov/random.hpp"
#include "support/examples.hpp"

using namespace markov;
using examples::q;

namespace {

Error error_of(std::string_view text) {
  try {
    parse_kernel(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an error");
  return Error(ErrorCode::InvalidArgument, "");
}

}  // namespace

TEST_CASE("parsing documents") {
  const Kernel k = parse_kernel(
      R"({"kind":"stoch","dom":["a"],"cod":["x","y"],"matrix":[["1/2"],["1/2"]]})");
  CHECK(k.kind() == Kind::Stoch);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 1);
  CHECK(k(0, 0) == q(1, 2));

  const Kernel r = parse_kernel(
      R"({"kind":"stoch","dom":["a"],"cod":["x","y"],"matrix":[["2/4"],["1/2"]]})");
  CHECK(r(0, 0) == q(1, 2));
  CHECK(emit_kernel(r).find("\"2/4\"") == std::string::npos);
  CHECK(emit_kernel(r).find("\"1/2\"") != std::string::npos);

  const Kernel ints = parse_kernel(
      R"({"kind":"signed","dom":["a","b"],"cod":["x","y"],"matrix":[[2,"-1/3"],[-1,"4/3"]]})");
  CHECK(ints(0, 0) == 2);
  CHECK(ints(1, 1) == q(4, 3));

  const Kernel m = parse_kernel(
      R"({"kind":"multi","dom":["0","1"],"cod":["0","1"],"images":[["0","1"],["1"]]})");
  CHECK(kernel_equal(m, examples::multi_e()));
  const Kernel mm = parse_kernel(
      R"({"kind":"multi","dom":["0","1"],"cod":["0","1"],"matrix":[[1,0],[1,1]]})");
  CHECK(kernel_equal(mm, examples::multi_e()));
}

TEST_CASE("malformed documents") {
  const Error v = error_of(
      R"({"kind":"stoch","dom":["a"],"cod":["x","y"],"matrix":[["1/2"],["1/4"]]})");
  CHECK(v.code() == ErrorCode::ValidationError);
  CHECK_NOTHROW(parse_kernel_unchecked(
      R"({"kind":"stoch","dom":["a"],"cod":["x","y"],"matrix":[["1/2"],["1/4"]]})"));

  const Error bad_json = error_of(R"({"kind":"stoch",)");
  CHECK(bad_json.code() == ErrorCode::ParseError);
  CHECK(std::string(bad_json.what()).find("byte") != std::string::npos);

  const Error entry = error_of(
      R"({"kind":"stoch","dom":["a"],"cod":["x","y"],"matrix":[["1/2"],["half"]]})");
  CHECK(entry.code() == ErrorCode::ParseError);
  CHECK(std::string(entry.what()).find("matrix[1][0]") != std::string::npos);

  CHECK(error_of(R"({"kind":"quantum","dom":["a"],"cod":["x"],"matrix":[[1]]})").code() ==
        ErrorCode::ParseError);
  CHECK(error_of(R"({"kind":"stoch","dom":["a","a"],"cod":["x"],"matrix":[[1,1]]})").code() ==
        ErrorCode::ParseError);
  CHECK(error_of(R"({"kind":"stoch","dom":["a"],"cod":["x"],"matrix":[[1,0]]})").code() ==
        ErrorCode::ParseError);
  CHECK(error_of(R"({"kind":"stoch","dom":["a"],"cod":["x"],"matrix":[["1/0"]]})").code() ==
        ErrorCode::ParseError);
  CHECK(error_of(R"({"kind":"multi","dom":["a"],"cod":["x"],"images":[["y"]]})").code() ==
        ErrorCode::ParseError);
  CHECK(error_of(R"({"kind":"stoch","dom":["a"],"cod":["x"]})").code() == ErrorCode::ParseError);
  CHECK(error_of("[1,2]").code() == ErrorCode::ParseError);
}

TEST_CASE("emitted form") {
  const std::string text = emit_kernel(examples::static_e());
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["kind"] == "stoch");
  CHECK(doc["dom"] == nlohmann::json::array({"1", "2", "3"}));
  CHECK(doc["matrix"][0][2] == "1/2");
  CHECK(doc["matrix"][0][0] == "1");
  CHECK(text.find("\n  \"kind\"") != std::string::npos);

  const auto multi = nlohmann::json::parse(emit_kernel(examples::multi_chain3()));
  CHECK(multi["images"][1] == nlohmann::json::array({"1", "2"}));
  CHECK_FALSE(multi.contains("matrix"));
}

TEST_CASE("round trip on random documents") {
  Rng rng(401);
  for (int i = 0; i < 1000; ++i) {
    const Kind kind = static_cast<Kind>(i % 3);
    const Kernel k = random_kernel(kind, random_object(rng, 1, 5, "d"), random_object(rng, 1, 5, "c"), rng);
    const std::string text = emit_kernel(k);
    const Kernel back = parse_kernel(text);
    CHECK(kernel_equal(back, k));
    CHECK(emit_kernel(back) == text);
  }
}

TEST_CASE("reading input") {
  std::istringstream in("hello");
  CHECK(read_text("-", in) == "hello");
  try {
    read_text("/nonexistent/kernel.json", in);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}
