#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "eistrace/cli.hpp"
#include "eistrace/jacobi.hpp"
#include "eistrace/json_io.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = eistrace::cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eisenstein expansion output") {
  auto r = run({"eis", "--weight", "4", "--terms", "5"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  auto expected = nlohmann::json::parse(
      R"({"coeffs":[[0,"1/120"],[1,"2"],[2,"18"],[3,"56"],[4,"146"],[5,"252"]],"denom":1,"trunc":6})");
  CHECK(j == expected);

  auto again = run({"eis", "--weight", "4", "--terms", "5"});
  CHECK(again.out == r.out);  // byte-identical across runs
}

TEST_CASE("trace output") {
  auto r = run({"trace", "--k", "0", "--phi", "crank", "--terms", "4"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["coeffs"] == nlohmann::json::parse(R"([[0,"1"]])"));

  // Signed and unsigned weights differ for odd k only.
  auto a = run({"trace", "--k", "1", "--phi", "lambda", "--terms", "6"});
  auto b = run({"trace", "--k", "1", "--phi", "crank", "--terms", "6"});
  CHECK(a.out != b.out);
  auto ja = nlohmann::json::parse(a.out);
  CHECK(ja["coeffs"][0] == nlohmann::json::parse(R"([0,"1/24"])"));  // -G_2/2 at q^0
}

TEST_CASE("crank moment routes give identical output") {
  auto d = run({"crank-moments", "--k", "2", "--method", "definition", "--terms", "8"});
  auto c = run({"crank-moments", "--k", "2", "--method", "corollary", "--terms", "8"});
  auto l = run({"crank-moments", "--k", "2", "--method", "lambert", "--terms", "8"});
  REQUIRE(d.code == 0);
  CHECK(d.out == c.out);
  CHECK(d.out == l.out);
}

TEST_CASE("theta quotient expansion round trips through json") {
  std::string divisor = "1@0,1/2;1@0,1/2+0,-1;-2@0,0";
  auto r = run({"jacobi", "--divisor", divisor, "--zorder", "3", "--terms", "6"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["divisor"] == divisor);
  auto expansion = eistrace::biseries_rational_from_json(j["expansion"]);
  CHECK(expansion.lo() == -2);

  // Rows reproduce the elliptic expansion: row(-2 + t) is the t-th divisor trace.
  eistrace::Divisor d = eistrace::Divisor::parse(divisor);
  for (long t = 0; t <= 5; ++t)
    CHECK(eistrace::agree(expansion.row(-2 + t),
                          eistrace::divisor_trace<eistrace::Rational>(t, d, 6, 1)));
}

TEST_CASE("verification suite exit codes") {
  auto ok = run({"verify", "--suite", "lemma42", "--terms", "12"});
  CHECK(ok.code == 0);
  auto j = nlohmann::json::parse(ok.out);
  CHECK(j["pass"] == true);
  CHECK(j["suite"] == "lemma42");
  CHECK(!j.contains("wall_ms"));

  // An insufficient radius produces an honest failure with both sides shown.
  auto fail = run({"verify", "--suite", "theorem1", "--radius", "4", "--terms", "10"});
  CHECK(fail.code == 1);
  auto jf = nlohmann::json::parse(fail.out);
  CHECK(jf["pass"] == false);
  REQUIRE(jf.contains("first_discrepancy"));
  CHECK(jf["first_discrepancy"].contains("lhs"));
  CHECK(jf["first_discrepancy"].contains("rhs"));

  auto timed = run({"verify", "--suite", "lemma42", "--terms", "10", "--timings"});
  CHECK(nlohmann::json::parse(timed.out).contains("wall_ms"));
}

TEST_CASE("text format") {
  auto r = run({"verify", "--suite", "lemma42", "--terms", "10", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("lemma42: PASS") != std::string::npos);

  auto e = run({"eis", "--weight", "2", "--terms", "2", "--format", "text"});
  CHECK(e.out.find("grid 1/1, complete below q^3") != std::string::npos);
  CHECK(e.out.find("q^0: -1/12") != std::string::npos);
  CHECK(e.out.find("q^2: 6") != std::string::npos);
}

TEST_CASE("partition dump") {
  auto r = run({"dump-partitions", "--k", "4"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 5);
  CHECK(j[0]["parts"] == nlohmann::json::parse("[1,1,1,1]"));
  CHECK(j[0]["crank"] == -4);
  CHECK(j[0]["z"] == "24");
  CHECK(j[4]["parts"] == nlohmann::json::parse("[4]"));
  CHECK(j[4]["crank"] == 4);

  auto empty = run({"dump-partitions", "--k", "0"});
  auto je = nlohmann::json::parse(empty.out);
  REQUIRE(je.size() == 1);
  CHECK(!je[0].contains("crank"));
  CHECK(je[0]["phi_lambda"] == "1");
}

TEST_CASE("usage errors exit with 2") {
  auto r = run({"eis", "--nope"});
  CHECK(r.code == 2);
  CHECK(!r.err.empty());

  auto noargs = run({});
  CHECK(noargs.code == 2);

  auto badsuite = run({"verify", "--suite", "nonsense"});
  CHECK(badsuite.code == 2);

  auto baddiv = run({"jacobi", "--divisor", "1@0,0+1,0"});
  CHECK(baddiv.code == 2);
  CHECK(baddiv.err.find("error:") != std::string::npos);

  // Conductor beyond the exact bound is rejected up front.
  auto bigcond = run({"jacobi", "--divisor", "1@0,1/13;-1@0,1/13"});
  CHECK(bigcond.code == 2);
  CHECK(bigcond.err.find("13") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("eis") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
}
