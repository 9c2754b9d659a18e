#include <doctest.h>

#include <cstdlib>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <cli.hpp>
#include <json.hpp>
#include <mv_text.hpp>

#include "support.hpp"

using namespace cliffexp;
using namespace cliffexp::testing;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run_cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv = {"cliffexp"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::size_t parse_error_column(std::string_view s) {
  try {
    text::parse_mv(s, Signature::Cl30);
  } catch (const text::ParseError& e) {
    return e.column();
  }
  return 0;
}

constexpr const char* kAppendix = "4,1,3,-5,10,9,-9,-4 / 17";

}  // namespace

TEST_CASE("parse both input forms") {
  const Multivector expected(Signature::Cl30, {4, 1, 3, -5, 10, 9, -9, -4});
  CHECK(text::parse_mv("4,1,3,-5,10,9,-9,-4", Signature::Cl30) == expected);
  CHECK(text::parse_mv("4 + 1*e1 + 3*e2 - 5*e3 + 10*e12 + 9*e13 - 9*e23 - 4*e123", Signature::Cl30) ==
        expected);
  CHECK(text::parse_mv(kAppendix, Signature::Cl30) == expected / 17.0);
  CHECK(text::parse_mv("e1 + e1 - 2*I", Signature::Cl21) ==
        Multivector(Signature::Cl21, {0, 2, 0, 0, 0, 0, 0, -2}));
  CHECK(text::parse_mv("-.5e-1*e23", Signature::Cl30)[Blade::E23] == -0.05);
}

TEST_CASE("parse errors carry a column") {
  CHECK(parse_error_column("1,2,3") == 6);
  CHECK(parse_error_column("1,2,3,4,5,6,7,8,9") == 16);
  CHECK(parse_error_column("1,2,3,4,5,6,7,8 / 0") == 19);
  CHECK(parse_error_column("1 + 2*e4") == 7);
  CHECK(parse_error_column("1 2") == 3);
  CHECK(parse_error_column("") == 1);
  try {
    text::parse_mv("3*e31", Signature::Cl30);
    FAIL("expected ParseError");
  } catch (const text::ParseError& e) {
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).find("e13") != std::string::npos);
  }
}

TEST_CASE("exact rendering round-trips") {
  Rng rng(71);
  for (int k = 0; k < 200; ++k) {
    const Multivector x = random_mv(rng, Signature::Cl12, -1e3, 1e3);
    CHECK(text::parse_mv(text::render_exact(x), Signature::Cl12) == x);
    CHECK(text::parse_mv(text::render_terms(x), Signature::Cl12) == x);
  }
}

TEST_CASE("truncated formatting cuts instead of rounding") {
  CHECK(text::format_truncated(0.28870899, 8) == "0.2887089");
  CHECK(text::format_truncated(1.38375809, 8) == "1.3837580");
  CHECK(text::format_truncated(0.28870899, 7) == "0.288708");  // leading zero counts
  CHECK(text::format_truncated(-0.0000000001, 3) == "0.00");
  CHECK(text::format_truncated(12345.678, 3) == "12345");
  CHECK(text::render_terms(Multivector(Signature::Cl30)) == "0");
  CHECK(text::render_terms(Multivector(Signature::Cl30, {0, -1, 0, 0, 0, 0, 0, 2.5})) == "-1*e1 + 2.5*e123");
}

TEST_CASE("eval prints the appendix rows") {
  const Run r = run_cli({"eval", "--algebra", "cl30", "--fn", "cos", "--mv", kAppendix, "--digits", "8"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "1.3837580 + 0.1075001*e1 + 0.0726490*e2 - 0.0516785*e3 - 0.2436586*e12 - 0.1984718*e13 + "
        "0.1707105*e23 + 0.4152926*e123\n");

  const Run s = run_cli({"eval", "--fn", "tanh", "--series", "--terms", "6", "--mv", kAppendix, "--digits", "8"});
  CHECK(s.status == 0);
  CHECK(s.out.rfind("0.7629316 + 0.3616722*e1", 0) == 0);
  CHECK(s.err.find("warning") != std::string::npos);  // tanh(6) is far from converged

  const Run det = run_cli({"eval", "--fn", "det", "--mv", "4,1,3,-5,10,9,-9,-4", "--digits", "0"});
  CHECK(det.out == "71129\n");
}

TEST_CASE("json output") {
  const Run r = run_cli({"eval", "--algebra", "cl21", "--fn", "exp", "--mv", "1*e1 + 1*e3", "--format", "json"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["algebra"] == "cl21");
  CHECK(j["basis"].size() == 8);
  CHECK(j["coeffs"] == nlohmann::json::array({1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0}));

  const Run c = run_cli({"compare", "--fn", "sinh", "--mv", kAppendix, "--terms", "6", "--format", "json"});
  REQUIRE(c.status == 0);
  const auto jc = nlohmann::json::parse(c.out);
  CHECK(jc["terms"] == 6);
  CHECK(jc["max_delta"].get<double>() > 0.0);
  CHECK(jc["max_delta"].get<double>() < 1e-3);
}

TEST_CASE("compare text layout") {
  const Run r = run_cli({"compare", "--fn", "exp", "--mv", kAppendix, "--terms", "30"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("closed     ") == 0);
  CHECK(r.out.find("\nseries(30) ") != std::string::npos);
  CHECK(r.out.find("\ndelta      ") != std::string::npos);
  CHECK(r.out.find("\nmax delta  ") != std::string::npos);
}

TEST_CASE("sqrt-center and exp-factors") {
  const Run r = run_cli({"eval", "--algebra", "cl21", "--fn", "sqrt-center", "--mv", "3 + 1*I", "--format", "json"});
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["roots"].size() == 4);

  const Run f = run_cli({"eval", "--fn", "exp-factors", "--mv", "e1"});
  REQUIRE(f.status == 0);
  CHECK(f.out.find("branch         minus-degenerate") != std::string::npos);
}

TEST_CASE("errors") {
  const Run bad_blade = run_cli({"eval", "--fn", "exp", "--mv", "1 + e31"});
  CHECK(bad_blade.status == 1);
  CHECK(bad_blade.err.find("column 5") != std::string::npos);

  const Run trig = run_cli({"eval", "--algebra", "cl03", "--fn", "sin", "--mv", "e1"});
  CHECK(trig.status == 1);
  CHECK(trig.err.find("--series") != std::string::npos);

  const Run singular = run_cli({"eval", "--algebra", "cl21", "--fn", "inv", "--mv", "e1 + e3"});
  CHECK(singular.status == 1);

  const Run order = run_cli({"eval", "--fn", "exp", "--series", "--terms", "61", "--mv", "e1"});
  CHECK(order.status != 0);

  CHECK(run_cli({"eval", "--algebra", "cl40", "--fn", "exp", "--mv", "1"}).status != 0);
  CHECK(run_cli({}).status != 0);
}

TEST_CASE("GA_EPS selects the degeneracy threshold") {
  const char* mv = "1*e1 + 1.0000001*e12";
  ::setenv("GA_EPS", "1e-3", 1);
  const Run loose = run_cli({"eval", "--fn", "exp-factors", "--mv", mv});
  ::setenv("GA_EPS", "1e-20", 1);
  const Run tight = run_cli({"eval", "--fn", "exp-factors", "--mv", mv});
  ::setenv("GA_EPS", "nope", 1);
  const Run bad = run_cli({"eval", "--fn", "exp", "--mv", mv});
  ::unsetenv("GA_EPS");
  CHECK(loose.out.find("both-degenerate") != std::string::npos);
  CHECK(tight.out.find("plus-degenerate") != std::string::npos);
  CHECK(bad.status == 1);
}

TEST_CASE("spin writes csv") {
  const Run r = run_cli({"spin", "--samples", "3", "--T", "10"});
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("t,b0,p_down\n0,-2,0\n5,0,", 0) == 0);
  CHECK(run_cli({"spin", "--sigma", "0"}).status != 0);
}
