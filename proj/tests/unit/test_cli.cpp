#include "fixtures.hpp"

#include <disres/cli/parse.hpp>
#include <disres/cli/run.hpp>

#include <doctest.h>

using namespace disres;
using cli::parse_ratfun;
using fixture::P;
using fixture::Q;

namespace {
cli::CommandResult go(std::string cmd, std::vector<std::string> in, bool json = false) {
  cli::CommandRequest r;
  r.command = std::move(cmd);
  r.inputs = std::move(in);
  r.json = json;
  return cli::run(r);
}
}  // namespace

TEST_CASE("parser precedence and forms") {
  CHECK(parse_ratfun("(x+2)/(x*(x^2-1)^2*(x^2+2)^2)") == fixture::order2_input());
  CHECK(parse_ratfun("(x+2)/(x(x^2-1)^2(x^2+2)^2)") == fixture::order2_input());
  CHECK(parse_ratfun("1/(x^3(x + 2)^3(x + 3)(x^2 + 1)(x^2 + 4x + 5)^2)") == fixture::order3_input());
  CHECK(parse_ratfun("1/x - 1/x").is_zero());
  CHECK(parse_ratfun("x^-1") == RatFun(P({1}), P({0, 1})));
  CHECK(parse_ratfun("x^(-2)") == RatFun(P({1}), P({0, 0, 1})));
  CHECK(parse_ratfun("-x^2") == RatFun(P({0, 0, -1})));
  CHECK(parse_ratfun("1-2-3") == RatFun::constant(-4));
  CHECK(parse_ratfun("12/2/3") == RatFun::constant(2));
  CHECK(parse_ratfun("2x") == RatFun(P({0, 2})));
  CHECK(parse_ratfun("t^2+1", "t") == RatFun(P({1, 0, 1})));
  CHECK(parse_ratfun("\xE2\x88\x92" "1/36\xC2\xB7x") == RatFun(P({0, Q(-1, 36)})));
  CHECK(parse_ratfun("  ( x + 1 ) * ( x - 1 ) ") == RatFun(P({-1, 0, 1})));
}

TEST_CASE("parser errors") {
  try {
    parse_ratfun("(x+1");
    FAIL("expected an error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 4);
  }
  try {
    parse_ratfun("x + $");
    FAIL("expected an error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse_ratfun("x^y"), SyntaxError);
  CHECK_THROWS_AS(parse_ratfun(""), SyntaxError);
  try {
    parse_ratfun("y+1");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
  }
  try {
    parse_ratfun("1/(x-x)");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDenominator);
  }
}

TEST_CASE("render and parse round trip") {
  const std::vector<RatFun> fs{fixture::order2_input(), fixture::order3_input(), RatFun(P({Q(-1, 3), 0, 5}), P({7, 1, 0, 1})),
                               RatFun::constant(Q(-2, 9)), RatFun(), RatFun(P({0, -1}))};
  for (const auto& f : fs) CHECK(parse_ratfun(f.to_string()) == f);
}

TEST_CASE("commands") {
  CHECK(go("shiftset", {"x*(x+2)"}).out == "{2}\n");
  CHECK(go("summable", {"1/(x*(x+1))"}, true).out == "{\"summable\":true,\"certificate\":\"-1/x\"}\n");
  const auto d = go("dres", {"(x+2)/(x*(x^2-1)^2*(x^2+2)^2)"}, true);
  CHECK(d.exit_code == 0);
  CHECK(d.out ==
        "{\"residues\":[{\"k\":1,\"B\":[\"2/1\",\"2/1\",\"1/1\",\"1/1\"],\"D\":[\"31/648\",\"-11/432\",\"73/1296\"]},"
        "{\"k\":2,\"B\":[\"2/1\",\"2/1\",\"1/1\",\"1/1\"],\"D\":[\"1/24\",\"1/72\",\"1/36\"]}]}\n");
  CHECK(go("dres", {"(x+2)/(x*(x^2-1)^2*(x^2+2)^2)"}, true).out == d.out);

  const auto s = go("summable", {"x^2 + 1/(x*(x+1))"}, true);
  CHECK(s.out == "{\"summable\":true,\"certificate\":\"-1/x\",\"polynomial_part\":[\"0/1\",\"0/1\",\"1/1\"]}\n");
  CHECK(go("summable", {"1/x"}, true).out == "{\"summable\":false}\n");
  CHECK(go("telescope", {"1/x^2", "1/x"}).out == "W generators:\n  (1, D)\n");
  CHECK(go("vspace", {"1/x", "1/(x+1)"}, true).out ==
        "{\"basis\":[[\"1/1\",\"-1/1\"]],\"galois_defining_equations\":[\"eta_1 - eta_2 = 0\"]}\n");
  CHECK(go("galois-diag", {"x", "x+1"}, true).out ==
        "{\"lattice\":[[1,-1]],\"witnesses\":[{\"p\":\"1/x\",\"eps\":\"1/1\"}],\"relations\":[[1]],\"group\":[[1,-1]]}\n");
  CHECK(go("hermite", {"1/x^2"}).out == "f_1 = 0\nf_2 = 1/x\n");
  CHECK(go("reduce", {"1/x - 1/(x+3)"}).out == "reduced = 0\ncertificate = (-3*x^2 - 6*x - 2)/(x^3 + 3*x^2 + 2*x)\n");
}

TEST_CASE("error mapping") {
  const auto a = go("dres", {"1/(x"}, true);
  CHECK(a.exit_code == 2);
  CHECK(a.out.empty());
  CHECK(a.err == "{\"error\":\"SyntaxError\",\"detail\":\"expected ')' at offset 4\",\"offset\":4}\n");
  CHECK(go("dres", {"1/y"}).exit_code == 2);
  CHECK(go("dres", {"x^2"}).exit_code == 3);
  CHECK(go("shiftset", {"1/x"}).exit_code == 3);
  CHECK(go("dres", {"1/x", "1/x"}).exit_code == 2);
  CHECK(go("nope", {"x"}).exit_code == 2);
  const auto b = go("dresplus", {"1/x", "0"}, true);
  CHECK(b.exit_code == 3);
  CHECK(b.err.find("\"index\":1") != std::string::npos);
  CHECK(go("galois-diag", {"0"}).exit_code == 3);
}
