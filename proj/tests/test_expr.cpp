#include <doctest.h>

#include <cmath>
#include <random>

#include "expr_testgen.hpp"
#include "slp/expr.hpp"

using slp::Expr;

TEST_CASE("arithmetic and precedence") {
  CHECK(Expr::parse("1+2*x").eval(3.0) == 7.0);
  CHECK(Expr::parse("2+3*4").eval(0.0) == 14.0);
  CHECK(Expr::parse("2*3^2").eval(0.0) == 18.0);
  CHECK(Expr::parse("2^3^2").eval(0.0) == 512.0);  // right-associative
  CHECK(Expr::parse("2-3-4").eval(0.0) == -5.0);   // left-associative
  CHECK(Expr::parse("2/4/2").eval(0.0) == 0.25);
  CHECK(Expr::parse("-2^2").eval(0.0) == -4.0);    // ^ binds above unary minus
  CHECK(Expr::parse("2^-1").eval(0.0) == 0.5);
  CHECK(Expr::parse("x^3").eval(-2.0) == -8.0);
  CHECK(Expr::parse("exp(0)").eval(0.0) == 1.0);
  CHECK(Expr::parse("abs(-3.5)").eval(0.0) == 3.5);
  CHECK(Expr::parse("sqrt(2)").eval(0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(Expr::parse("sin(x)^2 + cos(x)^2").eval(0.7) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(Expr::parse(" 1e2 + 2.5E-1 ").eval(0.0) == 100.25);
}

TEST_CASE("evaluation domain errors") {
  auto expect_domain_error = [](const char* text, double x) {
    try {
      Expr::parse(text).eval(x);
      FAIL_CHECK(text << " should have thrown");
    } catch (const slp::Error& e) {
      CHECK(e.code() == slp::errc::domain_error);
    }
  };
  expect_domain_error("1/x", 0.0);
  expect_domain_error("sqrt(x)", -1.0);
  expect_domain_error("(-2)^0.5", 0.0);
  expect_domain_error("0^-1", 0.0);
  CHECK(Expr::parse("1/x").eval(2.0) == 0.5);
}

TEST_CASE("print canonical form") {
  CHECK(Expr::parse("1+2*x").str() == "1 + 2 * x");
  CHECK(Expr::parse("-(x)").str() == "-x");
  CHECK(Expr::parse("-(x+1)").str() == "-(x + 1)");
  CHECK(Expr::parse("(2^3)^2").str() == "(2 ^ 3) ^ 2");
  CHECK(Expr::parse("2^(3^2)").str() == "2 ^ 3 ^ 2");
  CHECK(Expr::parse("x-(x-x)").str() == "x - (x - x)");
  CHECK(Expr::parse("sin( x )").str() == "sin(x)");
  Expr round = Expr::parse(Expr::parse("2^3^2").str());
  CHECK(round.eval(0.0) == 512.0);
}

TEST_CASE("round-trip property") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 1000; ++i) {
    auto model = expr_testgen::gen_tree(rng, 4);
    std::string text = expr_testgen::render(model);
    Expr parsed = Expr::parse(text);
    Expr reparsed = Expr::parse(parsed.str());
    REQUIRE(parsed.same_tree(reparsed));
    for (int j = 0; j < 16; ++j) {
      double x = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
      double a = 0.0, b = 0.0;
      bool threw_a = false, threw_b = false;
      try {
        a = parsed.eval(x);
      } catch (const slp::Error&) {
        threw_a = true;
      }
      try {
        b = reparsed.eval(x);
      } catch (const slp::Error&) {
        threw_b = true;
      }
      REQUIRE(threw_a == threw_b);
      if (!threw_a) {
        bool equal = (a == b) || (std::isnan(a) && std::isnan(b));
        REQUIRE(equal);
      }
    }
  }
}

TEST_CASE("malformed inputs report the offending offset") {
  for (const auto& mc : expr_testgen::malformed_corpus()) {
    CAPTURE(mc.text);
    try {
      Expr::parse(mc.text);
      FAIL_CHECK("no error for '" << mc.text << "'");
    } catch (const slp::SyntaxError& e) {
      CHECK(e.offset() == mc.offset);
    }
  }
}
