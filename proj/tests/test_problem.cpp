#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "fixtures.hpp"
#include "slp/problem.hpp"

using namespace slp;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::invalid_argument;  // placeholder meaning "did not throw"
}

}  // namespace

TEST_CASE("validation accepts the reference problem") {
  ValidatedProblem p = validate_problem(fixtures::continuous());
  CHECK(p.rho() == 1.0);
  CHECK(p.p_at_one() == 1.0);
  CHECK(p.limits().p_h1_minus == 1.0);
  CHECK(p.limits().r_h2_plus == 1.0);
}

TEST_CASE("validation rejections") {
  SUBCASE("rho = 0") {
    ProblemSpec s = fixtures::continuous();
    s.alpha1 = s.alpha2 = 0.0;
    CHECK(code_of([&] { validate_problem(s); }) == errc::rho_not_positive);
  }
  SUBCASE("breakpoints out of order") {
    ProblemSpec s = fixtures::continuous();
    s.h1 = 0.5;
    s.h2 = 0.2;
    CHECK(code_of([&] { validate_problem(s); }) == errc::breakpoint_order);
  }
  SUBCASE("breakpoint outside the interval") {
    ProblemSpec s = fixtures::continuous();
    s.h2 = 1.5;
    CHECK(code_of([&] { validate_problem(s); }) == errc::breakpoint_order);
  }
  SUBCASE("beta both zero") {
    ProblemSpec s = fixtures::continuous();
    s.beta1 = s.beta2 = 0.0;
    CHECK(code_of([&] { validate_problem(s); }) == errc::beta_both_zero);
  }
  SUBCASE("zero transmission coefficient") {
    ProblemSpec s = fixtures::continuous();
    s.gamma[2] = 0.0;
    CHECK(code_of([&] { validate_problem(s); }) == errc::zero_transmission_coefficient);
    ProblemSpec t = fixtures::continuous();
    t.delta[1] = 0.0;
    CHECK(code_of([&] { validate_problem(t); }) == errc::zero_transmission_coefficient);
  }
  SUBCASE("non-positive coefficient") {
    ProblemSpec s = fixtures::continuous();
    s.p_pieces[1] = Expr::parse("x");  // changes sign on (h1, h2)
    CHECK(code_of([&] { validate_problem(s); }) == errc::non_positive_coefficient);
    ProblemSpec t = fixtures::continuous();
    t.r_pieces[0] = Expr::parse("0");
    CHECK(code_of([&] { validate_problem(t); }) == errc::non_positive_coefficient);
  }
}

TEST_CASE("validation is idempotent") {
  ValidatedProblem p = validate_problem(fixtures::p_jump());
  ValidatedProblem q = validate_problem(p.spec());
  CHECK(p.rho() == q.rho());
  CHECK(p.p_at_one() == q.p_at_one());
  CHECK(p.limits().p_h1_minus == q.limits().p_h1_minus);
  CHECK(p.limits().p_h1_plus == q.limits().p_h1_plus);
  CHECK(p.limits().p_h2_minus == q.limits().p_h2_minus);
  CHECK(p.limits().p_h2_plus == q.limits().p_h2_plus);
  CHECK(p.limits().r_h1_minus == q.limits().r_h1_minus);
  CHECK(p.limits().r_h2_plus == q.limits().r_h2_plus);
}

TEST_CASE("boundary forms") {
  // alpha = (0,-1), beta = (1,0): forms reproduce the endpoint data
  BoundaryForms f = boundary_forms(0.0, -1.0, 1.0, 0.0, 2.0, 3.0);
  CHECK(f.u_form == 2.0);
  CHECK(f.du_form == 3.0);

  f = boundary_forms(0.0, -1.0, 1.0, 0.0, 0.0, 0.0);
  CHECK(f.u_form == 0.0);
  CHECK(f.du_form == 0.0);

  f = boundary_forms(1.0, 0.0, 0.0, -1.0, 1.0, 1.0);
  CHECK(f.u_form == 1.0);
  CHECK(f.du_form == 1.0);
}

TEST_CASE("lagrange-type boundary identity on random data") {
  for (const ProblemSpec& spec : {fixtures::continuous(), fixtures::p_jump()}) {
    ValidatedProblem p = validate_problem(spec);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
      double u1 = dist(rng), u1p = dist(rng), v1 = dist(rng), v1p = dist(rng);
      BoundaryForms fu = boundary_forms(p, u1, u1p);
      BoundaryForms fv = boundary_forms(p, v1, v1p);
      double lhs = p.rho() * (u1 * v1p - u1p * v1);
      double rhs = fu.u_form * fv.du_form - fu.du_form * fv.u_form;
      double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
      CHECK(std::fabs(lhs - rhs) <= 1e-13 * scale);
    }
  }
}

TEST_CASE("transmission symmetry condition check") {
  SUBCASE("identity transmission, continuous p") {
    auto rep = symmetry_condition_check(validate_problem(fixtures::continuous()));
    CHECK(rep.holds);
    CHECK(rep.residuals[0] == 0.0);
    CHECK(rep.residuals[1] == 0.0);
  }
  SUBCASE("jump ratios without a p jump fail") {
    auto rep = symmetry_condition_check(validate_problem(fixtures::asymmetric()));
    CHECK_FALSE(rep.holds);
    CHECK(rep.residuals[0] == doctest::Approx(3.0 / 4.0));  // |4*1 - 1*1| / 4
    CHECK(rep.residuals[1] == 0.0);
  }
  SUBCASE("matching p jump compensates") {
    auto rep = symmetry_condition_check(validate_problem(fixtures::p_jump()));
    CHECK(rep.holds);  // 4 * 1 = 1 * 4 at h1
  }
}

TEST_CASE("piece lookup with side flags") {
  ValidatedProblem p = validate_problem(fixtures::continuous());
  CHECK(p.piece_of(-0.9) == 0);
  CHECK(p.piece_of(0.0) == 1);
  CHECK(p.piece_of(0.9) == 2);
  CHECK(p.piece_of(p.h1(), Side::minus) == 0);
  CHECK(p.piece_of(p.h1(), Side::plus) == 1);
  CHECK(p.piece_of(p.h2(), Side::minus) == 1);
  CHECK(p.piece_of(p.h2(), Side::plus) == 2);
}
