#pragma once

#include "slp/expr.hpp"
#include "slp/problem.hpp"

namespace fixtures {

// Identity transmission, constant unit coefficients, boundary condition
// u(1) + lambda u'(1) = 0. Everything about this problem has closed forms.
inline slp::ProblemSpec continuous() {
  slp::ProblemSpec s;
  s.h1 = -1.0 / 3.0;
  s.h2 = 1.0 / 3.0;
  s.alpha1 = 0.0;
  s.alpha2 = -1.0;
  s.beta1 = 1.0;
  s.beta2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    s.r_pieces[i] = slp::Expr::parse("1");
    s.p_pieces[i] = slp::Expr::parse("1");
    s.q_pieces[i] = slp::Expr::parse("0");
  }
  return s;
}

// p jumps 1 -> 4 at h1 with delta1 = delta2 = 2: the transmission symmetry
// conditions hold (4 * 1 = 1 * 4). No closed form; the discretization oracle
// is the reference.
inline slp::ProblemSpec p_jump() {
  slp::ProblemSpec s = continuous();
  s.delta = {2.0, 2.0, 1.0, 1.0};
  s.p_pieces[1] = slp::Expr::parse("4");
  s.p_pieces[2] = slp::Expr::parse("4");
  return s;
}

// Same jump ratios but p stays 1: violates the symmetry condition at h1.
// Negative control for every symmetry-dependent property.
inline slp::ProblemSpec asymmetric() {
  slp::ProblemSpec s = continuous();
  s.delta = {2.0, 2.0, 1.0, 1.0};
  return s;
}

}  // namespace fixtures
