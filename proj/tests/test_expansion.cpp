#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "slp/expansion.hpp"

using namespace slp;

namespace {

struct Setup {
  ValidatedProblem problem = validate_problem(fixtures::continuous());
  std::vector<Eigenpair> pairs;

  Setup() {
    // window sized for 40+ eigenvalues; denser grid at the bottom of the
    // spectrum where the gaps are small
    pairs = compute_eigenpairs(problem, -5.0, 60.0, 600);
    std::vector<Eigenpair> high = compute_eigenpairs(problem, 60.0, 4200.0, 2100);
    pairs.insert(pairs.end(), high.begin(), high.end());
  }
};

const Setup& setup() {
  static Setup s;
  return s;
}

}  // namespace

TEST_CASE("fourier coefficients") {
  const auto& [p, pairs] = setup();
  REQUIRE(pairs.size() >= 6);

  SUBCASE("an eigen-element picks out its own index") {
    HilbertElement t = eigen_element(pairs[2]);
    std::vector<double> c = fourier_coefficients(p, pairs, t);
    for (std::size_t n = 0; n < c.size(); ++n)
      CHECK(std::fabs(c[n] - (n == 2 ? 1.0 : 0.0)) <= 1e-7);
  }
  SUBCASE("zero element has zero coefficients") {
    for (double cn : fourier_coefficients(p, pairs, zero_element())) CHECK(cn == 0.0);
  }
  SUBCASE("linear combinations map to coefficient vectors") {
    double a = 0.7, b = -1.3;
    HilbertElement t =
        linear_combination({{a, eigen_element(pairs[0])}, {b, eigen_element(pairs[1])}});
    std::vector<double> c = fourier_coefficients(p, pairs, t);
    CHECK(std::fabs(c[0] - a) <= 1e-7);
    CHECK(std::fabs(c[1] - b) <= 1e-7);
    for (std::size_t n = 2; n < c.size(); ++n) CHECK(std::fabs(c[n]) <= 1e-7);
  }
}

TEST_CASE("partial sums") {
  const auto& [p, pairs] = setup();
  HilbertElement t = eigen_element(pairs[0]);
  std::vector<double> c = fourier_coefficients(p, pairs, t);

  SUBCASE("zero terms gives the zero element") {
    HilbertElement s0 = partial_sum(pairs, c, 0);
    CHECK(h_norm(p, s0) == 0.0);
  }
  SUBCASE("one term reconstructs an eigen-element") {
    HilbertElement s1 = partial_sum(pairs, c, 1);
    HilbertElement diff = linear_combination({{1.0, t}, {-1.0, s1}});
    CHECK(h_norm(p, diff) <= 1e-7);
  }
  SUBCASE("residual norm is nonincreasing in N") {
    HilbertElement target = element_from_callable([](double x) { return x * x; }, 0.3);
    double prev = h_norm(p, target) + 1.0;
    for (std::size_t n : {std::size_t(2), std::size_t(5), std::size_t(10)}) {
      ExpansionResult res = expand(p, pairs, target, n);
      CHECK(res.residual_norm <= prev + 1e-10);
      prev = res.residual_norm;
    }
  }
  SUBCASE("bessel inequality") {
    HilbertElement target = element_from_callable([](double x) { return std::exp(x) - 1.0; }, -0.4);
    std::vector<double> cs = fourier_coefficients(p, pairs, target);
    double acc = 0.0;
    double bound = inner_product(p, target, target) + 1e-9;
    for (double cn : cs) {
      acc += cn * cn;
      CHECK(acc <= bound);
    }
  }
}

TEST_CASE("parseval and projection optimality on the span") {
  const auto& [p, pairs] = setup();
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  std::vector<std::pair<double, HilbertElement>> terms;
  std::vector<double> coeffs;
  for (std::size_t n = 0; n < 5; ++n) {
    coeffs.push_back(dist(rng));
    terms.emplace_back(coeffs.back(), eigen_element(pairs[n]));
  }
  HilbertElement t = linear_combination(terms);

  std::vector<double> c = fourier_coefficients(p, pairs, t);
  double sum_sq = 0.0;
  for (double cn : c) sum_sq += cn * cn;
  CHECK(inner_product(p, t, t) == doctest::Approx(sum_sq).epsilon(1e-8));

  HilbertElement best = partial_sum(pairs, c, 5);
  double best_err = h_norm(p, linear_combination({{1.0, t}, {-1.0, best}}));
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> perturbed = c;
    for (std::size_t n = 0; n < 5; ++n) perturbed[n] += 0.05 * dist(rng);
    double err =
        h_norm(p, linear_combination({{1.0, t}, {-1.0, partial_sum(pairs, perturbed, 5)}}));
    CHECK(best_err <= err + 1e-10);
  }
}

TEST_CASE("pairwise integral identity for distinct eigenfunctions") {
  const auto& [p, pairs] = setup();
  std::size_t m = std::min<std::size_t>(pairs.size(), 8);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      HilbertElement fi = eigen_element(pairs[i]);
      fi.scalar = 0.0;
      HilbertElement fj = eigen_element(pairs[j]);
      fj.scalar = 0.0;
      double integral = inner_product(p, fi, fj);
      double boundary = -(p.p_at_one() / p.rho()) * pairs[i].boundary_scalar *
                        pairs[j].boundary_scalar;
      CHECK(std::fabs(integral - boundary) <= 1e-7);
    }
}

TEST_CASE("boundary-scalar series") {
  const auto& [p, pairs] = setup();
  REQUIRE(pairs.size() >= 40);

  SUBCASE("target for the reference problem is 1") {
    CHECK(identity_38(p, pairs, 10).target == doctest::Approx(1.0));
  }
  SUBCASE("partial sums are nondecreasing and capped by the target") {
    double prev = 0.0;
    for (std::size_t n = 1; n <= 40; ++n) {
      double partial = identity_38(p, pairs, n).partial;
      CHECK(partial >= prev);
      CHECK(partial <= 1.0 + 1e-8);
      prev = partial;
    }
  }
  SUBCASE("doubling N shrinks the gap") {
    for (std::size_t n : {std::size_t(5), std::size_t(10), std::size_t(20)}) {
      double gap_n = 1.0 - identity_38(p, pairs, n).partial;
      double gap_2n = 1.0 - identity_38(p, pairs, 2 * n).partial;
      CHECK(std::fabs(gap_2n) < std::fabs(gap_n));
    }
  }
}

TEST_CASE("boundary series of the function parts") {
  const auto& [p, pairs] = setup();
  REQUIRE(pairs.size() >= 40);
  std::vector<double> grid;
  for (int i = 1; i < 60; ++i) grid.push_back(-1.0 + 2.0 * i / 60.0);

  SUBCASE("zero terms vanish") {
    BoundarySeriesCheck chk = identity_39(p, pairs, 0, grid);
    CHECK(chk.sup_abs == 0.0);
    CHECK(chk.l2_norm == 0.0);
  }
  SUBCASE("mean-square size decays from N=10 to N=40") {
    double l2_10 = identity_39(p, pairs, 10, grid).l2_norm;
    double l2_40 = identity_39(p, pairs, 40, grid).l2_norm;
    CHECK(l2_40 < l2_10);
  }
  SUBCASE("bessel-type bound: the sum is a scaled projection residual") {
    // expanding (0,1): the function part of the N-term sum is
    // (p(1)/rho) * sum (u_n)'_1 u_n, so its norm is bounded by ||(0,1)||
    double l2 = identity_39(p, pairs, 40, grid).l2_norm;
    double bound = h_norm(p, element_from_callable([](double) { return 0.0; }, 1.0));
    CHECK((p.p_at_one() / p.rho()) * l2 <= bound + 1e-9);
  }
}

TEST_CASE("function expansion") {
  const auto& [p, pairs] = setup();
  REQUIRE(pairs.size() >= 40);

  SUBCASE("coefficients of an eigenfunction's function part follow the boundary correction") {
    HilbertElement f = eigen_element(pairs[3]);
    f.scalar = 0.0;
    FunctionExpansion fe = expand_function(p, pairs, f, 6);
    for (std::size_t n = 0; n < 8; ++n) {
      double expected = (n == 3 ? 1.0 : 0.0) - (p.p_at_one() / p.rho()) *
                                                   pairs[3].boundary_scalar *
                                                   pairs[n].boundary_scalar;
      CHECK(std::fabs(fe.coefficients[n] - expected) <= 1e-7);
    }
    // consequence: the N-term function-part error equals the boundary-series
    // remainder scaled by the eigenfunction's boundary scalar
    std::vector<double> grid;
    for (int i = 1; i < 50; ++i) grid.push_back(-1.0 + 2.0 * i / 50.0);
    double series = identity_39(p, pairs, 20, grid).l2_norm;
    double expected_err = (p.p_at_one() / p.rho()) * std::fabs(pairs[3].boundary_scalar) * series;
    FunctionExpansion fe20 = expand_function(p, pairs, f, 20);
    CHECK(fe20.l2_error == doctest::Approx(expected_err).epsilon(1e-3));
  }
  SUBCASE("zero function expands to zero") {
    FunctionExpansion fe = expand_function(p, pairs, zero_element(), 10);
    for (double cn : fe.coefficients) CHECK(std::fabs(cn) <= 1e-12);
    CHECK(fe.l2_error <= 1e-10);
  }
  SUBCASE("constant load: error decreases from N=10 to N=40") {
    HilbertElement one = element_from_callable([](double) { return 1.0; }, 0.0);
    double e10 = expand_function(p, pairs, one, 10).l2_error;
    double e40 = expand_function(p, pairs, one, 40).l2_error;
    CHECK(e40 < e10);
  }
}

TEST_CASE("boundary leak of function-only elements") {
  const auto& [p, pairs] = setup();
  REQUIRE(pairs.size() >= 40);

  SUBCASE("zero function leaks nothing") {
    CHECK(boundary_leak_check(p, pairs, zero_element(), 20) == 0.0);
  }
  SUBCASE("leak decays from N=10 to N=40 for f = 1 and f = x") {
    for (const char* text : {"1", "x"}) {
      HilbertElement f = element_from_expr(Expr::parse(text), 0.0);
      double l10 = boundary_leak_check(p, pairs, f, 10);
      double l40 = boundary_leak_check(p, pairs, f, 40);
      CHECK(l40 < l10);
    }
  }
}
