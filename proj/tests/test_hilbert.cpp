#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "slp/expansion.hpp"
#include "slp/hilbert.hpp"
#include "slp/spectrum.hpp"

using namespace slp;

TEST_CASE("inner product") {
  ValidatedProblem p = validate_problem(fixtures::continuous());

  SUBCASE("pure scalar elements see the boundary weight") {
    HilbertElement t = element_from_callable([](double) { return 0.0; }, 1.0);
    CHECK(inner_product(p, t, t) == doctest::Approx(1.0).epsilon(1e-14));  // p(1)/rho = 1
  }
  SUBCASE("constant functions integrate over the interval") {
    HilbertElement t = element_from_callable([](double) { return 1.0; }, 0.0);
    CHECK(inner_product(p, t, t) == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("zero element annihilates") {
    HilbertElement t = element_from_callable([](double x) { return std::sin(x); }, 2.0);
    CHECK(inner_product(p, t, zero_element()) == 0.0);
  }
  SUBCASE("r-weight enters the integral") {
    ProblemSpec s = fixtures::continuous();
    for (int i = 0; i < 3; ++i) s.r_pieces[i] = Expr::parse("1 + x^2");
    ValidatedProblem q = validate_problem(s);
    HilbertElement one = element_from_callable([](double) { return 1.0; }, 0.0);
    CHECK(inner_product(q, one, one) == doctest::Approx(2.0 + 2.0 / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("norms") {
  ValidatedProblem p = validate_problem(fixtures::continuous());
  CHECK(h_norm(p, element_from_callable([](double) { return 1.0; }, 0.0)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(h_norm(p, zero_element()) == 0.0);
  CHECK(h_norm(p, element_from_callable([](double) { return 0.0; }, 3.0)) ==
        doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("inner product is symmetric and bilinear, and satisfies Cauchy-Schwarz") {
  ValidatedProblem p = validate_problem(fixtures::p_jump());
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int trial = 0; trial < 20; ++trial) {
    double a0 = dist(rng), a1 = dist(rng), a2 = dist(rng);
    double b0 = dist(rng), b1 = dist(rng), b2 = dist(rng);
    HilbertElement t = element_from_callable(
        [=](double x) { return a0 + a1 * x + a2 * std::sin(2.0 * x); }, dist(rng));
    HilbertElement g = element_from_callable(
        [=](double x) { return b0 + b1 * std::cos(x) + b2 * x * x; }, dist(rng));
    double tg = inner_product(p, t, g);
    CHECK(tg == doctest::Approx(inner_product(p, g, t)).epsilon(1e-13));

    double c1 = dist(rng), c2 = dist(rng);
    HilbertElement combo = linear_combination({{c1, t}, {c2, g}});
    double lin = inner_product(p, combo, g);
    double expected = c1 * tg + c2 * inner_product(p, g, g);
    CHECK(lin == doctest::Approx(expected).epsilon(1e-11));

    CHECK(std::fabs(tg) <= h_norm(p, t) * h_norm(p, g) + 1e-12);
  }
}

TEST_CASE("quadrature never evaluates an integrand across a breakpoint") {
  ValidatedProblem p = validate_problem(fixtures::continuous());
  bool contained = true;
  HilbertElement probe;
  for (int piece = 0; piece < 3; ++piece) {
    double lo = p.piece_lo(piece), hi = p.piece_hi(piece);
    probe.f[piece] = [lo, hi, &contained](double x) {
      if (x < lo || x > hi) contained = false;
      return std::cos(5.0 * x);  // forces a few panel splits
    };
  }
  probe.scalar = 0.5;
  (void)inner_product(p, probe, probe);
  CHECK(contained);
}

TEST_CASE("apply_K") {
  ValidatedProblem p = validate_problem(fixtures::continuous());

  SUBCASE("affine functions are annihilated when q = 0") {
    // u = x + 1 with the correct scalar slot (u)'_1 = alpha1 u(1) - alpha2 u'(1) = 1
    HilbertElement u = element_from_callable([](double x) { return x + 1.0; }, 1.0,
                                             [](double) { return 1.0; });
    HilbertElement ku = apply_K(p, u);
    for (double x : {-0.7, 0.0, 0.6}) {
      int piece = p.piece_of(x);
      CHECK(std::fabs(ku.f[piece](x)) <= 1e-7);
    }
    CHECK(ku.scalar == doctest::Approx(-2.0).epsilon(1e-12));  // -(u)_1 = -(u(1)) = -2
  }
  SUBCASE("q = 1 shifts the image") {
    ProblemSpec s = fixtures::continuous();
    for (int i = 0; i < 3; ++i) s.q_pieces[i] = Expr::parse("1");
    ValidatedProblem q = validate_problem(s);
    HilbertElement u = element_from_callable([](double x) { return x + 1.0; }, 1.0,
                                             [](double) { return 1.0; });
    HilbertElement ku = apply_K(q, u);
    for (double x : {-0.7, 0.0, 0.6}) {
      int piece = q.piece_of(x);
      CHECK(ku.f[piece](x) == doctest::Approx(x + 1.0).epsilon(1e-7));
    }
  }
  SUBCASE("acts as multiplication by lambda on eigen-elements") {
    std::vector<Eigenpair> pairs = compute_eigenpairs(p, -5.0, 20.0, 500);
    REQUIRE(pairs.size() >= 3);
    for (std::size_t n = 0; n < 3; ++n) {
      HilbertElement phi = eigen_element(pairs[n]);
      HilbertElement kphi = apply_K(p, phi);
      HilbertElement diff = linear_combination({{1.0, kphi}, {-pairs[n].lambda, phi}});
      CHECK(h_norm(p, diff, QuadOptions{3e-8, 32, 20}) <= 1e-6);
    }
  }
  SUBCASE("wrong scalar slot raises DomainMismatch") {
    HilbertElement u = element_from_callable([](double x) { return x + 1.0; }, 0.25,
                                             [](double) { return 1.0; });
    try {
      apply_K(p, u);
      FAIL_CHECK("expected DomainMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == errc::domain_mismatch);
    }
  }
  SUBCASE("derivative-free elements fall back to finite differences") {
    HilbertElement u = element_from_callable([](double x) { return std::sin(x + 1.0); },
                                             boundary_forms(p, std::sin(2.0), std::cos(2.0)).du_form);
    HilbertElement ku = apply_K(p, u);
    // -u'' = sin(x+1)
    CHECK(ku.f[1](0.2) == doctest::Approx(std::sin(1.2)).epsilon(1e-5));
  }
}

TEST_CASE("domain membership checks") {
  ValidatedProblem p = validate_problem(fixtures::p_jump());
  std::mt19937_64 rng(11);

  SUBCASE("random domain elements pass") {
    for (int i = 0; i < 5; ++i)
      CHECK_NOTHROW(check_domain_membership(p, random_domain_element(p, rng)));
  }
  SUBCASE("violating the left boundary condition fails") {
    HilbertElement u = element_from_callable([](double) { return 1.0; }, 0.0,
                                             [](double) { return 0.0; });
    try {
      check_domain_membership(p, u);
      FAIL_CHECK("expected NotInDomain");
    } catch (const Error& e) {
      CHECK(e.code() == errc::not_in_domain);
    }
  }
  SUBCASE("violating a transmission condition fails") {
    // continuous sin is fine for the identity-transmission problem but not
    // for the jump problem
    ValidatedProblem cont = validate_problem(fixtures::continuous());
    auto fn = [](double x) { return std::sin(x + 1.0); };
    auto dfn = [](double x) { return std::cos(x + 1.0); };
    HilbertElement u = element_from_callable(fn, boundary_forms(cont, fn(1.0), dfn(1.0)).du_form, dfn);
    CHECK_NOTHROW(check_domain_membership(cont, u));
    u.scalar = boundary_forms(p, fn(1.0), dfn(1.0)).du_form;
    CHECK_THROWS_AS(check_domain_membership(p, u), const Error&);
  }
}

TEST_CASE("operator symmetry") {
  std::mt19937_64 rng(21);

  SUBCASE("residual is tiny when the symmetry conditions hold") {
    for (const auto& spec : {fixtures::continuous(), fixtures::p_jump()}) {
      ValidatedProblem p = validate_problem(spec);
      for (int i = 0; i < 3; ++i) {
        HilbertElement u = random_domain_element(p, rng);
        HilbertElement v = random_domain_element(p, rng);
        CHECK(symmetry_test(p, u, v) <= 1e-6);
      }
    }
  }
  SUBCASE("residual vanishes identically for u = v") {
    ValidatedProblem p = validate_problem(fixtures::continuous());
    HilbertElement u = random_domain_element(p, rng);
    CHECK(symmetry_test(p, u, u) == 0.0);
  }
  SUBCASE("negative control: violated conditions give a visible residual") {
    ValidatedProblem p = validate_problem(fixtures::asymmetric());
    double best = 1e300;
    for (int i = 0; i < 3; ++i) {
      HilbertElement u = random_domain_element(p, rng);
      HilbertElement v = random_domain_element(p, rng);
      best = std::min(best, symmetry_test(p, u, v));
    }
    CHECK(best >= 1e-2);
  }
}
