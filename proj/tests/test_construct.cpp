#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "torus/construct.hpp"
#include "torus/nodal.hpp"

using namespace torus;
using namespace torus::spectra;
using namespace torus::construct;

TEST_CASE("make_construction") {
  SUBCASE("base case") {
    auto c = make_construction(1, 1, 2, 0.1);
    CHECK(c.torus.rho_sq == Rational(1, 3));
    CHECK(c.expected_count == 3);
    CHECK(c.u.space.lambda == Rational(4));
    CHECK(c.u(0.0, 0.0) == doctest::Approx(1.1));
  }
  SUBCASE("eigenvalue identity for a family of parameters") {
    for (std::int64_t m = 1; m <= 3; ++m) {
      for (std::int64_t n = 1; n <= 3; ++n) {
        for (std::int64_t k = 2; k <= 4; ++k) {
          auto c = make_construction(m, n, k, 0.05);
          // m^2 (k^2-1) rho^2 = n^2 exactly.
          CHECK(Rational(m * m * (k * k - 1)) * c.torus.rho_sq == Rational(n * n));
          CHECK(c.u.space.lambda == Rational(k * k * m * m));
        }
      }
    }
  }
  SUBCASE("rho > 1 is allowed") {
    auto c = make_construction(1, 2, 2, 0.05);
    CHECK(c.torus.rho_sq == Rational(4, 3));
    CHECK(c.torus.rho_value > 1.0);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(make_construction(1, 1, 1, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(make_construction(0, 1, 2, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(make_construction(1, 1, 2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_construction(1, 1, 2, 1.0), std::invalid_argument);
  }
}

TEST_CASE("xi transform") {
  auto torus = TorusShape::from_rho_sq(Rational(1, 3));
  double rho = torus.rho_value;

  auto xi = xi_transform(torus, {kPi / 2, rho * kPi / 2});
  CHECK(xi.xi1 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(xi.xi2 == doctest::Approx(0.0).epsilon(1e-12));

  xi = xi_transform(torus, {kPi / 3, rho * kPi / 3});
  CHECK(xi.xi1 == doctest::Approx(-0.5));
  CHECK(xi.xi2 == doctest::Approx(-0.5));

  CHECK_THROWS_AS(xi_transform(torus, {kPi + 0.1, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(xi_transform(torus, {0.0, 0.1}), std::invalid_argument);

  SUBCASE("round trip") {
    for (double a : {0.2, 0.9, 2.1, 3.0}) {
      for (double b : {0.1, 0.7, 1.5}) {
        TorusPoint pt{a, rho * b};
        auto x = xi_transform(torus, pt);
        auto back = xi_inverse(torus, x);
        CHECK(back.x1 == doctest::Approx(pt.x1).epsilon(1e-12));
        CHECK(back.x2 == doctest::Approx(pt.x2).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("hyperbola residual") {
  auto c = make_construction(1, 1, 2, 0.1);

  SUBCASE("exact hyperbola point has zero residual") {
    double eps = c.epsilon;
    double xi1 = eps;
    double xi2 = -eps * (2 * eps * eps - 1) / eps;
    CHECK(std::abs(xi1 * xi2 + eps * (2 * xi1 * xi1 - 1)) <= 1e-15);
  }
  SUBCASE("extracted points satisfy the equation, second order") {
    auto pts = extract_zero_points(c.u, 512);
    REQUIRE(!pts.empty());
    double r512 = hyperbola_residual(c, pts);
    CHECK(r512 <= 2e-3);
    double r1024 = hyperbola_residual(c, extract_zero_points(c.u, 1024));
    // Roughly 4x shrink per doubling.
    CHECK(r1024 <= r512 / 2.5);
  }
  SUBCASE("empty points rejected") {
    CHECK_THROWS_AS(hyperbola_residual(c, {}), std::runtime_error);
  }
  SUBCASE("base case only") {
    auto c2 = make_construction(2, 1, 2, 0.05);
    CHECK_THROWS_AS(hyperbola_residual(c2, {{0.0, 0.0}}), std::invalid_argument);
  }
}

TEST_CASE("branch quadrants") {
  // The zero set xi1 xi2 + eps (2 xi1^2 - 1) = 0 rearranges to
  // xi1 (xi2 + 2 eps xi1) = eps, so the xi1 > 0 branch crosses xi2 = 0 at
  // xi1 = 1/sqrt(2) and runs slightly below the axis beyond it (and
  // symmetrically for xi1 < 0). Both diagonal quadrants are populated, but
  // strict containment fails in the tails, where |xi2| < 2 eps |xi1|.
  for (double eps : {0.1, 0.5}) {
    auto c = make_construction(1, 1, 2, eps);
    auto report = branch_quadrant_check(c, 512);
    CHECK(report.lower_left > 0);
    CHECK(report.upper_right > 0);
    CHECK(report.off_diagonal > 0);
    CHECK_FALSE(report.pass);
  }

  SUBCASE("off-diagonal points sit only in the tails") {
    auto c = make_construction(1, 1, 2, 0.1);
    const double tol = 1e-6;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (const auto& p : extract_zero_points(c.u, 512)) {
      if (std::abs(p.xi1) <= tol || std::abs(p.xi2) <= tol) continue;
      bool diagonal = (p.xi1 < 0 && p.xi2 < 0) || (p.xi1 > 0 && p.xi2 > 0);
      if (!diagonal) {
        CHECK(std::abs(p.xi1) > inv_sqrt2 - 1e-3);
        CHECK(std::abs(p.xi2) < 2 * c.epsilon * std::abs(p.xi1) + 1e-3);
      }
    }
  }
}

TEST_CASE("reflection symmetry") {
  auto c = make_construction(1, 1, 2, 0.1);
  CHECK(reflection_symmetry_check(c.u, 1000) <= 1e-12);

  auto c2 = make_construction(2, 1, 2, 0.05);
  CHECK(reflection_symmetry_check(c2.u, 1000) <= 1e-12);

  // Negative control: an sc term breaks the x1 reflection.
  auto space = c.u.space;
  Eigen::VectorXd coeffs = c.u.coefficients;
  for (int i = 0; i < space.multiplicity(); ++i) {
    if (space.basis[static_cast<std::size_t>(i)] == BasisFunction{Family::sc, 1, 1})
      coeffs[i] = 0.3;
  }
  auto broken = make_eigenfunction(c.torus, space, std::move(coeffs));
  CHECK(reflection_symmetry_check(broken, 1000) > 0.1);
}

TEST_CASE("odd count verification") {
  SUBCASE("base case: 3 domains, 2 positive, 1 negative") {
    auto c = make_construction(1, 1, 2, 0.1);
    auto r = verify_odd_count(c);
    CHECK(r.actual_count == 3);
    CHECK(r.positive_domains == 2);
    CHECK(r.negative_domains == 1);
    CHECK(r.pass);
  }
  SUBCASE("(3,1,2) gives 7") {
    auto c = make_construction(3, 1, 2, 0.02);
    auto r = verify_odd_count(c);
    CHECK(r.actual_count == 7);
    CHECK(r.pass);
  }
  SUBCASE("symmetric positive domains of the base case have equal cell counts") {
    auto c = make_construction(1, 1, 2, 0.1);
    auto result = nodal::count_nodal_domains(c.u);
    const auto& d = result.decomposition;
    std::vector<std::int64_t> pos_cells;
    for (int lbl = 0; lbl < d.domain_count; ++lbl) {
      if (d.domain_signs[static_cast<std::size_t>(lbl)] == nodal::Sign::Positive)
        pos_cells.push_back(d.domain_cells[static_cast<std::size_t>(lbl)]);
    }
    REQUIRE(pos_cells.size() == 2);
    CHECK(pos_cells[0] == pos_cells[1]);
  }
}

TEST_CASE("epsilon defaults") {
  CHECK(default_epsilon(1, 1, 2) == doctest::Approx(0.1));
  CHECK(default_epsilon(3, 1, 2) == doctest::Approx(1.0 / 24.0));
  auto c = make_construction(3, 1, 2, -1.0);
  CHECK(c.epsilon == doctest::Approx(1.0 / 24.0));
}
