#include "torus/construct.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace torus::construct {

double default_epsilon(std::int64_t m, std::int64_t n, std::int64_t k) {
  return std::min(0.1, 1.0 / static_cast<double>(4 * k * m * n));
}

OddConstruction make_construction(std::int64_t m, std::int64_t n, std::int64_t k,
                                  double epsilon) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (epsilon < 0.0) epsilon = default_epsilon(m, n, k);
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("branch-quadrant analysis requires 0<eps<1");

  OddConstruction c;
  c.m = m;
  c.n = n;
  c.k = k;
  c.epsilon = epsilon;
  c.expected_count = 2 * m * n + 1;

  Rational rho_sq(n * n, m * m * (k * k - 1));
  c.torus = spectra::TorusShape::from_rho_sq(rho_sq);

  // Both summands must sit in the eigenspace of (km)^2: m^2 + n^2/rho^2 = k^2 m^2.
  if (Rational(m * m * (k * k - 1)) * rho_sq != Rational(n * n))
    throw std::logic_error("eigenvalue identity failed");

  Rational lambda(k * k * m * m);
  auto space = spectra::eigenspace_of(c.torus, lambda);
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(space.multiplicity());
  bool found_main = false, found_pert = false;
  for (int i = 0; i < space.multiplicity(); ++i) {
    const auto& bf = space.basis[static_cast<std::size_t>(i)];
    if (bf.family == spectra::Family::cc && bf.m == m && bf.n == n) {
      coeffs[i] = 1.0;
      found_main = true;
    }
    if (bf.family == spectra::Family::cc && bf.m == k * m && bf.n == 0) {
      coeffs[i] = epsilon;
      found_pert = true;
    }
  }
  if (!found_main || !found_pert)
    throw std::logic_error("construction terms missing from eigenspace basis");
  c.u = spectra::make_eigenfunction(c.torus, space, std::move(coeffs));
  return c;
}

XiPoint xi_transform(const spectra::TorusShape& torus, const spectra::TorusPoint& pt) {
  double rho_pi = spectra::kPi * torus.rho_value;
  if (!(pt.x1 > 0.0 && pt.x1 < spectra::kPi && pt.x2 > 0.0 && pt.x2 < rho_pi))
    throw std::invalid_argument("point outside R");
  return {-std::cos(pt.x1), -std::cos(pt.x2 / torus.rho_value)};
}

spectra::TorusPoint xi_inverse(const spectra::TorusShape& torus, const XiPoint& xi) {
  if (std::abs(xi.xi1) > 1.0 || std::abs(xi.xi2) > 1.0)
    throw std::invalid_argument("xi outside (-1,1)^2");
  return {std::acos(-xi.xi1), torus.rho_value * std::acos(-xi.xi2)};
}

std::vector<XiPoint> extract_zero_points(const spectra::Eigenfunction& u, int grid_n) {
  if (grid_n < 8) throw std::invalid_argument("zero-extraction grid too coarse");
  const double pi = spectra::kPi;
  const double rho_pi = pi * u.torus.rho_value;
  const int N = grid_n;

  // Sample the closure of R on an (N+1)^2 lattice.
  Eigen::MatrixXd vals(N + 1, N + 1);
  for (int i = 0; i <= N; ++i) {
    for (int j = 0; j <= N; ++j) {
      vals(i, j) = u(pi * i / N, rho_pi * j / N);
    }
  }

  std::vector<XiPoint> out;
  auto push_interior = [&](double x1, double x2) {
    double margin = 1e-12;
    if (x1 > margin && x1 < pi - margin && x2 > margin && x2 < rho_pi - margin)
      out.push_back(xi_transform(u.torus, {x1, x2}));
  };

  for (int i = 0; i <= N; ++i) {
    for (int j = 0; j <= N; ++j) {
      double v0 = vals(i, j);
      if (v0 == 0.0) push_interior(pi * i / N, rho_pi * j / N);
      // Edge in x1.
      if (i < N) {
        double v1 = vals(i + 1, j);
        if (v0 * v1 < 0.0) {
          double t = v0 / (v0 - v1);
          push_interior(pi * (i + t) / N, rho_pi * j / N);
        }
      }
      // Edge in x2.
      if (j < N) {
        double v1 = vals(i, j + 1);
        if (v0 * v1 < 0.0) {
          double t = v0 / (v0 - v1);
          push_interior(pi * i / N, rho_pi * (j + t) / N);
        }
      }
    }
  }
  return out;
}

double hyperbola_residual(const OddConstruction& c, const std::vector<XiPoint>& zero_points) {
  if (!c.is_base_case())
    throw std::invalid_argument("hyperbola equation applies to the (1,1,2) case only");
  if (zero_points.empty()) throw std::runtime_error("no nodal crossing found in R");
  double worst = 0.0;
  for (const auto& p : zero_points) {
    worst = std::max(worst,
                     std::abs(p.xi1 * p.xi2 + c.epsilon * (2.0 * p.xi1 * p.xi1 - 1.0)));
  }
  return worst;
}

QuadrantReport branch_quadrant_check(const OddConstruction& c, int grid_n, double tolerance) {
  if (!c.is_base_case())
    throw std::invalid_argument("branch-quadrant check applies to the (1,1,2) case only");
  auto points = extract_zero_points(c.u, grid_n);
  if (points.empty()) throw std::runtime_error("no nodal crossing found in R");
  QuadrantReport report;
  for (const auto& p : points) {
    if (std::abs(p.xi1) <= tolerance || std::abs(p.xi2) <= tolerance) {
      ++report.excluded;
      continue;
    }
    if (p.xi1 < 0.0 && p.xi2 < 0.0) ++report.lower_left;
    else if (p.xi1 > 0.0 && p.xi2 > 0.0) ++report.upper_right;
    else ++report.off_diagonal;
  }
  report.pass = report.lower_left > 0 && report.upper_right > 0 && report.off_diagonal == 0;
  return report;
}

double reflection_symmetry_check(const spectra::Eigenfunction& u, int sample_count,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d1(0.0, u.torus.period1());
  std::uniform_real_distribution<double> d2(0.0, u.torus.period2());
  double worst = 0.0;
  for (int s = 0; s < sample_count; ++s) {
    double x1 = d1(rng);
    double x2 = d2(rng);
    double base = u(x1, x2);
    worst = std::max(worst, std::abs(u(u.torus.period1() - x1, x2) - base));
    worst = std::max(worst, std::abs(u(x1, u.torus.period2() - x2) - base));
  }
  return worst;
}

OddCountReport verify_odd_count(const OddConstruction& c, const nodal::CountConfig& cfg) {
  auto result = nodal::count_nodal_domains(c.u, cfg);
  OddCountReport r;
  r.m = c.m;
  r.n = c.n;
  r.k = c.k;
  r.epsilon = c.epsilon;
  r.expected_count = c.expected_count;
  r.actual_count = result.count;
  r.resolution = result.resolution;
  for (auto s : result.decomposition.domain_signs) {
    if (s == nodal::Sign::Positive) ++r.positive_domains;
    else ++r.negative_domains;
  }
  int big = std::max(r.positive_domains, r.negative_domains);
  int small = std::min(r.positive_domains, r.negative_domains);
  r.pass = r.actual_count == r.expected_count && small == 1 &&
           big == static_cast<int>(2 * c.m * c.n);
  return r;
}

}  // namespace torus::construct
