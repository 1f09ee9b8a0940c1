#pragma once

#include <cstdint>
#include <vector>

#include "torus/nodal.hpp"
#include "torus/rational.hpp"
#include "torus/spectra.hpp"

namespace torus::construct {

// Perturbed checkerboard u^cc_{m,n} + eps * u^cc_{km,0} on the torus with
// rho^2 = n^2 / (m^2 (k^2 - 1)), where both terms share the eigenvalue
// (km)^2 exactly. Expected nodal-domain count: 2mn + 1 for small eps.
struct OddConstruction {
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::int64_t k = 2;
  double epsilon = 0.1;
  spectra::TorusShape torus;
  spectra::Eigenfunction u;
  std::int64_t expected_count = 3;

  bool is_base_case() const { return m == 1 && n == 1 && k == 2; }
};

struct XiPoint {
  double xi1 = 0.0;
  double xi2 = 0.0;
};

// eps defaulting: min(0.1, 1/(4kmn)) when eps < 0 is passed.
OddConstruction make_construction(std::int64_t m, std::int64_t n, std::int64_t k,
                                  double epsilon);

double default_epsilon(std::int64_t m, std::int64_t n, std::int64_t k);

// (x1, x2) interior to R = (0, pi) x (0, rho pi) -> (-cos x1, -cos(x2/rho)).
XiPoint xi_transform(const spectra::TorusShape& torus, const spectra::TorusPoint& pt);
spectra::TorusPoint xi_inverse(const spectra::TorusShape& torus, const XiPoint& xi);

// Subpixel zero crossings of u along grid edges inside R, in xi coordinates.
// grid_n x grid_n samples over the closure of R.
std::vector<XiPoint> extract_zero_points(const spectra::Eigenfunction& u, int grid_n);

// Base case only: max |xi1 xi2 + eps (2 xi1^2 - 1)| over the points.
double hyperbola_residual(const OddConstruction& c, const std::vector<XiPoint>& zero_points);

struct QuadrantReport {
  std::int64_t lower_left = 0;
  std::int64_t upper_right = 0;
  std::int64_t off_diagonal = 0;
  std::int64_t excluded = 0;  // |xi1| or |xi2| below tolerance
  bool pass = false;
};

QuadrantReport branch_quadrant_check(const OddConstruction& c, int grid_n,
                                     double tolerance = 1e-6);

// Max reflection defect over seeded samples, both x1 -> 2pi - x1 and
// x2 -> 2 rho pi - x2.
double reflection_symmetry_check(const spectra::Eigenfunction& u, int sample_count,
                                 std::uint64_t seed = 42);

struct OddCountReport {
  std::int64_t m = 0, n = 0, k = 0;
  double epsilon = 0.0;
  std::int64_t expected_count = 0;
  int actual_count = 0;
  int resolution = 0;
  int positive_domains = 0;
  int negative_domains = 0;
  bool pass = false;
};

OddCountReport verify_odd_count(const OddConstruction& c, const nodal::CountConfig& cfg = {});

}  // namespace torus::construct
