#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <numbers>
#include <vector>

#include "torus/arith.hpp"
#include "torus/rational.hpp"

namespace torus::spectra {

inline constexpr double kPi = std::numbers::pi;

// The flat torus (R/2piZ) x (R/2 rho pi Z). rho^2 is held exactly as a
// rational; irrational mode carries only a floating rho and declares that
// every (m, n) pair yields a distinct eigenvalue.
struct TorusShape {
  Rational rho_sq{1, 1};
  bool irrational = false;
  double rho_value = 1.0;

  static TorusShape from_rho_sq(const Rational& rs);
  static TorusShape irrational_mode(double rho);

  double rho() const { return rho_value; }
  double period1() const { return 2.0 * kPi; }
  double period2() const { return 2.0 * kPi * rho_value; }
};

enum class Family : std::uint8_t { cc, cs, sc, ss };

const char* family_name(Family f);
Family family_from_name(const std::string& s);

// One trigonometric product eigenfunction trig(m x1) * trig(n x2 / rho).
struct BasisFunction {
  Family family = Family::cc;
  std::int64_t m = 0;
  std::int64_t n = 0;

  // sc/ss need m >= 1, cs/ss need n >= 1, otherwise identically zero.
  bool is_identically_zero() const {
    bool s1 = family == Family::sc || family == Family::ss;
    bool s2 = family == Family::cs || family == Family::ss;
    return (s1 && m == 0) || (s2 && n == 0);
  }

  double eval(const TorusShape& torus, double x1, double x2) const;

  friend bool operator==(const BasisFunction&, const BasisFunction&) = default;
};

struct Eigenspace {
  bool exact = true;          // rational mode: lambda is exact
  Rational lambda{0, 1};      // valid when exact
  double lambda_value = 0.0;  // always valid
  std::vector<arith::Representation> representations;
  std::vector<BasisFunction> basis;

  int multiplicity() const { return static_cast<int>(basis.size()); }
};

struct TorusPoint {
  double x1 = 0.0;
  double x2 = 0.0;
};

TorusPoint reduce_point(const TorusShape& torus, double x1, double x2);

struct Eigenfunction {
  TorusShape torus;
  Eigenspace space;
  Eigen::VectorXd coefficients;  // aligned with space.basis

  double operator()(double x1, double x2) const;
  double operator()(const TorusPoint& pt) const { return (*this)(pt.x1, pt.x2); }
};

// Builds an eigenfunction from one eigenspace; coefficient length must match
// the multiplicity and at least one entry must be non-zero.
Eigenfunction make_eigenfunction(const TorusShape& torus, const Eigenspace& space,
                                 Eigen::VectorXd coefficients);

// All eigenspaces with lambda <= lambda_max, sorted by eigenvalue. Rational
// mode merges eigenvalues exactly; irrational mode gives one eigenspace per
// index pair.
std::vector<Eigenspace> enumerate_eigenspaces(const TorusShape& torus, const Rational& lambda_max);

// Locates the eigenspace with the given exact eigenvalue (rational mode).
Eigenspace eigenspace_of(const TorusShape& torus, const Rational& lambda);

double evaluate(const Eigenfunction& u, const TorusPoint& pt);

// Values at lattice points (2pi i/n1, 2 rho pi j/n2); row i, column j.
Eigen::MatrixXd evaluate_grid(const Eigenfunction& u, int n1, int n2);

// Max over samples of |Delta_h u + lambda u| with the 5-point stencil.
double laplacian_residual(const Eigenfunction& u, const std::vector<TorusPoint>& samples,
                          double h);

// Signed lattice count #{(m,n) in Z^2 : m^2 + n^2 = lambda}; multiplicity
// oracle for the unit torus.
std::int64_t lattice_point_count(std::int64_t lambda);

}  // namespace torus::spectra
