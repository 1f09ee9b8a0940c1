#include "torus/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace torus::spectra {

TorusShape TorusShape::from_rho_sq(const Rational& rs) {
  if (rs.num <= 0) throw std::invalid_argument("rho^2 must be positive");
  TorusShape t;
  t.rho_sq = rs;
  t.irrational = false;
  t.rho_value = std::sqrt(rs.value());
  return t;
}

TorusShape TorusShape::irrational_mode(double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  TorusShape t;
  t.irrational = true;
  t.rho_value = rho;
  t.rho_sq = Rational(0, 1);
  return t;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::cc: return "cc";
    case Family::cs: return "cs";
    case Family::sc: return "sc";
    case Family::ss: return "ss";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "cc") return Family::cc;
  if (s == "cs") return Family::cs;
  if (s == "sc") return Family::sc;
  if (s == "ss") return Family::ss;
  throw std::invalid_argument("unknown basis family '" + s + "'");
}

double BasisFunction::eval(const TorusShape& torus, double x1, double x2) const {
  double a1 = static_cast<double>(m) * x1;
  double a2 = static_cast<double>(n) * x2 / torus.rho_value;
  switch (family) {
    case Family::cc: return std::cos(a1) * std::cos(a2);
    case Family::cs: return std::cos(a1) * std::sin(a2);
    case Family::sc: return std::sin(a1) * std::cos(a2);
    case Family::ss: return std::sin(a1) * std::sin(a2);
  }
  return 0.0;
}

TorusPoint reduce_point(const TorusShape& torus, double x1, double x2) {
  double p1 = torus.period1();
  double p2 = torus.period2();
  double r1 = std::fmod(x1, p1);
  double r2 = std::fmod(x2, p2);
  if (r1 < 0) r1 += p1;
  if (r2 < 0) r2 += p2;
  return {r1, r2};
}

double Eigenfunction::operator()(double x1, double x2) const {
  double acc = 0.0;
  for (int k = 0; k < coefficients.size(); ++k) {
    acc += coefficients[k] * space.basis[static_cast<std::size_t>(k)].eval(torus, x1, x2);
  }
  return acc;
}

Eigenfunction make_eigenfunction(const TorusShape& torus, const Eigenspace& space,
                                 Eigen::VectorXd coefficients) {
  if (coefficients.size() != static_cast<Eigen::Index>(space.basis.size()))
    throw std::invalid_argument("coefficient count must equal multiplicity");
  if (coefficients.lpNorm<Eigen::Infinity>() == 0.0)
    throw std::invalid_argument("all coefficients are zero");
  return Eigenfunction{torus, space, std::move(coefficients)};
}

namespace {

std::vector<BasisFunction> nonzero_families(std::int64_t m, std::int64_t n) {
  std::vector<BasisFunction> out;
  for (Family f : {Family::cc, Family::cs, Family::sc, Family::ss}) {
    BasisFunction b{f, m, n};
    if (!b.is_identically_zero()) out.push_back(b);
  }
  return out;
}

}  // namespace

std::vector<Eigenspace> enumerate_eigenspaces(const TorusShape& torus,
                                              const Rational& lambda_max) {
  if (lambda_max.num <= 0) throw std::invalid_argument("lambda_max must be positive");

  std::vector<Eigenspace> out;

  if (torus.irrational) {
    double lmax = lambda_max.value();
    double inv_rho_sq = 1.0 / (torus.rho_value * torus.rho_value);
    for (std::int64_t m = 0; static_cast<double>(m) * static_cast<double>(m) <= lmax; ++m) {
      for (std::int64_t n = 0;; ++n) {
        double lam = static_cast<double>(m * m) + static_cast<double>(n * n) * inv_rho_sq;
        if (lam > lmax) break;
        Eigenspace s;
        s.exact = false;
        s.lambda_value = lam;
        s.representations = {{m, n}};
        s.basis = nonzero_families(m, n);
        out.push_back(std::move(s));
      }
    }
    std::sort(out.begin(), out.end(),
              [](const Eigenspace& a, const Eigenspace& b) {
                return a.lambda_value < b.lambda_value;
              });
    return out;
  }

  // Rational mode: lambda = (a m^2 + b n^2)/a with rho^2 = a/b. All
  // eigenvalues share the denominator a, so the scaled integer key
  // S = a m^2 + b n^2 compares and merges them exactly.
  std::int64_t a = torus.rho_sq.num;
  std::int64_t b = torus.rho_sq.den;
  std::map<std::int64_t, Eigenspace> spaces;
  for (std::int64_t m = 0; Rational(m * m) <= lambda_max; ++m) {
    for (std::int64_t n = 0; Rational(a * m * m + b * n * n, a) <= lambda_max; ++n) {
      std::int64_t key = a * m * m + b * n * n;
      Eigenspace& s = spaces[key];
      if (s.basis.empty()) {
        s.exact = true;
        s.lambda = Rational(key, a);
        s.lambda_value = s.lambda.value();
      }
      s.representations.push_back({m, n});
      for (auto& bf : nonzero_families(m, n)) s.basis.push_back(bf);
    }
  }
  out.reserve(spaces.size());
  for (auto& [key, s] : spaces) out.push_back(std::move(s));
  return out;
}

Eigenspace eigenspace_of(const TorusShape& torus, const Rational& lambda) {
  if (torus.irrational)
    throw std::invalid_argument("eigenspace_of requires a rational-mode torus");
  auto spaces = enumerate_eigenspaces(torus, lambda == Rational(0) ? Rational(1) : lambda);
  for (auto& s : spaces) {
    if (s.lambda == lambda) return s;
  }
  throw std::invalid_argument("no eigenspace with lambda = " + lambda.str());
}

double evaluate(const Eigenfunction& u, const TorusPoint& pt) { return u(pt.x1, pt.x2); }

Eigen::MatrixXd evaluate_grid(const Eigenfunction& u, int n1, int n2) {
  if (n1 < 4 || n2 < 4) throw std::invalid_argument("grid resolution below 4");
  const auto& basis = u.space.basis;
  std::size_t nb = basis.size();

  // Per-basis 1D trig tables; the per-cell accumulation below reproduces
  // evaluate() bit for bit (same expressions, same summation order).
  std::vector<std::vector<double>> t1(nb, std::vector<double>(static_cast<std::size_t>(n1)));
  std::vector<std::vector<double>> t2(nb, std::vector<double>(static_cast<std::size_t>(n2)));
  double p1 = u.torus.period1();
  double p2 = u.torus.period2();
  for (std::size_t k = 0; k < nb; ++k) {
    const BasisFunction& bf = basis[k];
    bool sin1 = bf.family == Family::sc || bf.family == Family::ss;
    bool sin2 = bf.family == Family::cs || bf.family == Family::ss;
    for (int i = 0; i < n1; ++i) {
      double a1 = static_cast<double>(bf.m) * (p1 * i / n1);
      t1[k][static_cast<std::size_t>(i)] = sin1 ? std::sin(a1) : std::cos(a1);
    }
    for (int j = 0; j < n2; ++j) {
      double a2 = static_cast<double>(bf.n) * (p2 * j / n2) / u.torus.rho_value;
      t2[k][static_cast<std::size_t>(j)] = sin2 ? std::sin(a2) : std::cos(a2);
    }
  }

  Eigen::MatrixXd grid(n1, n2);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < nb; ++k) {
        acc += u.coefficients[static_cast<Eigen::Index>(k)] *
               (t1[k][static_cast<std::size_t>(i)] * t2[k][static_cast<std::size_t>(j)]);
      }
      grid(i, j) = acc;
    }
  }
  return grid;
}

double laplacian_residual(const Eigenfunction& u, const std::vector<TorusPoint>& samples,
                          double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  double lambda = u.space.lambda_value;
  double worst = 0.0;
  for (const auto& pt : samples) {
    double center = u(pt.x1, pt.x2);
    double lap = (u(pt.x1 + h, pt.x2) + u(pt.x1 - h, pt.x2) + u(pt.x1, pt.x2 + h) +
                  u(pt.x1, pt.x2 - h) - 4.0 * center) /
                 (h * h);
    worst = std::max(worst, std::abs(lap + lambda * center));
  }
  return worst;
}

std::int64_t lattice_point_count(std::int64_t lambda) {
  if (lambda < 0) throw std::invalid_argument("lambda must be non-negative");
  std::int64_t count = 0;
  auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(lambda))) + 2;
  for (std::int64_t m = -bound; m <= bound; ++m) {
    for (std::int64_t n = -bound; n <= bound; ++n) {
      if (m * m + n * n == lambda) ++count;
    }
  }
  return count;
}

}  // namespace torus::spectra
