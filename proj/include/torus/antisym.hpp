#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "torus/nodal.hpp"
#include "torus/rational.hpp"
#include "torus/spectra.hpp"

namespace torus::antisym {

// Translation v = (v1_over_pi * pi, v2_over_rho_pi * rho * pi), stored
// exactly so the induced phases m*v1 and (n/rho)*v2 stay exact multiples
// of pi.
struct TranslationVector {
  Rational v1_over_pi{0, 1};
  Rational v2_over_rho_pi{0, 1};
};

// Exact action of a translation on one basis function: both phases are
// integer multiples of pi and the function maps to sign * itself.
struct BasisTermAction {
  spectra::BasisFunction function;
  std::int64_t phase1 = 0;  // m * v1 / pi
  std::int64_t phase2 = 0;  // (n / rho) * v2 / pi
  int sign = 1;             // (-1)^(phase1 + phase2)
};

struct BasisAction {
  TranslationVector vector;
  std::vector<BasisTermAction> terms;
};

// Torus outside the supported regimes (irrational mode, or rho^2 = a/b with
// a, b odd and a + b = 2 mod 4).
struct UnsupportedRegime : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Translation by v is not minus the identity on the eigenspace.
struct NotAntisymmetric : std::runtime_error {
  spectra::BasisFunction offending;
  NotAntisymmetric(const std::string& msg, spectra::BasisFunction f)
      : std::runtime_error(msg), offending(f) {}
};

// Bijection between positive and negative domain labels induced by the
// translation, with per-pair cell-count discrepancy.
struct DomainPairing {
  std::vector<std::pair<int, int>> pairs;  // (positive label, negative label)
  std::vector<std::int64_t> discrepancy;   // |cells(pos) - cells(neg)| per pair
  std::int64_t max_discrepancy() const {
    std::int64_t m = 0;
    for (auto d : discrepancy) m = std::max(m, d);
    return m;
  }
};

// True when the torus admits a guaranteed anti-symmetry vector: irrational
// mode, or rho^2 = a/b with a, b odd and a + b = 2 mod 4 (rho = 1 is a/b = 1/1).
bool supported_regime(const spectra::TorusShape& torus);

TranslationVector antisymmetry_vector(const spectra::Eigenspace& space,
                                      const spectra::TorusShape& torus);

// Exact symbolic check: every basis function must map to exactly minus
// itself; throws NotAntisymmetric otherwise.
BasisAction verify_on_basis(const spectra::Eigenspace& space, const TranslationVector& v);

// Max |u(x+v) + u(x)| over seeded random samples.
double verify_by_sampling(const spectra::Eigenfunction& u, const TranslationVector& v,
                          int sample_count, std::uint64_t seed = 42);

DomainPairing pair_domains(const nodal::NodalDecomposition& decomp, const TranslationVector& v);

}  // namespace torus::antisym
