#include "torus/antisym.hpp"

#include <cmath>
#include <random>
#include <string>

#include "torus/arith.hpp"

namespace torus::antisym {

bool supported_regime(const spectra::TorusShape& torus) {
  if (torus.irrational) return true;
  std::int64_t a = torus.rho_sq.num;
  std::int64_t b = torus.rho_sq.den;
  return a % 2 == 1 && b % 2 == 1 && (a + b) % 4 == 2;
}

TranslationVector antisymmetry_vector(const spectra::Eigenspace& space,
                                      const spectra::TorusShape& torus) {
  if (!supported_regime(torus))
    throw UnsupportedRegime("no parity guarantee for this torus (rho^2 = " +
                            torus.rho_sq.str() + ")");
  if (space.lambda_value == 0.0)
    throw std::invalid_argument("constant eigenfunctions admit no sign flip");

  if (torus.irrational) {
    // Unique index pair by hypothesis.
    auto rep = space.representations.at(0);
    if (rep.m > 0) return {Rational(1, rep.m), Rational(0)};
    return {Rational(0), Rational(1, rep.n)};
  }

  // rho^2 = a/b, lambda = (a m^2 + b n^2)/a. The scaled integer
  // L = lambda * a is the quantity whose 2-adic valuation drives the case
  // split of the valuation lemma.
  Rational scaled = space.lambda * Rational(torus.rho_sq.num);
  if (!scaled.is_integer())
    throw std::logic_error("scaled eigenvalue is not an integer");
  auto split = arith::two_adic_split(scaled.num);
  if (split.p % 2 == 0) {
    std::int64_t denom = std::int64_t{1} << (split.p / 2);
    return {Rational(1, denom), Rational(1, denom)};
  }
  std::int64_t denom = std::int64_t{1} << ((split.p - 1) / 2);
  return {Rational(1, denom), Rational(0)};
}

BasisAction verify_on_basis(const spectra::Eigenspace& space, const TranslationVector& v) {
  BasisAction action;
  action.vector = v;
  for (const auto& bf : space.basis) {
    // Translation shifts the arguments by phase1*pi and phase2*pi. The basis
    // function maps to a multiple of itself iff both phases are integers
    // (otherwise the action mixes cos and sin partners).
    Rational ph1 = Rational(bf.m) * v.v1_over_pi;
    Rational ph2 = Rational(bf.n) * v.v2_over_rho_pi;
    if (!ph1.is_integer() || !ph2.is_integer()) {
      throw NotAntisymmetric("translation mixes basis families at (" +
                                 std::string(spectra::family_name(bf.family)) + "," +
                                 std::to_string(bf.m) + "," + std::to_string(bf.n) + ")",
                             bf);
    }
    BasisTermAction term;
    term.function = bf;
    term.phase1 = ph1.num;
    term.phase2 = ph2.num;
    term.sign = ((term.phase1 + term.phase2) % 2 == 0) ? 1 : -1;
    if (term.sign != -1) {
      throw NotAntisymmetric("basis function maps to +itself at (" +
                                 std::string(spectra::family_name(bf.family)) + "," +
                                 std::to_string(bf.m) + "," + std::to_string(bf.n) + ")",
                             bf);
    }
    action.terms.push_back(term);
  }
  return action;
}

double verify_by_sampling(const spectra::Eigenfunction& u, const TranslationVector& v,
                          int sample_count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d1(0.0, u.torus.period1());
  std::uniform_real_distribution<double> d2(0.0, u.torus.period2());
  double v1 = v.v1_over_pi.value() * spectra::kPi;
  double v2 = v.v2_over_rho_pi.value() * u.torus.rho_value * spectra::kPi;
  double worst = 0.0;
  for (int s = 0; s < sample_count; ++s) {
    double x1 = d1(rng);
    double x2 = d2(rng);
    auto shifted = spectra::reduce_point(u.torus, x1 + v1, x2 + v2);
    worst = std::max(worst, std::abs(u(shifted) + u(x1, x2)));
  }
  return worst;
}

DomainPairing pair_domains(const nodal::NodalDecomposition& decomp, const TranslationVector& v) {
  // v must be an exact grid shift: di = (v1/pi) * n1 / 2 etc.
  Rational di_r = v.v1_over_pi * Rational(decomp.n1, 2);
  Rational dj_r = v.v2_over_rho_pi * Rational(decomp.n2, 2);
  if (!di_r.is_integer() || !dj_r.is_integer())
    throw std::invalid_argument("grid resolution incompatible with translation vector");
  int di = static_cast<int>(((di_r.num % decomp.n1) + decomp.n1) % decomp.n1);
  int dj = static_cast<int>(((dj_r.num % decomp.n2) + decomp.n2) % decomp.n2);

  std::vector<int> target(static_cast<std::size_t>(decomp.domain_count), -1);
  for (int i = 0; i < decomp.n1; ++i) {
    for (int j = 0; j < decomp.n2; ++j) {
      int lbl = decomp.labels(i, j);
      if (lbl < 0) continue;
      int tl = decomp.labels((i + di) % decomp.n1, (j + dj) % decomp.n2);
      if (tl < 0)
        throw std::runtime_error("not an anti-symmetry: domain cell maps to boundary");
      if (decomp.domain_signs[static_cast<std::size_t>(lbl)] ==
          decomp.domain_signs[static_cast<std::size_t>(tl)])
        throw std::runtime_error("not an anti-symmetry: shift maps onto a same-sign domain");
      int& t = target[static_cast<std::size_t>(lbl)];
      if (t < 0) t = tl;
      else if (t != tl)
        throw std::runtime_error("not an anti-symmetry: domain image is not a single domain");
    }
  }

  DomainPairing pairing;
  for (int lbl = 0; lbl < decomp.domain_count; ++lbl) {
    if (decomp.domain_signs[static_cast<std::size_t>(lbl)] != nodal::Sign::Positive) continue;
    int neg = target[static_cast<std::size_t>(lbl)];
    if (neg < 0) throw std::runtime_error("not an anti-symmetry: unmapped positive domain");
    pairing.pairs.emplace_back(lbl, neg);
    pairing.discrepancy.push_back(
        std::abs(decomp.domain_cells[static_cast<std::size_t>(lbl)] -
                 decomp.domain_cells[static_cast<std::size_t>(neg)]));
  }
  // Totality on the negative side.
  std::vector<bool> hit(static_cast<std::size_t>(decomp.domain_count), false);
  for (auto& [pos, neg] : pairing.pairs) hit[static_cast<std::size_t>(neg)] = true;
  for (int lbl = 0; lbl < decomp.domain_count; ++lbl) {
    if (decomp.domain_signs[static_cast<std::size_t>(lbl)] == nodal::Sign::Negative &&
        !hit[static_cast<std::size_t>(lbl)])
      throw std::runtime_error("not an anti-symmetry: negative domain is not an image");
  }
  return pairing;
}

}  // namespace torus::antisym
