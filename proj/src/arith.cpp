#include "torus/arith.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace torus::arith {

TwoAdicSplit two_adic_split(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("no valuation of zero");
  TwoAdicSplit s;
  s.odd_part = n;
  while (s.odd_part % 2 == 0) {
    s.odd_part /= 2;
    ++s.p;
  }
  return s;
}

std::vector<Representation> representations(const QuadraticForm& form, std::int64_t lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be positive");
  std::vector<Representation> out;
  for (std::int64_t m = 0; form.alpha * m * m <= lambda; ++m) {
    std::int64_t rest = lambda - form.alpha * m * m;
    if (rest % form.beta != 0) continue;
    std::int64_t nsq = rest / form.beta;
    auto n = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(nsq))));
    while (n * n > nsq) --n;
    while ((n + 1) * (n + 1) <= nsq) ++n;
    if (n * n == nsq) out.push_back({m, n});
  }
  return out;
}

namespace {

// Core of the lemma check. Returns false instead of throwing so the
// exhaustive verifier can collect violations.
bool try_decompose(std::int64_t lambda, std::int64_t m, std::int64_t n,
                   DecompositionWitness& w) {
  TwoAdicSplit s = two_adic_split(lambda);
  w.p = s.p / 2;
  w.parity_case = (s.p % 2 == 0) ? ParityCase::ExactlyOneOdd : ParityCase::BothOdd;
  std::int64_t scale = std::int64_t{1} << w.p;
  if (m % scale != 0 || n % scale != 0) return false;
  w.m0 = m / scale;
  w.n0 = n / scale;
  bool m_odd = w.m0 % 2 != 0;
  bool n_odd = w.n0 % 2 != 0;
  if (w.parity_case == ParityCase::ExactlyOneOdd) return m_odd != n_odd;
  return m_odd && n_odd;
}

}  // namespace

DecompositionWitness decompose(std::int64_t m, std::int64_t n) {
  return decompose_under_form(QuadraticForm{1, 1}, m, n);
}

DecompositionWitness decompose_under_form(const QuadraticForm& form, std::int64_t m,
                                          std::int64_t n) {
  if (m == 0 && n == 0) throw std::invalid_argument("zero representation");
  if (m < 0 || n < 0) throw std::invalid_argument("representation indices must be non-negative");
  std::int64_t lambda = form.alpha * m * m + form.beta * n * n;
  DecompositionWitness w;
  if (!try_decompose(lambda, m, n, w)) {
    throw std::logic_error("valuation lemma violated at (m,n)=(" + std::to_string(m) + "," +
                           std::to_string(n) + ")");
  }
  return w;
}

VerificationReport verify_generalized_lemma(const QuadraticForm& form, std::int64_t lambda_max) {
  if (!form.valid())
    throw std::invalid_argument("alpha,beta must be odd with alpha+beta = 2 mod 4");
  if (lambda_max < 1) throw std::invalid_argument("lambda_max must be positive");

  VerificationReport report;
  report.form = form;
  report.lambda_max = lambda_max;

  // Sweep the lattice directly; every (m, n) with a*m^2 + b*n^2 <= lambda_max
  // is a representation of exactly one lambda.
  for (std::int64_t m = 0; form.alpha * m * m <= lambda_max; ++m) {
    for (std::int64_t n = 0; form.alpha * m * m + form.beta * n * n <= lambda_max; ++n) {
      if (m == 0 && n == 0) continue;
      std::int64_t lambda = form.alpha * m * m + form.beta * n * n;
      DecompositionWitness w;
      if (!try_decompose(lambda, m, n, w)) {
        report.violations.push_back({lambda, {m, n}});
      }
      ++report.representations_checked;
    }
  }
  return report;
}

}  // namespace torus::arith
