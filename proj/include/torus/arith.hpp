#pragma once

#include <cstdint>
#include <vector>

namespace torus::arith {

// N = 2^p * odd_part with odd_part odd.
struct TwoAdicSplit {
  int p = 0;
  std::int64_t odd_part = 1;
};

// Non-negative index pair (m, n) with alpha*m^2 + beta*n^2 = lambda.
struct Representation {
  std::int64_t m = 0;
  std::int64_t n = 0;
  friend bool operator==(const Representation&, const Representation&) = default;
};

enum class ParityCase { ExactlyOneOdd, BothOdd };

// Witness for the valuation lemma: m = 2^p*m0, n = 2^p*n0 with the parity
// pattern of (m0, n0) dictated by the 2-adic valuation of lambda.
struct DecompositionWitness {
  int p = 0;
  std::int64_t m0 = 0;
  std::int64_t n0 = 0;
  ParityCase parity_case = ParityCase::ExactlyOneOdd;
};

// alpha*m^2 + beta*n^2 with alpha, beta odd and alpha + beta = 2 mod 4.
struct QuadraticForm {
  std::int64_t alpha = 1;
  std::int64_t beta = 1;
  bool valid() const {
    return alpha > 0 && beta > 0 && alpha % 2 == 1 && beta % 2 == 1 &&
           (alpha + beta) % 4 == 2;
  }
};

struct Violation {
  std::int64_t lambda = 0;
  Representation rep;
};

struct VerificationReport {
  std::int64_t representations_checked = 0;
  std::int64_t lambda_max = 0;
  QuadraticForm form;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

TwoAdicSplit two_adic_split(std::int64_t n);

// All (m, n) in N^2 with alpha*m^2 + beta*n^2 = lambda, sorted by m.
std::vector<Representation> representations(const QuadraticForm& form, std::int64_t lambda);

// Checks the valuation lemma for m^2 + n^2; throws std::logic_error if the
// claimed parity pattern fails (it never does).
DecompositionWitness decompose(std::int64_t m, std::int64_t n);

// Same check against an arbitrary admissible form; lambda is supplied because
// the caller already knows it.
DecompositionWitness decompose_under_form(const QuadraticForm& form, std::int64_t m,
                                          std::int64_t n);

// Exhaustive scan of every representation of every lambda <= lambda_max.
VerificationReport verify_generalized_lemma(const QuadraticForm& form, std::int64_t lambda_max);

}  // namespace torus::arith
