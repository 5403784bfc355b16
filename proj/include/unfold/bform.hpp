#pragma once

// Numerical side of the pairing B_ω between eigenforms H^{1,0}_a and
// H^{1,0}_{2−a}: the exact ε-exponent bookkeeping and the planar integral
//
//   ∫_ℂ z^{ε₁} (z−1)^{ε₂} |z|^{2α₁−2} |z−1|^{2α₂−2} dA,   0 < α_i < ½,
//
// whose nonvanishing is checked by quadrature with an error estimate.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "unfold/angle_core.hpp"
#include "unfold/errors.hpp"

namespace unfold {

struct EpsilonProfile {
  std::int64_t a = 0;
  std::int64_t b = 0;  // (2 − a) mod k
  int t_neg_a = 0;     // t(−a)
  int t_neg_b = 0;     // t(−b)
  std::vector<int> eps;
};

/// A precondition of the ε computation is not met (which one is in what()).
class HypothesisFailure : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// ε_i = 2 − 2t_i(1) − t_i(−a) − t_i(−b) for a triangle, with b = 2 − a.
/// Requires a, b ≢ 0 and t(−a), t(−b) > 1. Asserts ε_i ∈ {−1,0,1},
/// ε_i = −1 ⇒ 2q_i ≥ k, Σε_i = 4 − t(−a) − t(−b) = 0; a failed assertion
/// throws InternalError.
EpsilonProfile epsilon_profile(const AngleSystem& sys, std::int64_t a);

/// True when (sys, a) satisfies epsilon_profile's preconditions.
bool epsilon_admissible(const AngleSystem& sys, std::int64_t a);

struct QuadratureOptions {
  double tol = 1e-8;
  std::size_t max_evaluations = 10'000'000;
};

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate = 0.0;
  std::size_t regions_evaluated = 0;
  std::size_t evaluations = 0;
};

/// The requested tolerance was not reached within the evaluation budget.
class QuadratureBudgetExceeded : public std::runtime_error {
 public:
  QuadratureBudgetExceeded(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const { return partial_; }

 private:
  QuadratureResult partial_;
};

/// Integrates over ℂ split into polar discs of radius ½ about 0 and 1, the
/// bounded remainder inside |z| ≤ 2, and the exterior mapped through r ↦ 1/r.
/// The exterior is taken as the limit over discs, which matters only for the
/// conditionally convergent ε ≠ 0, α₁+α₂ > ½ cases.
///
/// Throws InvalidInput when both ε are nonzero, an ε is not 0/1, or an α is
/// outside (0, ½); QuadratureBudgetExceeded when tol is not reached.
QuadratureResult planar_integral(const ExactFraction& alpha1, const ExactFraction& alpha2, int eps1, int eps2,
                                 const QuadratureOptions& options = {});

/// |value| > 10 · error_estimate.
bool nonvanishing_check(const ExactFraction& alpha1, const ExactFraction& alpha2, int eps1, int eps2,
                        const QuadratureOptions& options = {});
bool nonvanishing(const QuadratureResult& r);

}  // namespace unfold
