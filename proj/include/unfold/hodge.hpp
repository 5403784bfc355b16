#pragma once

// Eigenspace dimensions of the cyclic cover y^k = Π (z − z_i)^{q_i} under its
// deck transformation, plus the genus, stratum and non-hyperellipticity tests
// derived from them.

#include <cstdint>
#include <string>
#include <vector>

#include "unfold/angle_core.hpp"

namespace unfold {

/// Per-eigenvalue dimensions indexed by ℓ in {0, …, k−1}.
struct EigenProfile {
  std::int64_t k = 0;
  std::vector<int> holo_dims;  // dim H^{1,0}_ℓ
  std::vector<int> abs_dims;   // dim H^1_ℓ
};

/// Zero orders of the unfolding's differential, largest first, plus the number
/// of order-0 ramification points (marked points).
struct StratumSignature {
  std::vector<int> zero_orders;
  int marked_points = 0;

  friend bool operator==(const StratumSignature&, const StratumSignature&) = default;
  /// "(7,1)"; "()" for the torus.
  std::string str() const;
};

/// dim H^{1,0}_ℓ = t(−ℓ) − 1, and 0 for ℓ ≡ 0.
int eigenform_dim(const AngleSystem& sys, std::int64_t ell);

/// dim H^1_ℓ = t(ℓ) + t(−ℓ) − 2, and 0 for ℓ ≡ 0.
int eigenspace_dim(const AngleSystem& sys, std::int64_t ell);

EigenProfile eigen_profile(const AngleSystem& sys);

/// Half the summed eigenspace dimensions. For normalized systems this is
/// cross-checked against Riemann–Hurwitz and throws InternalError on mismatch.
int genus(const AngleSystem& sys);

/// Riemann–Hurwitz genus 1 + ((n−2)k − Σ gcd(q_i, k)) / 2. Normalized only.
int riemann_hurwitz_genus(const AngleSystem& sys);

/// Triangles only: each angle contributes gcd(q_i,k) points of order
/// q_i/gcd(q_i,k) − 1.
StratumSignature stratum(const AngleSystem& sys);

/// k odd, and either n > 4 or more than two distinct angles.
bool hyperelliptic_excluded(const AngleSystem& sys);

/// All angles are multiples of π/3.
bool full_rank_by_pi3(const AngleSystem& sys);

}  // namespace unfold
