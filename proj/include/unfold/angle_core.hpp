#pragma once

// Exact arithmetic for rational angle systems θ_i = q_i·π/k: fractional-part
// sums t(ℓ), the unit group (ℤ/k)* and multiplicative closures.
//
// Everything here is integer arithmetic. Values are immutable and all
// functions are pure.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace unfold {

/// Reduced fraction with positive denominator. Arithmetic is overflow-checked
/// and throws std::overflow_error rather than wrapping.
class ExactFraction {
 public:
  constexpr ExactFraction() = default;
  ExactFraction(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  ExactFraction operator-() const;
  friend ExactFraction operator+(const ExactFraction& a, const ExactFraction& b);
  friend ExactFraction operator-(const ExactFraction& a, const ExactFraction& b);
  friend ExactFraction operator*(const ExactFraction& a, const ExactFraction& b);
  friend ExactFraction operator/(const ExactFraction& a, const ExactFraction& b);
  ExactFraction& operator+=(const ExactFraction& o) { return *this = *this + o; }
  ExactFraction& operator-=(const ExactFraction& o) { return *this = *this - o; }

  friend bool operator==(const ExactFraction&, const ExactFraction&) = default;
  friend std::strong_ordering operator<=>(const ExactFraction& a, const ExactFraction& b);

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  /// Parses "p/q" or "p".
  static ExactFraction parse(const std::string& text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const ExactFraction& f);

enum class GcdMode {
  Keep,    // accept any common factor; normalized() reports it
  Reduce,  // divide the common factor out
  Strict,  // reject a common factor
};

/// Angle numerators q_1..q_n over the common denominator k, with
/// Σ q_i = (n−2)·k. Stored sorted ascending.
class AngleSystem {
 public:
  std::span<const std::int64_t> q() const { return q_; }
  std::int64_t q(std::size_t i) const { return q_.at(i); }
  std::int64_t k() const { return k_; }
  std::size_t n() const { return q_.size(); }
  /// gcd(q_1, …, q_n, k) == 1.
  bool normalized() const { return normalized_; }
  bool is_triangle() const { return q_.size() == 3; }

  friend bool operator==(const AngleSystem&, const AngleSystem&) = default;
  friend auto operator<=>(const AngleSystem& a, const AngleSystem& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.q_ <=> b.q_;
  }

  std::string str() const;

 private:
  friend AngleSystem make_angle_system(std::vector<std::int64_t> q, GcdMode mode);
  AngleSystem(std::vector<std::int64_t> q, std::int64_t k, bool normalized)
      : q_(std::move(q)), k_(k), normalized_(normalized) {}

  std::vector<std::int64_t> q_;
  std::int64_t k_ = 0;
  bool normalized_ = false;
};

AngleSystem make_angle_system(std::vector<std::int64_t> q, GcdMode mode = GcdMode::Keep);
inline AngleSystem make_angle_system(std::initializer_list<std::int64_t> q,
                                     GcdMode mode = GcdMode::Keep) {
  return make_angle_system(std::vector<std::int64_t>(q), mode);
}

/// Sorted subset of {0, …, k−1}.
class ResidueSet {
 public:
  ResidueSet(std::int64_t modulus, std::vector<std::int64_t> members);

  std::int64_t modulus() const { return modulus_; }
  std::span<const std::int64_t> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(std::int64_t residue) const;
  /// Every member is coprime to the modulus.
  bool is_unit_subset() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> members_;
};

/// Canonical representative of x in {0, …, k−1}.
std::int64_t reduce_mod(std::int64_t x, std::int64_t k);

/// t_i(ℓ) = {ℓ·q_i / k}.
ExactFraction t_component(const AngleSystem& sys, std::size_t i, std::int64_t ell);

/// t(ℓ) = Σ_i {ℓ·q_i / k}. Always an integer.
int t_total(const AngleSystem& sys, std::int64_t ell);

/// t(ℓ) for every ℓ in {0, …, k−1}; index with reduce_mod(ℓ, k).
std::vector<int> t_table(const AngleSystem& sys);

ResidueSet unit_group(std::int64_t k);

/// Smallest multiplicatively closed subset of (ℤ/k)* containing 1 and gens.
ResidueSet multiplicative_closure(const ResidueSet& gens);

/// {a in 1..k−1 : gcd(a, k) = d}.
ResidueSet residues_with_gcd(std::int64_t k, std::int64_t d);

std::int64_t euler_phi(std::int64_t k);

}  // namespace unfold
