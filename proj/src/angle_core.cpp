#include "unfold/angle_core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "unfold/errors.hpp"
#include "unfold/kernels.hpp"

namespace unfold {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ExactFraction: multiplication overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("ExactFraction: addition overflow");
  return r;
}

}  // namespace

ExactFraction::ExactFraction(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InvalidInput("ExactFraction: zero denominator");
  if (denominator < 0) {
    numerator = checked_mul(numerator, -1);
    denominator = checked_mul(denominator, -1);
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

ExactFraction ExactFraction::operator-() const { return ExactFraction(checked_mul(num_, -1), den_); }

ExactFraction operator+(const ExactFraction& a, const ExactFraction& b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t lhs = checked_mul(a.num_, b.den_ / g);
  const std::int64_t rhs = checked_mul(b.num_, a.den_ / g);
  return ExactFraction(checked_add(lhs, rhs), checked_mul(a.den_ / g, b.den_));
}

ExactFraction operator-(const ExactFraction& a, const ExactFraction& b) { return a + (-b); }

ExactFraction operator*(const ExactFraction& a, const ExactFraction& b) {
  // Cross-reduce first to keep intermediates small.
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  return ExactFraction(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

ExactFraction operator/(const ExactFraction& a, const ExactFraction& b) {
  if (b.num_ == 0) throw InvalidInput("ExactFraction: division by zero");
  return a * ExactFraction(b.den_, b.num_);
}

__extension__ using Wide = __int128;

std::strong_ordering operator<=>(const ExactFraction& a, const ExactFraction& b) {
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string ExactFraction::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ExactFraction ExactFraction::parse(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw InvalidInput("not a rational number: '" + text + "'");
    return v;
  };
  const std::string_view view(text);
  const auto slash = view.find('/');
  if (slash == std::string_view::npos) return ExactFraction(parse_int(view));
  return ExactFraction(parse_int(view.substr(0, slash)), parse_int(view.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const ExactFraction& f) { return os << f.str(); }

// ---------------------------------------------------------------------------

AngleSystem make_angle_system(std::vector<std::int64_t> q, GcdMode mode) {
  if (q.size() < 3) throw InvalidInput("angle system needs at least 3 angles");
  std::int64_t sum = 0;
  for (const auto qi : q) {
    if (qi < 1) throw InvalidInput("angle numerators must be positive");
    sum = checked_add(sum, qi);
  }
  const auto n_minus_2 = static_cast<std::int64_t>(q.size()) - 2;
  if (sum % n_minus_2 != 0)
    throw InvalidInput("sum of numerators " + std::to_string(sum) + " is not divisible by n-2");
  std::int64_t k = sum / n_minus_2;
  // Angles lie in (0, π) ∪ (π, 2π).
  for (const auto qi : q) {
    if (qi == k || qi >= 2 * k) throw InvalidInput("angle q_i/k must lie in (0,1) or (1,2)");
  }

  std::int64_t g = k;
  for (const auto qi : q) g = std::gcd(g, qi);

  if (g != 1) {
    if (mode == GcdMode::Strict)
      throw InvalidInput("numerators share the common factor " + std::to_string(g));
    if (mode == GcdMode::Reduce) {
      for (auto& qi : q) qi /= g;
      k /= g;
      g = 1;
    }
  }
  std::sort(q.begin(), q.end());
  return AngleSystem(std::move(q), k, g == 1);
}

std::string AngleSystem::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < q_.size(); ++i) os << (i ? "," : "") << q_[i];
  os << ';' << k_ << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

ResidueSet::ResidueSet(std::int64_t modulus, std::vector<std::int64_t> members)
    : modulus_(modulus), members_(std::move(members)) {
  if (modulus_ < 1) throw InvalidInput("residue modulus must be positive");
  for (const auto m : members_) {
    if (m < 0 || m >= modulus_) throw InvalidInput("residue out of range: " + std::to_string(m));
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ResidueSet::contains(std::int64_t residue) const {
  return std::binary_search(members_.begin(), members_.end(), residue);
}

bool ResidueSet::is_unit_subset() const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](std::int64_t m) { return std::gcd(m, modulus_) == 1; });
}

std::int64_t reduce_mod(std::int64_t x, std::int64_t k) {
  const std::int64_t r = x % k;
  return r < 0 ? r + k : r;
}

ExactFraction t_component(const AngleSystem& sys, std::size_t i, std::int64_t ell) {
  if (i >= sys.n()) throw InvalidInput("angle index out of range");
  const std::int64_t k = sys.k();
  // ℓ and q_i are both < 2k after reduction, so the product fits comfortably.
  const std::int64_t r = reduce_mod(reduce_mod(ell, k) * sys.q(i), k);
  return ExactFraction(r, k);
}

int t_total(const AngleSystem& sys, std::int64_t ell) {
  const std::int64_t k = sys.k();
  const std::int64_t l = reduce_mod(ell, k);
  std::int64_t sum = 0;
  for (const auto qi : sys.q()) sum += reduce_mod(l * qi, k);
  if (sum % k != 0)
    throw InternalError("t(" + std::to_string(ell) + ") is not an integer for " + sys.str());
  return static_cast<int>(sum / k);
}

std::vector<int> t_table(const AngleSystem& sys) {
  const std::int64_t k = sys.k();
  if (k > kernels::kMaxModulus || static_cast<std::int64_t>(sys.n()) * 2 * k > kernels::kMaxModulus)
    throw InvalidInput("modulus too large for the t-table kernel: " + std::to_string(k));
  std::vector<std::int32_t> q32(sys.q().begin(), sys.q().end());
  std::vector<std::int32_t> sums(static_cast<std::size_t>(k));
  kernels::residue_sums(q32, static_cast<std::int32_t>(k), sums);

  std::vector<int> table(sums.size());
  for (std::size_t ell = 0; ell < sums.size(); ++ell) {
    if (sums[ell] % k != 0)
      throw InternalError("t(" + std::to_string(ell) + ") is not an integer for " + sys.str());
    table[ell] = static_cast<int>(sums[ell] / k);
  }
  return table;
}

ResidueSet unit_group(std::int64_t k) {
  if (k < 2) throw InvalidInput("unit group needs k >= 2");
  std::vector<std::int64_t> units;
  for (std::int64_t a = 1; a < k; ++a) {
    if (std::gcd(a, k) == 1) units.push_back(a);
  }
  return ResidueSet(k, std::move(units));
}

ResidueSet multiplicative_closure(const ResidueSet& gens) {
  if (!gens.is_unit_subset()) throw InvalidInput("closure generators must be units");
  const std::int64_t k = gens.modulus();
  if (k == 1) return ResidueSet(1, {0});
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  std::vector<std::int64_t> frontier{1};
  seen[1] = 1;
  // In a finite group the closure under multiplication is the generated subgroup.
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (const auto x : frontier) {
      for (const auto g : gens.members()) {
        const std::int64_t y = (x * g) % k;
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::int64_t> members;
  for (std::int64_t a = 0; a < k; ++a) {
    if (seen[static_cast<std::size_t>(a)]) members.push_back(a);
  }
  return ResidueSet(k, std::move(members));
}

ResidueSet residues_with_gcd(std::int64_t k, std::int64_t d) {
  if (k < 1 || d < 1 || k % d != 0)
    throw InvalidInput(std::to_string(d) + " does not divide " + std::to_string(k));
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < k; ++a) {
    if (std::gcd(a, k) == d) out.push_back(a);
  }
  return ResidueSet(k, std::move(out));
}

std::int64_t euler_phi(std::int64_t k) {
  if (k < 1) throw InvalidInput("euler_phi needs k >= 1");
  std::int64_t result = k;
  std::int64_t m = k;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace unfold
