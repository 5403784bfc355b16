#include "unfold/hodge.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "unfold/errors.hpp"

namespace unfold {

namespace {

int eigenform_dim_from(const std::vector<int>& t, std::int64_t k, std::int64_t ell) {
  const std::int64_t l = reduce_mod(ell, k);
  if (l == 0) return 0;
  return std::max(t[static_cast<std::size_t>(reduce_mod(-l, k))] - 1, 0);
}

int eigenspace_dim_from(const std::vector<int>& t, std::int64_t k, std::int64_t ell) {
  const std::int64_t l = reduce_mod(ell, k);
  if (l == 0) return 0;
  return std::max(t[static_cast<std::size_t>(l)] + t[static_cast<std::size_t>(reduce_mod(-l, k))] - 2, 0);
}

}  // namespace

std::string StratumSignature::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < zero_orders.size(); ++i) os << (i ? "," : "") << zero_orders[i];
  os << ')';
  return os.str();
}

int eigenform_dim(const AngleSystem& sys, std::int64_t ell) {
  const std::int64_t l = reduce_mod(ell, sys.k());
  if (l == 0) return 0;
  return std::max(t_total(sys, -l) - 1, 0);
}

int eigenspace_dim(const AngleSystem& sys, std::int64_t ell) {
  const std::int64_t l = reduce_mod(ell, sys.k());
  if (l == 0) return 0;
  return std::max(t_total(sys, l) + t_total(sys, -l) - 2, 0);
}

EigenProfile eigen_profile(const AngleSystem& sys) {
  const auto t = t_table(sys);
  EigenProfile p;
  p.k = sys.k();
  p.holo_dims.resize(t.size());
  p.abs_dims.resize(t.size());
  for (std::int64_t ell = 0; ell < sys.k(); ++ell) {
    p.holo_dims[static_cast<std::size_t>(ell)] = eigenform_dim_from(t, sys.k(), ell);
    p.abs_dims[static_cast<std::size_t>(ell)] = eigenspace_dim_from(t, sys.k(), ell);
  }
  return p;
}

int riemann_hurwitz_genus(const AngleSystem& sys) {
  if (!sys.normalized()) throw InvalidInput("Riemann-Hurwitz genus needs a normalized system " + sys.str());
  std::int64_t ramification = 0;
  for (const auto qi : sys.q()) ramification += std::gcd(qi, sys.k());
  const std::int64_t twice = 2 + static_cast<std::int64_t>(sys.n() - 2) * sys.k() - ramification;
  if (twice % 2 != 0) throw InternalError("odd Riemann-Hurwitz Euler characteristic for " + sys.str());
  return static_cast<int>(twice / 2);
}

int genus(const AngleSystem& sys) {
  const auto profile = eigen_profile(sys);
  const int total = std::accumulate(profile.abs_dims.begin(), profile.abs_dims.end(), 0);
  if (total % 2 != 0) throw InternalError("odd first Betti number for " + sys.str());
  const int g = total / 2;
  if (sys.normalized() && g != riemann_hurwitz_genus(sys))
    throw InternalError("eigenspace genus disagrees with Riemann-Hurwitz for " + sys.str());
  return g;
}

StratumSignature stratum(const AngleSystem& sys) {
  if (!sys.is_triangle()) throw InvalidInput("stratum is only computed for triangles");
  StratumSignature s;
  for (const auto qi : sys.q()) {
    const std::int64_t d = std::gcd(qi, sys.k());
    const int order = static_cast<int>(qi / d - 1);
    for (std::int64_t c = 0; c < d; ++c) {
      if (order > 0)
        s.zero_orders.push_back(order);
      else
        ++s.marked_points;
    }
  }
  std::sort(s.zero_orders.begin(), s.zero_orders.end(), std::greater<>());
  return s;
}

bool hyperelliptic_excluded(const AngleSystem& sys) {
  if (sys.k() % 2 == 0) return false;
  const std::set<std::int64_t> distinct(sys.q().begin(), sys.q().end());
  return sys.n() > 4 || distinct.size() > 2;
}

bool full_rank_by_pi3(const AngleSystem& sys) {
  // θ_i = q_i·π/k is a multiple of π/3 iff k | 3·q_i; for normalized systems this is k | 3.
  return std::all_of(sys.q().begin(), sys.q().end(), [&](std::int64_t qi) { return (3 * qi) % sys.k() == 0; });
}

}  // namespace unfold
