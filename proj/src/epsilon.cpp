#include <numeric>
#include <string>

#include "unfold/bform.hpp"

namespace unfold {

namespace {

// Returns an empty string when admissible, otherwise the failed hypothesis.
std::string admissibility_failure(const AngleSystem& sys, std::int64_t a) {
  if (!sys.is_triangle()) return "epsilon profile needs a triangle";
  const std::int64_t k = sys.k();
  const std::int64_t ar = reduce_mod(a, k);
  if (ar == 0) return "a = 0 mod k";
  const std::int64_t b = reduce_mod(2 - ar, k);
  if (b == 0) return "b = 2 - a = 0 mod k, so t(-b) = 0";
  if (t_total(sys, -ar) <= 1) return "t(-a) <= 1 for a = " + std::to_string(ar);
  if (t_total(sys, -b) <= 1) return "t(-b) <= 1 for b = " + std::to_string(b);
  return {};
}

}  // namespace

bool epsilon_admissible(const AngleSystem& sys, std::int64_t a) { return admissibility_failure(sys, a).empty(); }

EpsilonProfile epsilon_profile(const AngleSystem& sys, std::int64_t a) {
  if (auto why = admissibility_failure(sys, a); !why.empty()) throw HypothesisFailure(why + " for " + sys.str());

  const std::int64_t k = sys.k();
  EpsilonProfile p;
  p.a = reduce_mod(a, k);
  p.b = reduce_mod(2 - p.a, k);
  p.t_neg_a = t_total(sys, -p.a);
  p.t_neg_b = t_total(sys, -p.b);

  auto fail = [&](const std::string& observation) {
    throw InternalError("epsilon observation failed (" + observation + ") for " + sys.str() +
                        ", a = " + std::to_string(p.a));
  };

  int sum = 0;
  for (std::size_t i = 0; i < sys.n(); ++i) {
    const std::int64_t qi = sys.q(i);
    // k·ε_i = 2k − 2{q_i}k − {−a q_i}k − {−b q_i}k, all residues exact.
    const std::int64_t scaled = 2 * k - 2 * reduce_mod(qi, k) - reduce_mod(-p.a * qi, k) - reduce_mod(-p.b * qi, k);
    if (scaled % k != 0) fail("epsilon_i is an integer");
    const auto e = static_cast<int>(scaled / k);
    if (e < -1 || e > 1) fail("epsilon_i in {-1,0,1}");
    if (e == -1 && 2 * qi < k) fail("epsilon_i = -1 implies theta_i >= pi/2");
    p.eps.push_back(e);
    sum += e;
  }
  if (sum != 4 - p.t_neg_a - p.t_neg_b) fail("sum epsilon = 4 - t(-a) - t(-b)");
  if (sum != 0) fail("sum epsilon = 0 for triangles");
  return p;
}

}  // namespace unfold
