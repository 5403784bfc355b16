#include "unfold/certify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "unfold/errors.hpp"

namespace unfold {

namespace {

void require_normalized_triangle(const AngleSystem& sys) {
  if (!sys.is_triangle()) throw InvalidInput("certification needs a triangle, got " + sys.str());
  if (!sys.normalized()) throw InvalidInput("certification needs gcd(q1,q2,q3) = 1, got " + sys.str());
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// t(−x) with x taken mod k.
int t_neg(const std::vector<int>& t, std::int64_t k, std::int64_t x) {
  return t[static_cast<std::size_t>(reduce_mod(-x, k))];
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::DenseInStratumComponent: return "DenseInStratumComponent";
    case Verdict::FullRankUndetermined: return "FullRankUndetermined";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::optional<Verdict> parse_verdict(std::string_view name) {
  for (const auto v : {Verdict::DenseInStratumComponent, Verdict::FullRankUndetermined, Verdict::Inconclusive}) {
    if (verdict_name(v) == name) return v;
  }
  return std::nullopt;
}

std::vector<std::int64_t> divisor_set(const AngleSystem& sys) {
  require_normalized_triangle(sys);
  const std::int64_t k = sys.k();
  const auto t = t_table(sys);
  std::set<std::int64_t> d;
  for (std::int64_t a = 1; a < k; ++a) {
    if (t_neg(t, k, a) > 1) d.insert(std::gcd(a, k));
  }
  return {d.begin(), d.end()};
}

RelationTrace build_relations(const AngleSystem& sys) {
  require_normalized_triangle(sys);
  const std::int64_t k = sys.k();
  const auto t = t_table(sys);

  std::set<std::int64_t> divisors{1};
  std::set<std::pair<std::int64_t, std::int64_t>> relations;
  std::set<std::int64_t> a_set{1, k - 1};

  for (std::int64_t a = 2; a <= k - 1; ++a) {
    if (t_neg(t, k, a) <= 1) continue;
    const std::int64_t d1 = std::gcd(a, k);
    divisors.insert(d1);
    const std::int64_t b = reduce_mod(2 - a, k);
    if (t_neg(t, k, b) <= 1) continue;
    const std::int64_t d2 = std::gcd(b, k);
    if (d1 == d2) {
      // Every unit w with w·a ≡ 2 − a; may be empty or several when gcd(a,k) > 1.
      for (std::int64_t w = 1; w < k; ++w) {
        if (std::gcd(w, k) == 1 && (w * a) % k == b) a_set.insert(w);
      }
    } else {
      relations.insert({std::min(d1, d2), std::max(d1, d2)});
    }
  }

  RelationTrace trace;
  trace.divisors.assign(divisors.begin(), divisors.end());
  trace.relations.assign(relations.begin(), relations.end());

  const auto& ds = trace.divisors;
  auto index_of = [&](std::int64_t d) -> std::size_t {
    const auto it = std::lower_bound(ds.begin(), ds.end(), d);
    if (it == ds.end() || *it != d) throw InternalError("relation endpoint " + std::to_string(d) + " missing from D");
    return static_cast<std::size_t>(it - ds.begin());
  };
  UnionFind uf(ds.size());
  for (const auto& [d1, d2] : trace.relations) uf.unite(index_of(d1), index_of(d2));
  std::vector<std::vector<std::int64_t>> by_root(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) by_root[uf.find(i)].push_back(ds[i]);
  for (auto& c : by_root) {
    if (!c.empty()) trace.classes.push_back(std::move(c));
  }

  for (const auto d : ds) {
    const std::int64_t step = k / d;
    for (std::int64_t a = 1; a < k; a += step) {
      if (std::gcd(a, k) == 1) a_set.insert(a);
    }
  }
  trace.a_generators = ResidueSet(k, {a_set.begin(), a_set.end()});
  trace.a_closure = multiplicative_closure(trace.a_generators);
  return trace;
}

bool full_rank_certified(const RelationTrace& trace, std::int64_t k) {
  return trace.single_class() && static_cast<std::int64_t>(trace.a_closure.size()) == euler_phi(k);
}

bool full_rank_certified(const AngleSystem& sys) { return full_rank_certified(build_relations(sys), sys.k()); }

bool rank_exceeds_trivial_bound(const AngleSystem& sys) {
  if (!sys.is_triangle()) throw InvalidInput("rank bound needs a triangle, got " + sys.str());
  const std::int64_t k = sys.k();
  if (k <= 2) return false;
  const auto t = t_table(sys);
  for (std::int64_t a = 1; a < k; ++a) {
    if (std::gcd(a, k) != 1) continue;
    if ((2 * a) % k == 2 % k) continue;
    const std::int64_t b = reduce_mod(2 - a, k);
    if (b == 0) continue;
    if (t_neg(t, k, a) > 1 && t_neg(t, k, b) > 1) return true;
  }
  return false;
}

namespace {

int trivial_rank_bound(const AngleSystem& sys) {
  const auto n = static_cast<int>(sys.n());
  // θ_i is a multiple of π/2 iff k | 2·q_i.
  const bool all_right = std::all_of(sys.q().begin(), sys.q().end(),
                                     [&](std::int64_t qi) { return (2 * qi) % sys.k() == 0; });
  return all_right ? (n - 2 + 1) / 2 : n - 2;
}

int rank_lower_bound(const AngleSystem& sys, bool certified, int g) {
  int bound = trivial_rank_bound(sys);
  if (rank_exceeds_trivial_bound(sys)) bound = std::max(bound, static_cast<int>(sys.n()) - 1);
  if (certified) bound = std::max(bound, g);
  return bound;
}

}  // namespace

int rank_lower_bound(const AngleSystem& sys) {
  require_normalized_triangle(sys);
  return rank_lower_bound(sys, full_rank_certified(sys), genus(sys));
}

Certificate make_certificate(const AngleSystem& sys) {
  require_normalized_triangle(sys);
  Certificate c{.sys = sys};
  c.genus = genus(sys);
  c.stratum = stratum(sys);
  c.trace = build_relations(sys);
  c.full_rank_certified = full_rank_certified(c.trace, sys.k());
  c.hyperelliptic_excluded = hyperelliptic_excluded(sys);
  c.rank_lower_bound = rank_lower_bound(sys, c.full_rank_certified, c.genus);

  if (c.rank_lower_bound > c.genus)
    throw InternalError("rank lower bound exceeds genus for " + sys.str());
  if (c.full_rank_certified && c.rank_lower_bound != c.genus)
    throw InternalError("certified full rank but rank bound below genus for " + sys.str());
  if (full_rank_by_pi3(sys) && !c.full_rank_certified)
    throw InternalError("multiples of pi/3 not certified full rank for " + sys.str());

  if (c.full_rank_certified && c.hyperelliptic_excluded && c.genus >= 3)
    c.verdict = Verdict::DenseInStratumComponent;
  else if (c.full_rank_certified)
    c.verdict = Verdict::FullRankUndetermined;
  else
    c.verdict = Verdict::Inconclusive;
  return c;
}

}  // namespace unfold
