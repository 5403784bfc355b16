#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles/arith_oracle.hpp"
#include "unfold/certify.hpp"
#include "unfold/errors.hpp"

using namespace unfold;

namespace {

std::vector<std::int64_t> members(const ResidueSet& s) { return {s.members().begin(), s.members().end()}; }

}  // namespace

TEST_CASE("divisor sets") {
  CHECK(divisor_set(make_angle_system({1, 2, 8})) == std::vector<std::int64_t>{1});
  const auto d = divisor_set(make_angle_system({1, 2, 12}));
  CHECK(std::find(d.begin(), d.end(), 3) != d.end());
  CHECK(divisor_set(make_angle_system({1, 2, 4})) == std::vector<std::int64_t>{1});
  CHECK_THROWS_AS(divisor_set(make_angle_system({2, 4, 8})), InvalidInput);
  CHECK_THROWS_AS(divisor_set(make_angle_system({1, 1, 1, 5})), InvalidInput);
}

TEST_CASE("relation traces") {
  const auto t = build_relations(make_angle_system({1, 2, 4}));
  CHECK(t.divisors == std::vector<std::int64_t>{1});
  CHECK(t.relations.empty());
  CHECK(members(t.a_generators) == std::vector<std::int64_t>{1, 6});
  CHECK(t.a_closure.size() == 2);

  const auto u = build_relations(make_angle_system({1, 2, 8}));
  CHECK(u.a_closure == unit_group(11));

  const auto e = build_relations(make_angle_system({1, 1, 1}));
  CHECK(e.divisors == std::vector<std::int64_t>{1});
  CHECK(members(e.a_generators) == std::vector<std::int64_t>{1, 2});
  CHECK(e.a_closure == unit_group(3));
}

TEST_CASE("certification examples") {
  CHECK(full_rank_certified(make_angle_system({1, 2, 8})));
  CHECK_FALSE(full_rank_certified(make_angle_system({1, 2, 4})));
  CHECK(full_rank_certified(make_angle_system({4, 5, 6})));
  CHECK(rank_lower_bound(make_angle_system({1, 2, 4})) == 1);
  CHECK(rank_lower_bound(make_angle_system({1, 2, 10})) == 2);
  CHECK(rank_exceeds_trivial_bound(make_angle_system({1, 2, 10})));
  CHECK(rank_lower_bound(make_angle_system({1, 2, 8})) == 5);

  CHECK(make_certificate(make_angle_system({1, 2, 8})).verdict == Verdict::DenseInStratumComponent);
  CHECK(make_certificate(make_angle_system({1, 2, 4})).verdict == Verdict::Inconclusive);
  const auto eq = make_certificate(make_angle_system({1, 1, 1}));
  CHECK(eq.verdict == Verdict::FullRankUndetermined);
  CHECK(eq.genus == 1);
  CHECK(eq.full_rank_certified);
}

TEST_CASE("k = 3 is always certified") {
  for (const auto& q : {std::vector<std::int64_t>{1, 1, 1}}) {
    const auto s = make_angle_system(q);
    CHECK(full_rank_by_pi3(s));
    CHECK(full_rank_certified(s));
  }
}

TEST_CASE("verdict names round-trip") {
  for (auto v : {Verdict::DenseInStratumComponent, Verdict::FullRankUndetermined, Verdict::Inconclusive})
    CHECK(parse_verdict(verdict_name(v)) == v);
  CHECK_FALSE(parse_verdict("Dense").has_value());
}

TEST_CASE("certificates agree with the oracle and satisfy their invariants") {
  for (std::int64_t k = 3; k <= 90; ++k)
    for (std::int64_t a = 1; 3 * a <= k; ++a)
      for (std::int64_t b = a; a + 2 * b <= k; ++b) {
        const auto c = k - a - b;
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        const auto s = make_angle_system({a, b, c});
        const auto cert = make_certificate(s);
        const auto o = oracle::certify({a, b, c}, k);
        INFO(s.str());
        REQUIRE(cert.full_rank_certified == o.certified);
        REQUIRE(std::vector<std::int64_t>(o.divisors.begin(), o.divisors.end()) == cert.trace.divisors);
        REQUIRE(std::vector<std::int64_t>(o.a_gens.begin(), o.a_gens.end()) == members(cert.trace.a_generators));
        REQUIRE(o.closure_size == cert.trace.a_closure.size());
        REQUIRE(o.num_classes == cert.trace.classes.size());

        for (auto d : cert.trace.divisors) REQUIRE(k % d == 0);
        if (t_total(s, -1) > 1) REQUIRE(cert.trace.divisors.front() == 1);
        REQUIRE(cert.trace.a_generators.contains(1));
        REQUIRE(cert.trace.a_generators.contains(k - 1));
        REQUIRE(cert.trace.a_generators.is_unit_subset());
        REQUIRE(cert.rank_lower_bound >= 1);
        REQUIRE(cert.rank_lower_bound <= cert.genus);
        if (cert.full_rank_certified) REQUIRE(cert.rank_lower_bound == cert.genus);
        if (cert.verdict == Verdict::DenseInStratumComponent)
          REQUIRE((cert.full_rank_certified && cert.hyperelliptic_excluded && cert.genus >= 3));
        if (full_rank_by_pi3(s)) REQUIRE(cert.full_rank_certified);
      }
}

TEST_CASE("enumeration examples") {
  auto dense = [](std::int64_t k_max) {
    std::vector<std::array<std::int64_t, 3>> out;
    for (const auto& e : enumerate_certificates(k_max, {}, 1))
      if (e.cert.full_rank_certified) out.push_back({e.q1, e.q2, e.q3});
    return out;
  };
  CHECK(dense(11) == std::vector<std::array<std::int64_t, 3>>{{1, 2, 8}, {1, 3, 7}, {2, 4, 5}});
  CHECK(dense(7).empty());
  CHECK(enumerate_certificates(49, {true, true, true}).size() == 1402);
  CHECK(enumerate_certificates(49, {true, true, false}).size() == 1436);
  CHECK(enumerate_certificates(3, {true, true, true}).empty());
  CHECK_THROWS_AS(enumerate_certificates(2, {}), InvalidInput);
}

TEST_CASE("enumeration order, filters and worker independence") {
  const auto one = enumerate_certificates(41, {false, false, false}, 1);
  const auto many = enumerate_certificates(41, {false, false, false}, 5);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    REQUIRE(std::tie(one[i].q1, one[i].q2, one[i].q3) == std::tie(many[i].q1, many[i].q2, many[i].q3));
    REQUIRE(one[i].cert.verdict == many[i].cert.verdict);
    REQUIRE(one[i].cert.trace.a_closure == many[i].cert.trace.a_closure);
    if (i) {
      const auto k0 = one[i - 1].q1 + one[i - 1].q2 + one[i - 1].q3;
      const auto k1 = one[i].q1 + one[i].q2 + one[i].q3;
      REQUIRE(std::tie(k0, one[i - 1].q1, one[i - 1].q2) < std::tie(k1, one[i].q1, one[i].q2));
    }
  }
  // Weakening the filters keeps every certificate of the stricter run unchanged.
  const auto strict = enumerate_certificates(41, {true, true, true}, 2);
  std::size_t j = 0;
  for (const auto& e : strict) {
    while (std::tie(one[j].q1, one[j].q2, one[j].q3) != std::tie(e.q1, e.q2, e.q3)) ++j;
    REQUIRE(one[j].cert.verdict == e.cert.verdict);
  }
}
