#include <doctest.h>

#include <numeric>

#include "oracles/arith_oracle.hpp"
#include "unfold/errors.hpp"
#include "unfold/hodge.hpp"

using namespace unfold;

TEST_CASE("eigen dimensions") {
  const auto p = make_angle_system({1, 2, 4});
  CHECK(eigenform_dim(p, 1) == 1);
  CHECK(eigenform_dim(p, 0) == 0);
  CHECK(eigenform_dim(p, 3) == 0);
  CHECK(eigenspace_dim(p, 1) == 1);
  CHECK(eigenspace_dim(p, 0) == 0);
  CHECK(eigenspace_dim(make_angle_system({1, 2, 8}), 4) == 1);
  CHECK(eigenspace_dim(make_angle_system({1, 1, 1}), 1) == 1);
}

TEST_CASE("genus examples") {
  CHECK(genus(make_angle_system({1, 2, 4})) == 3);
  CHECK(genus(make_angle_system({1, 2, 8})) == 5);
  CHECK(genus(make_angle_system({1, 1, 1})) == 1);
  CHECK(riemann_hurwitz_genus(make_angle_system({1, 2, 8})) == 5);
}

TEST_CASE("stratum examples") {
  const auto a = stratum(make_angle_system({1, 2, 8}));
  CHECK(a.zero_orders == std::vector<int>{7, 1});
  CHECK(a.marked_points == 1);
  CHECK(a.str() == "(7,1)");
  const auto b = stratum(make_angle_system({1, 2, 4}));
  CHECK(b.zero_orders == std::vector<int>{3, 1});
  CHECK(b.marked_points == 1);
  const auto c = stratum(make_angle_system({4, 5, 6}));
  CHECK(c.zero_orders == std::vector<int>{3, 1, 1, 1});
  CHECK(c.marked_points == 5);
  CHECK(stratum(make_angle_system({1, 1, 1})).zero_orders.empty());
  CHECK(stratum(make_angle_system({1, 1, 1})).str() == "()");
  CHECK_THROWS_AS(stratum(make_angle_system({1, 1, 1, 5})), InvalidInput);
}

TEST_CASE("hyperellipticity and pi/3") {
  CHECK(hyperelliptic_excluded(make_angle_system({1, 2, 8})));
  CHECK_FALSE(hyperelliptic_excluded(make_angle_system({1, 1, 3})));
  CHECK_FALSE(hyperelliptic_excluded(make_angle_system({1, 2, 3})));
  CHECK(full_rank_by_pi3(make_angle_system({1, 1, 1})));
  CHECK_FALSE(full_rank_by_pi3(make_angle_system({1, 2, 4})));
  CHECK_FALSE(full_rank_by_pi3(make_angle_system({1, 1, 4})));
}

TEST_CASE("genus, stratum and eigen profile agree with the oracle for k <= 200") {
  for (std::int64_t k = 3; k <= 200; ++k)
    for (std::int64_t a = 1; 3 * a <= k; ++a)
      for (std::int64_t b = a; a + 2 * b <= k; ++b) {
        const auto c = k - a - b;
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        const std::vector<std::int64_t> q{a, b, c};
        const auto s = make_angle_system({a, b, c});
        const int g = genus(s);
        REQUIRE(g == oracle::genus_by_eigen_sum(q, k));
        REQUIRE(g == oracle::genus_by_ramification(q, k));
        REQUIRE(g == riemann_hurwitz_genus(s));

        const auto st = stratum(s);
        int marked = 0;
        REQUIRE(st.zero_orders == oracle::zero_orders(q, k, &marked));
        REQUIRE(st.marked_points == marked);
        REQUIRE(std::accumulate(st.zero_orders.begin(), st.zero_orders.end(), 0) == 2 * g - 2);
        std::int64_t gsum = 0;
        for (auto qi : q) gsum += std::gcd(qi, k);
        REQUIRE(st.marked_points + static_cast<std::int64_t>(st.zero_orders.size()) == gsum);
        REQUIRE(st.zero_orders.empty() == (g == 1));

        if (k > 60) continue;
        const auto prof = eigen_profile(s);
        REQUIRE(prof.abs_dims[0] == 0);
        int holo = 0, abs = 0;
        for (std::int64_t l = 1; l < k; ++l) {
          const auto i = static_cast<std::size_t>(l);
          REQUIRE(prof.abs_dims[i] == prof.holo_dims[i] + prof.holo_dims[static_cast<std::size_t>(k - l)]);
          REQUIRE(eigenspace_dim(s, l) == eigenspace_dim(s, l + 2 * k));
          REQUIRE(eigenspace_dim(s, l) == eigenspace_dim(s, l - k));
          holo += prof.holo_dims[i];
          abs += prof.abs_dims[i];
        }
        REQUIRE(holo == g);
        REQUIRE(abs == 2 * g);
      }
}
