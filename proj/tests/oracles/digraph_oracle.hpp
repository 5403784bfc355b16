#pragma once

// Brute-force references for directed loops: every edge subset is tested
// for being one directed cycle, and ranks are taken modulo a prime.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

inline bool strongly_connected(std::size_t nv, const EdgeList& edges) {
  std::vector<std::vector<bool>> r(nv, std::vector<bool>(nv, false));
  for (std::size_t v = 0; v < nv; ++v) r[v][v] = true;
  for (auto [a, b] : edges) r[a][b] = true;
  for (std::size_t m = 0; m < nv; ++m)
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < nv; ++j)
        if (r[i][m] && r[m][j]) r[i][j] = true;
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j)
      if (!r[i][j]) return false;
  return true;
}

// Subsets (as bitmasks) forming a single directed cycle.
inline std::vector<std::uint32_t> cycle_subsets(std::size_t nv, const EdgeList& edges) {
  std::vector<std::uint32_t> out;
  const std::size_t m = edges.size();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> outd(nv, 0), ind(nv, 0), next(nv, -1);
    std::size_t cnt = 0;
    int start = -1;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      ++cnt;
      ++outd[edges[i].first];
      ++ind[edges[i].second];
      next[edges[i].first] = static_cast<int>(edges[i].second);
      start = static_cast<int>(edges[i].first);
    }
    bool ok = true;
    for (std::size_t v = 0; v < nv && ok; ++v) ok = outd[v] == ind[v] && outd[v] <= 1;
    if (!ok) continue;
    std::size_t steps = 0;
    int v = start;
    do {
      v = next[v];
      ++steps;
    } while (v != start && steps <= cnt);
    if (steps == cnt) out.push_back(mask);
  }
  return out;
}

inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a) {
  constexpr std::int64_t p = 1'000'000'007;
  auto power = [&](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] % p == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const auto inv = power((a[rank][c] % p + p) % p, p - 2);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] % p == 0) continue;
      const auto f = (a[r][c] % p + p) % p * inv % p;
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline std::size_t loop_dim(std::size_t nv, const EdgeList& edges) {
  std::vector<std::vector<std::int64_t>> rows;
  for (auto mask : cycle_subsets(nv, edges)) {
    std::vector<std::int64_t> row(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) row[i] = mask >> i & 1;
    rows.push_back(row);
  }
  return rank_mod_p(rows);
}

}  // namespace oracle
