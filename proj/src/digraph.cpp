#include "unfold/digraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "unfold/errors.hpp"

namespace unfold {

Digraph::Digraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.tail >= num_vertices_ || e.tip >= num_vertices_)
      throw InvalidInput("edge (" + std::to_string(e.tail) + "," + std::to_string(e.tip) + ") out of range");
  }
}

Digraph Digraph::parse(std::istream& in) {
  long long v = -1, e = -1;
  if (!(in >> v >> e) || v < 0 || e < 0) throw InvalidInput("graph file: expected header 'V E'");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(e));
  for (long long i = 0; i < e; ++i) {
    long long a = -1, b = -1;
    if (!(in >> a >> b) || a < 0 || b < 0)
      throw InvalidInput("graph file: bad edge line " + std::to_string(i + 1));
    edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
  }
  return Digraph(static_cast<std::size_t>(v), std::move(edges));
}

std::string Digraph::to_text() const {
  std::ostringstream os;
  os << num_vertices_ << ' ' << edges_.size() << '\n';
  for (const auto& e : edges_) os << e.tail << ' ' << e.tip << '\n';
  return os.str();
}

std::vector<std::size_t> LoopVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) out.push_back(i);
  }
  return out;
}

namespace {

std::vector<bool> reachable(const Digraph& g, std::size_t from, bool reverse) {
  std::vector<std::vector<std::size_t>> adj(g.num_vertices());
  for (const auto& e : g.edges()) {
    if (reverse)
      adj[e.tip].push_back(e.tail);
    else
      adj[e.tail].push_back(e.tip);
  }
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

LoopVector loop_from_edges(std::size_t num_edges, const std::vector<std::size_t>& edge_ids) {
  LoopVector lv{std::vector<ExactFraction>(num_edges)};
  for (const auto id : edge_ids) lv.coords[id] = ExactFraction(1);
  return lv;
}

}  // namespace

bool is_strongly_connected(const Digraph& g) {
  if (g.num_vertices() == 0) throw InvalidInput("strong connectivity needs at least one vertex");
  const auto fwd = reachable(g, 0, false);
  const auto bwd = reachable(g, 0, true);
  return std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
}

std::vector<LoopVector> embedded_loops(const Digraph& g, std::size_t cap) {
  if (cap < 1) throw InvalidInput("loop cap must be positive");
  const std::size_t nv = g.num_vertices();
  std::vector<std::vector<std::size_t>> out_edges(nv);
  for (std::size_t i = 0; i < g.num_edges(); ++i) out_edges[g.edges()[i].tail].push_back(i);

  std::vector<LoopVector> loops;
  std::vector<bool> on_path(nv, false);
  std::vector<std::size_t> path;  // edge ids

  // Loops are rooted at their smallest vertex; the search from `start` only
  // enters vertices above it, so each loop is produced once.
  auto extend = [&](auto&& self, std::size_t start, std::size_t v) -> void {
    for (const auto id : out_edges[v]) {
      const auto w = g.edges()[id].tip;
      if (w == start) {
        path.push_back(id);
        if (loops.size() == cap) throw CapExceeded(cap);
        loops.push_back(loop_from_edges(g.num_edges(), path));
        path.pop_back();
      } else if (w > start && !on_path[w]) {
        on_path[w] = true;
        path.push_back(id);
        self(self, start, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < nv; ++s) {
    on_path[s] = true;
    extend(extend, s, s);
    on_path[s] = false;
  }
  return loops;
}

std::size_t exact_rank(std::vector<std::vector<ExactFraction>> rows) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != width) throw InvalidInput("exact_rank: ragged rows");
  }
  std::vector<std::vector<ExactFraction>> basis;
  std::vector<std::size_t> pivots;
  for (auto& row : rows) {
    // Basis row j is zero at the pivots of rows before it, so one pass in
    // insertion order clears every pivot column.
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto p = pivots[j];
      if (row[p].is_zero()) continue;
      const ExactFraction factor = row[p] / basis[j][p];
      for (std::size_t c = 0; c < width; ++c) {
        if (!basis[j][c].is_zero()) row[c] -= factor * basis[j][c];
      }
    }
    const auto it = std::find_if(row.begin(), row.end(), [](const ExactFraction& x) { return !x.is_zero(); });
    if (it == row.end()) continue;
    pivots.push_back(static_cast<std::size_t>(it - row.begin()));
    basis.push_back(std::move(row));
    if (basis.size() == width) break;
  }
  return basis.size();
}

std::size_t loop_space_dim(const Digraph& g, std::size_t cap) {
  auto loops = embedded_loops(g, cap);
  std::vector<std::vector<ExactFraction>> rows;
  rows.reserve(loops.size());
  for (auto& l : loops) rows.push_back(std::move(l.coords));
  return exact_rank(std::move(rows));
}

Digraph contract_loop(const Digraph& g, const LoopVector& loop) {
  if (loop.coords.size() != g.num_edges()) throw InvalidInput("loop vector length does not match edge count");
  for (const auto& c : loop.coords) {
    if (!c.is_zero() && c != ExactFraction(1)) throw InvalidInput("loop vector is not a 0/1 vector");
  }
  const auto support = loop.support();
  if (support.empty()) throw InvalidInput("empty loop");

  // Embedded: each support vertex has exactly one outgoing and one incoming
  // support edge, and walking the edges from any one returns after |support| steps.
  std::vector<int> out_deg(g.num_vertices(), 0), in_deg(g.num_vertices(), 0);
  std::vector<std::size_t> next_edge(g.num_vertices(), 0);
  for (const auto id : support) {
    const auto& e = g.edges()[id];
    ++out_deg[e.tail];
    ++in_deg[e.tip];
    next_edge[e.tail] = id;
  }
  std::vector<bool> in_loop(g.num_vertices(), false);
  for (const auto id : support) in_loop[g.edges()[id].tail] = true;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (out_deg[v] > 1 || in_deg[v] > 1 || (in_loop[v] && in_deg[v] != 1))
      throw InvalidInput("loop is not embedded");
  }
  std::size_t steps = 0;
  const auto first = g.edges()[support.front()].tail;
  auto v = first;
  do {
    v = g.edges()[next_edge[v]].tip;
    ++steps;
  } while (v != first && steps <= support.size());
  if (steps != support.size()) throw InvalidInput("loop is not a single directed cycle");

  const auto merged = static_cast<std::size_t>(std::find(in_loop.begin(), in_loop.end(), true) - in_loop.begin());
  std::vector<std::size_t> relabel(g.num_vertices());
  std::size_t next = 0;
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    if (in_loop[u] && u != merged) continue;
    relabel[u] = next++;
  }
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    if (in_loop[u]) relabel[u] = relabel[merged];
  }

  std::vector<bool> drop(g.num_edges(), false);
  for (const auto id : support) drop[id] = true;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (!drop[i]) edges.push_back({relabel[g.edges()[i].tail], relabel[g.edges()[i].tip]});
  }
  return Digraph(next, std::move(edges));
}

Digraph cylinder_digraph(const CylinderDigraphSpec& spec) {
  if (spec.genus < 1 || spec.zero_count < 1) throw InvalidInput("cylinder digraph needs g >= 1 and s >= 1");
  const auto expected = static_cast<std::size_t>(2 * spec.genus - 2 + spec.zero_count);
  if (spec.saddle_connections.size() != expected)
    throw InvalidInput("malformed cylinder digraph: " + std::to_string(spec.saddle_connections.size()) +
                       " saddle connections, expected 2g-2+s = " + std::to_string(expected));
  std::size_t nv = 0;
  std::vector<Edge> edges;
  for (const auto& [below, above] : spec.saddle_connections) {
    nv = std::max({nv, below + 1, above + 1});
    edges.push_back({below, above});
  }
  return Digraph(nv, std::move(edges));
}

bool free_cylinder_criterion(const CylinderDigraphSpec& spec, int num_free_cylinders) {
  cylinder_digraph(spec);  // validates the edge count
  return num_free_cylinders >= spec.genus + spec.zero_count - 1;
}

int forced_cylinder_count(const CylinderDigraphSpec& spec) {
  const auto g = cylinder_digraph(spec);
  return static_cast<int>(g.num_edges()) - spec.genus + 1;
}

Digraph random_strongly_connected(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges) {
  if (max_vertices < 1 || max_edges < max_vertices)
    throw InvalidInput("random digraph needs 1 <= max_vertices <= max_edges");
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  for (;;) {
    const std::size_t nv = uniform(1, max_vertices);
    std::vector<Edge> edges;
    const std::size_t cycle_len = uniform(1, nv);
    for (std::size_t i = 0; i < cycle_len; ++i) edges.push_back({i, (i + 1) % cycle_len});
    std::size_t covered = cycle_len;
    while (covered < nv) {
      const std::size_t from = uniform(0, covered - 1);
      const std::size_t to = uniform(0, covered - 1);
      const std::size_t fresh = uniform(1, std::min<std::size_t>(nv - covered, 3));
      std::size_t prev = from;
      for (std::size_t j = 0; j < fresh; ++j) {
        edges.push_back({prev, covered + j});
        prev = covered + j;
      }
      edges.push_back({prev, to});
      covered += fresh;
    }
    if (edges.size() > max_edges) continue;
    const std::size_t target = uniform(edges.size(), max_edges);
    while (edges.size() < target) edges.push_back({uniform(0, nv - 1), uniform(0, nv - 1)});

    std::vector<std::size_t> perm(nv);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& e : edges) e = {perm[e.tail], perm[e.tip]};
    std::shuffle(edges.begin(), edges.end(), rng);
    return Digraph(nv, std::move(edges));
  }
}

}  // namespace unfold
