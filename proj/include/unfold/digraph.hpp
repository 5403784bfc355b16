#pragma once

// Directed multigraphs, their embedded directed loops, and the loop space
// L(Γ) ⊂ ℚ^E spanned by them.

#include <cstddef>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unfold/angle_core.hpp"

namespace unfold {

struct Edge {
  std::size_t tail = 0;
  std::size_t tip = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite multidigraph; parallel edges and self-loops allowed. The edge list
/// order fixes the basis order of ℚ^E.
class Digraph {
 public:
  Digraph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Text format: "V E" then E lines "tail tip", 0-based.
  static Digraph parse(std::istream& in);
  std::string to_text() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t num_vertices_;
  std::vector<Edge> edges_;
};

/// Element of ℚ^E. Embedded loops have 0/1 coordinates.
struct LoopVector {
  std::vector<ExactFraction> coords;

  /// Indices of the nonzero coordinates.
  std::vector<std::size_t> support() const;
  friend bool operator==(const LoopVector&, const LoopVector&) = default;
};

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap)
      : std::runtime_error("embedded loop count exceeded cap " + std::to_string(cap)) {}
};

inline constexpr std::size_t kDefaultLoopCap = 1'000'000;

bool is_strongly_connected(const Digraph& g);

/// Every embedded directed loop exactly once, found by backtracking from its
/// smallest vertex. Parallel edges give distinct loops.
std::vector<LoopVector> embedded_loops(const Digraph& g, std::size_t cap = kDefaultLoopCap);

/// Rank over ℚ of the given rows (all of equal length).
std::size_t exact_rank(std::vector<std::vector<ExactFraction>> rows);

/// dim L(Γ): rank of the embedded loop vectors.
std::size_t loop_space_dim(const Digraph& g, std::size_t cap = kDefaultLoopCap);

/// Collapses an embedded loop to one vertex and deletes its edges. The merged
/// vertex takes the place of the loop's smallest vertex; other vertices keep
/// their relative order, and surviving edges keep theirs.
Digraph contract_loop(const Digraph& g, const LoopVector& loop);

/// Vertices are horizontal cylinders; one edge per horizontal saddle
/// connection, from the cylinder below to the cylinder above.
struct CylinderDigraphSpec {
  int genus = 0;
  int zero_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> saddle_connections;
};

/// Throws InvalidInput unless there are exactly 2g − 2 + s saddle connections.
Digraph cylinder_digraph(const CylinderDigraphSpec& spec);

/// True iff num_free_cylinders reaches the stratum-forcing count g + s − 1.
bool free_cylinder_criterion(const CylinderDigraphSpec& spec, int num_free_cylinders);

/// Lower bound |E| − g + 1 = g − 1 + s on the number of cylinders when every
/// cylinder is free and the twist space equals the cylinder preserving space.
int forced_cylinder_count(const CylinderDigraphSpec& spec);

/// Random strongly connected digraph with 1..max_vertices vertices and at most
/// max_edges edges, built from a cycle plus random ears and extra edges.
Digraph random_strongly_connected(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges);

}  // namespace unfold
