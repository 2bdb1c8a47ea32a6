#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace abchrom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Edges keep the order they were supplied in, each normalized to u < v;
/// that order is what serializers write back out.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Throws InvalidGraph on an out-of-range endpoint,
  /// a self-loop or a repeated pair (in either orientation).
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  /// Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
  }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> matrix_;
};

struct DegreeStats {
  int max_degree = 0;
  int min_degree = 0;
  std::vector<int> sequence;  ///< non-increasing
};

DegreeStats degree_stats(const Graph& g);

/// G ∨ H: disjoint union plus every G–H edge. H's vertices follow G's.
Graph join(const Graph& g, const Graph& h);

/// Vertex sets of the biconnected components (blocks). Isolated vertices form no block.
std::vector<std::vector<Vertex>> biconnected_components(const Graph& g);

/// Any two cycles share at most one vertex.
bool is_cactus(const Graph& g);

/// No cycle of even length. Decided blockwise: every block is a bridge or an odd cycle.
bool is_odd_cycle_graph(const Graph& g);

bool is_connected(const Graph& g);

/// Induced subgraph on `keep` (in the given order); vertex keep[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace abchrom
