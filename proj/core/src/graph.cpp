#include "abchrom/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "abchrom/error.hpp"

namespace abchrom {

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 0) throw InvalidGraph(InvalidGraph::Kind::negative_order, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  g.matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw InvalidGraph(InvalidGraph::Kind::vertex_out_of_range,
                         "edge (" + std::to_string(a) + "," + std::to_string(b) + ") has an endpoint outside [0," +
                             std::to_string(n) + ")");
    }
    if (a == b) throw InvalidGraph(InvalidGraph::Kind::self_loop, "self-loop at vertex " + std::to_string(a));
    auto u = std::min(a, b);
    auto v = std::max(a, b);
    auto& cell = g.matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    if (cell) {
      throw InvalidGraph(InvalidGraph::Kind::duplicate_edge,
                         "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    cell = 1;
    g.matrix_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)] = 1;
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
    g.edges_.emplace_back(u, v);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  return g;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.sequence.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) s.sequence.push_back(g.degree(v));
  std::sort(s.sequence.begin(), s.sequence.end(), std::greater<>());
  if (!s.sequence.empty()) {
    s.max_degree = s.sequence.front();
    s.min_degree = s.sequence.back();
  }
  return s;
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.order();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.reserve(static_cast<std::size_t>(g.size() + h.size() + ng * h.order()));
  for (auto [u, v] : h.edges()) edges.emplace_back(u + ng, v + ng);
  for (Vertex u = 0; u < ng; ++u)
    for (Vertex w = 0; w < h.order(); ++w) edges.emplace_back(u, w + ng);
  return Graph::build(ng + h.order(), edges);
}

std::vector<std::vector<Vertex>> biconnected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Vertex>> blocks;
  int timer = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<Vertex> block;
          Edge e;
          do {
            e = stack.back();
            stack.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
          } while (e != Edge{u, w});
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (disc[v] == -1) dfs(v, -1);
  return blocks;
}

namespace {

int block_edge_count(const Graph& g, const std::vector<Vertex>& block) {
  int count = 0;
  for (std::size_t a = 0; a < block.size(); ++a)
    for (std::size_t b = a + 1; b < block.size(); ++b)
      if (g.adjacent(block[a], block[b])) ++count;
  return count;
}

}  // namespace

bool is_cactus(const Graph& g) {
  // A block with more edges than vertices carries two cycles sharing an edge.
  for (const auto& block : biconnected_components(g))
    if (block.size() > 2 && block_edge_count(g, block) != static_cast<int>(block.size())) return false;
  return true;
}

bool is_odd_cycle_graph(const Graph& g) {
  for (const auto& block : biconnected_components(g)) {
    if (block.size() <= 2) continue;
    if (block_edge_count(g, block) != static_cast<int>(block.size())) return false;
    if (block.size() % 2 == 0) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == g.order();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  return Graph::build(static_cast<int>(keep.size()), edges);
}

}  // namespace abchrom
