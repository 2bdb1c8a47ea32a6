#include "abchrom/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "abchrom/error.hpp"

namespace abchrom::corpus {

namespace {

std::uint64_t code_for(const Graph& g, const std::vector<Vertex>& order) {
  const auto n = order.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
  return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw PreconditionError("canonical codes are limited to 11 vertices");
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  // Degree groups [start, end) are permuted independently, odometer style.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t s = 0; s < order.size();) {
    auto e = s;
    while (e < order.size() && g.degree(order[e]) == g.degree(order[s])) ++e;
    groups.emplace_back(s, e);
    s = e;
  }
  std::uint64_t best = code_for(g, order);
  while (true) {
    std::size_t gi = 0;
    for (; gi < groups.size(); ++gi) {
      auto [s, e] = groups[gi];
      if (std::next_permutation(order.begin() + static_cast<long>(s), order.begin() + static_cast<long>(e))) break;
    }
    if (gi == groups.size()) break;
    best = std::min(best, code_for(g, order));
  }
  return best;
}

namespace {

std::vector<Graph> grow(const std::vector<Graph>& smaller, int n) {
  std::vector<Graph> out;
  std::set<std::uint64_t> seen;
  const int m = n - 1;
  for (const auto& base : smaller) {
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<Edge> edges = base.edges();
      for (int v = 0; v < m; ++v)
        if (mask & (1u << v)) edges.emplace_back(v, m);
      auto g = Graph::build(n, edges);
      if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 10) throw PreconditionError("connected graph generation supports 1..10 vertices");
  std::vector<Graph> level{Graph::build(1, std::span<const Edge>{})};
  for (int k = 2; k <= n; ++k) level = grow(level, k);
  return level;
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
  if (max_n < 1) return {};
  if (max_n > 10) throw PreconditionError("connected graph generation supports 1..10 vertices");
  std::vector<Graph> level{Graph::build(1, std::span<const Edge>{})};
  std::vector<Graph> out = level;
  for (int k = 2; k <= max_n; ++k) {
    level = grow(level, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Graph> random_graphs(std::size_t count, int min_n, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(min_n, max_n);
  std::uniform_real_distribution<double> density(0.15, 0.75);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = order(rng);
    std::bernoulli_distribution coin(density(rng));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    out.push_back(Graph::build(n, edges));
  }
  return out;
}

}  // namespace abchrom::corpus
