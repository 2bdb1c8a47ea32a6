#include "abchrom/coloring.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

#include <boost/pending/disjoint_sets.hpp>

#include "abchrom/error.hpp"

namespace abchrom {

namespace {

int validate(const std::vector<Color>& colors, int k) {
  std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
  for (auto col : colors) {
    if (col < 1 || col > k) throw InvalidColoring("color " + std::to_string(col) + " outside [1," + std::to_string(k) + "]");
    used[static_cast<std::size_t>(col)] = 1;
  }
  for (int col = 1; col <= k; ++col)
    if (!used[static_cast<std::size_t>(col)]) throw InvalidColoring("color " + std::to_string(col) + " has an empty class");
  return k;
}

}  // namespace

Coloring::Coloring(std::vector<Color> assignment) : colors_(std::move(assignment)) {
  int k = 0;
  for (auto col : colors_) k = std::max(k, col);
  k_ = validate(colors_, k);
}

Coloring::Coloring(std::vector<Color> assignment, int k) : colors_(std::move(assignment)) {
  if (k < 0) throw InvalidColoring("negative color count");
  k_ = validate(colors_, k);
}

std::vector<std::vector<Vertex>> Coloring::classes() const {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(k_));
  for (std::size_t v = 0; v < colors_.size(); ++v) out[static_cast<std::size_t>(colors_[v] - 1)].push_back(static_cast<Vertex>(v));
  return out;
}

Coloring Coloring::canonical() const {
  std::vector<Color> relabel(static_cast<std::size_t>(k_) + 1, 0);
  std::vector<Color> out;
  out.reserve(colors_.size());
  Color next = 1;
  for (auto col : colors_) {
    auto& r = relabel[static_cast<std::size_t>(col)];
    if (!r) r = next++;
    out.push_back(r);
  }
  return Coloring(std::move(out), k_);
}

void require_paired(const Graph& g, const Coloring& c) {
  if (c.size() != g.order())
    throw SizeMismatch("coloring has " + std::to_string(c.size()) + " entries but the graph has " +
                       std::to_string(g.order()) + " vertices");
}

bool is_proper(const Graph& g, const Coloring& c) {
  require_paired(g, c);
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return c[e.first] == c[e.second]; });
}

bool is_acyclic(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw PreconditionError("acyclicity is only defined for proper colorings");
  // Group edges by unordered color pair, then run union-find inside each group.
  std::vector<std::tuple<Color, Color, Vertex, Vertex>> keyed;
  keyed.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) {
    auto a = c[u], b = c[v];
    if (a > b) std::swap(a, b);
    keyed.emplace_back(a, b, u, v);
  }
  std::sort(keyed.begin(), keyed.end());

  boost::disjoint_sets_with_storage<> sets(static_cast<std::size_t>(g.order()));
  for (std::size_t lo = 0; lo < keyed.size();) {
    auto hi = lo;
    while (hi < keyed.size() && std::get<0>(keyed[hi]) == std::get<0>(keyed[lo]) &&
           std::get<1>(keyed[hi]) == std::get<1>(keyed[lo]))
      ++hi;
    for (auto i = lo; i < hi; ++i) {
      sets.make_set(static_cast<std::size_t>(std::get<2>(keyed[i])));
      sets.make_set(static_cast<std::size_t>(std::get<3>(keyed[i])));
    }
    for (auto i = lo; i < hi; ++i) {
      auto ru = sets.find_set(static_cast<std::size_t>(std::get<2>(keyed[i])));
      auto rv = sets.find_set(static_cast<std::size_t>(std::get<3>(keyed[i])));
      if (ru == rv) return false;
      sets.link(ru, rv);
    }
    lo = hi;
  }
  return true;
}

Coloring trivial_coloring(const Graph& g) {
  std::vector<Color> colors(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) colors[static_cast<std::size_t>(v)] = v + 1;
  return Coloring(std::move(colors), g.order());
}

ColorNeighborhood color_neighborhood(const Graph& g, const Coloring& c, Vertex v) {
  require_paired(g, c);
  ColorNeighborhood cn;
  for (auto w : g.neighbors(v)) cn.open.insert(c[w]);
  cn.closed = cn.open;
  cn.closed.insert(c[v]);
  return cn;
}

std::vector<Color> missing_colors(const Graph& g, const Coloring& c, Vertex v) {
  std::vector<char> seen(static_cast<std::size_t>(c.num_colors()) + 1, 0);
  seen[static_cast<std::size_t>(c[v])] = 1;
  for (auto w : g.neighbors(v)) seen[static_cast<std::size_t>(c[w])] = 1;
  std::vector<Color> out;
  for (Color col = 1; col <= c.num_colors(); ++col)
    if (!seen[static_cast<std::size_t>(col)]) out.push_back(col);
  return out;
}

bool closes_bicolored_cycle(const Graph& g, const std::vector<Color>& colors, Vertex v, Color color) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> component(n, -1);
  std::vector<Vertex> queue;
  // For each other color j, v closes a (color, j) cycle iff two j-neighbors of v are already
  // joined by a (color, j)-path avoiding v.
  auto nbrs = g.neighbors(v);
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    const Color j = colors[static_cast<std::size_t>(nbrs[a])];
    if (j == 0 || j == color) continue;
    bool seen_earlier = false;
    for (std::size_t b = 0; b < a; ++b)
      if (colors[static_cast<std::size_t>(nbrs[b])] == j) seen_earlier = true;
    if (seen_earlier) continue;  // j already handled

    std::fill(component.begin(), component.end(), -1);
    int label = 0;
    for (std::size_t b = a; b < nbrs.size(); ++b) {
      const Vertex start = nbrs[b];
      if (colors[static_cast<std::size_t>(start)] != j) continue;
      if (component[static_cast<std::size_t>(start)] != -1) return true;
      component[static_cast<std::size_t>(start)] = label;
      queue.assign(1, start);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto w : g.neighbors(queue[head])) {
          if (w == v || component[static_cast<std::size_t>(w)] != -1) continue;
          const Color cw = colors[static_cast<std::size_t>(w)];
          if (cw != j && cw != color) continue;
          component[static_cast<std::size_t>(w)] = label;
          queue.push_back(w);
        }
      }
      ++label;
    }
  }
  return false;
}

std::optional<std::vector<Color>> find_acyclic_reassignment(const Graph& g, const std::vector<Color>& colors,
                                                            std::span<const Vertex> targets,
                                                            const std::vector<std::vector<Color>>& candidates,
                                                            SearchBudget& budget) {
  std::vector<Color> work = colors;
  for (auto v : targets) work[static_cast<std::size_t>(v)] = 0;
  std::vector<Color> chosen(targets.size(), 0);
  std::vector<std::size_t> cursor(targets.size(), 0);

  std::size_t depth = 0;
  while (true) {
    if (depth == targets.size()) return chosen;
    const Vertex v = targets[depth];
    const auto& options = candidates[depth];
    bool placed = false;
    while (cursor[depth] < options.size()) {
      const Color col = options[cursor[depth]++];
      budget.charge();
      bool clash = false;
      for (auto w : g.neighbors(v))
        if (work[static_cast<std::size_t>(w)] == col) clash = true;
      if (clash) continue;
      if (closes_bicolored_cycle(g, work, v, col)) continue;
      work[static_cast<std::size_t>(v)] = col;
      chosen[depth] = col;
      placed = true;
      break;
    }
    if (placed) {
      ++depth;
      if (depth < targets.size()) cursor[depth] = 0;
      continue;
    }
    // Exhausted this level: undo and backtrack.
    work[static_cast<std::size_t>(v)] = 0;
    if (depth == 0) return std::nullopt;
    --depth;
    work[static_cast<std::size_t>(targets[depth])] = 0;
  }
}

}  // namespace abchrom
