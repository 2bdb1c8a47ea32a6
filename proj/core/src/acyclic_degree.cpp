#include "abchrom/acyclic_degree.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <boost/dynamic_bitset.hpp>

#include "abchrom/budget.hpp"
#include "abchrom/error.hpp"
#include "abchrom/exact.hpp"

namespace abchrom {

namespace {

using Bits = boost::dynamic_bitset<>;

// All non-dominated even paths from a to b avoiding `avoid`.
void paths_between(const Graph& g, Vertex avoid, Vertex a, Vertex b, SearchBudget& budget,
                   std::vector<std::vector<Vertex>>& out) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vertex> path{a};
  std::vector<char> on_path(n, 0);
  on_path[static_cast<std::size_t>(a)] = 1;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue;

  auto reaches_target = [&](Vertex from) {
    std::fill(seen.begin(), seen.end(), 0);
    queue.assign(1, from);
    seen[static_cast<std::size_t>(from)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto w : g.neighbors(queue[head])) {
        if (w == b) return true;
        if (w == avoid || on_path[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
    return false;
  };
  // Position q (0-based) joined to an earlier position p with q - p odd and >= 3 is a dominating shortcut.
  auto has_shortcut = [&](Vertex w) {
    const auto q = path.size();
    for (std::size_t p = 0; p + 3 <= q; ++p)
      if ((q - p) % 2 == 1 && g.adjacent(path[p], w)) return true;
    return false;
  };

  std::function<void()> extend = [&]() {
    for (auto w : g.neighbors(path.back())) {
      if (w == avoid || on_path[static_cast<std::size_t>(w)]) continue;
      budget.charge();
      if (has_shortcut(w)) continue;
      if (w == b) {
        if (path.size() % 2 == 0) {
          path.push_back(w);
          out.push_back(path);
          path.pop_back();
        }
        continue;
      }
      path.push_back(w);
      on_path[static_cast<std::size_t>(w)] = 1;
      if (reaches_target(w)) extend();
      on_path[static_cast<std::size_t>(w)] = 0;
      path.pop_back();
    }
  };
  extend();
}

struct PathSet {
  std::vector<EviPath> paths;
  std::vector<Bits> compatible;
};

PathSet with_conflicts(std::vector<EviPath> paths, std::size_t n) {
  PathSet s;
  const auto count = paths.size();
  std::vector<Bits> all(count, Bits(n)), even(count, Bits(n));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t pos = 0; pos < paths[i].vertices.size(); ++pos) {
      const auto v = static_cast<std::size_t>(paths[i].vertices[pos]);
      all[i].set(v);
      if (pos % 2 == 1) even[i].set(v);
    }
  s.compatible.assign(count, Bits(count));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (!even[i].intersects(all[j]) && !even[j].intersects(all[i])) {
        s.compatible[i].set(j);
        s.compatible[j].set(i);
      }
  s.paths = std::move(paths);
  return s;
}

// Maximum clique in the compatibility graph restricted to `active`, greedy-coloring bound.
std::vector<std::size_t> max_packing(const std::vector<Bits>& compat, const Bits& active, SearchBudget& budget) {
  std::vector<std::size_t> best, current;
  auto expand = [&](auto&& self, Bits candidates) -> void {
    std::vector<std::size_t> order;
    std::vector<int> bound;
    Bits uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bits available = uncolored;
      for (auto v = available.find_first(); v != Bits::npos; v = available.find_next(v)) {
        available &= ~compat[v];
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + static_cast<std::size_t>(bound[idx]) <= best.size()) return;
      budget.charge();
      const auto v = order[idx];
      current.push_back(v);
      Bits next = candidates & compat[v];
      if (next.none()) {
        if (current.size() > best.size()) best = current;
      } else {
        self(self, next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  };
  if (active.any()) expand(expand, active);
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<std::vector<Vertex>> all_pair_paths(const Graph& g, Vertex v, std::span<const Vertex> ends, SearchBudget& budget,
                                                std::vector<std::pair<std::size_t, std::size_t>>& pair_of_path) {
  std::vector<std::vector<Vertex>> paths;
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      const auto before = paths.size();
      paths_between(g, v, ends[i], ends[j], budget, paths);
      for (auto k = before; k < paths.size(); ++k) pair_of_path.emplace_back(i, j);
    }
  return paths;
}

}  // namespace

void validate_weak_partition(const Graph& g, const WeakPartition& p) {
  if (p.vertex < 0 || p.vertex >= g.order()) throw PreconditionError("weak partition vertex out of range");
  std::vector<Vertex> members = p.a0;
  for (const auto& block : p.blocks) {
    if (block.size() < 2) throw PreconditionError("weak partition block with fewer than two vertices");
    members.insert(members.end(), block.begin(), block.end());
  }
  std::sort(members.begin(), members.end());
  auto nbrs = g.neighbors(p.vertex);
  if (!std::equal(members.begin(), members.end(), nbrs.begin(), nbrs.end()))
    throw PreconditionError("weak partition does not partition the neighborhood");
}

bool evi_compatible(const EviPath& a, const EviPath& b) {
  auto hits = [](const EviPath& x, const EviPath& y) {
    for (std::size_t pos = 1; pos < x.vertices.size(); pos += 2)
      if (std::find(y.vertices.begin(), y.vertices.end(), x.vertices[pos]) != y.vertices.end()) return true;
    return false;
  };
  return !hits(a, b) && !hits(b, a);
}

std::vector<EviPath> candidate_paths(const Graph& g, const WeakPartition& p, const AcyclicDegreeOptions& opts) {
  validate_weak_partition(g, p);
  SearchBudget budget(opts.budget, "even path enumeration");
  std::vector<EviPath> out;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (auto& path : all_pair_paths(g, p.vertex, p.blocks[b], budget, pairs))
      out.push_back({std::move(path), static_cast<int>(b)});
  }
  return out;
}

int elp(const Graph& g, const WeakPartition& p, const AcyclicDegreeOptions& opts, std::vector<EviPath>* packing) {
  auto set = with_conflicts(candidate_paths(g, p, opts), static_cast<std::size_t>(g.order()));
  SearchBudget budget(opts.budget, "path packing");
  Bits active(set.paths.size());
  active.set();
  auto best = max_packing(set.compatible, active, budget);
  if (packing) {
    packing->clear();
    for (auto i : best) packing->push_back(set.paths[i]);
  }
  return static_cast<int>(best.size());
}

AcyclicDegree acyclic_degree_detail(const Graph& g, Vertex v, const AcyclicDegreeOptions& opts) {
  if (v < 0 || v >= g.order()) throw PreconditionError("vertex out of range");
  const auto nbrs = g.neighbors(v);
  const auto d = nbrs.size();
  SearchBudget budget(opts.budget, "acyclic degree");

  std::vector<std::pair<std::size_t, std::size_t>> pair_of_path;
  auto raw = all_pair_paths(g, v, nbrs, budget, pair_of_path);
  std::vector<EviPath> paths;
  for (auto& r : raw) paths.push_back({std::move(r), -1});
  auto set = with_conflicts(std::move(paths), static_cast<std::size_t>(g.order()));

  std::vector<std::vector<char>> linked(d, std::vector<char>(d, 0));
  std::vector<char> active(d, 0);
  for (auto [i, j] : pair_of_path) {
    linked[i][j] = linked[j][i] = 1;
    active[i] = active[j] = 1;
  }

  AcyclicDegree best;
  best.value = static_cast<int>(d);
  best.partition.vertex = v;
  best.partition.a0.assign(nbrs.begin(), nbrs.end());
  if (set.paths.empty()) return best;

  Bits everything(set.paths.size());
  everything.set();
  const int ceiling = static_cast<int>(max_packing(set.compatible, everything, budget).size());

  std::map<std::vector<bool>, std::vector<std::size_t>> cache;
  // label[i]: 0 = A0, otherwise block id (restricted growth over blocks).
  std::vector<int> label(d, 0);
  std::vector<std::size_t> active_ids;
  for (std::size_t i = 0; i < d; ++i)
    if (active[i]) active_ids.push_back(i);

  auto evaluate = [&](int blocks) {
    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(blocks) + 1);
    for (std::size_t i = 0; i < d; ++i) members[static_cast<std::size_t>(label[i])].push_back(i);
    for (int b = 1; b <= blocks; ++b) {
      const auto& m = members[static_cast<std::size_t>(b)];
      if (m.size() < 2) return;
      // Disconnected blocks are never optimal: splitting them keeps every path and adds a block.
      std::vector<char> reached(m.size(), 0);
      std::vector<std::size_t> stack{0};
      reached[0] = 1;
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < m.size(); ++y)
          if (!reached[y] && linked[m[x]][m[y]]) {
            reached[y] = 1;
            stack.push_back(y);
          }
      }
      if (std::find(reached.begin(), reached.end(), 0) != reached.end()) return;
    }
    std::vector<bool> key(set.paths.size());
    for (std::size_t p = 0; p < set.paths.size(); ++p) {
      auto [i, j] = pair_of_path[p];
      key[p] = label[i] != 0 && label[i] == label[j];
    }
    auto it = cache.find(key);
    if (it == cache.end()) {
      Bits on(set.paths.size());
      for (std::size_t p = 0; p < key.size(); ++p) on[p] = key[p];
      it = cache.emplace(key, max_packing(set.compatible, on, budget)).first;
    }
    const int value = static_cast<int>(members[0].size()) + blocks + static_cast<int>(it->second.size());
    if (value > best.value) {
      best.value = value;
      best.partition = WeakPartition{v, {}, {}};
      for (auto i : members[0]) best.partition.a0.push_back(nbrs[i]);
      for (int b = 1; b <= blocks; ++b) {
        best.partition.blocks.emplace_back();
        for (auto i : members[static_cast<std::size_t>(b)]) best.partition.blocks.back().push_back(nbrs[i]);
      }
      best.packing.clear();
      for (auto p : it->second) {
        auto path = set.paths[p];
        path.block_id = label[pair_of_path[p].first] - 1;
        best.packing.push_back(std::move(path));
      }
    }
  };

  // cost = vertices in blocks - blocks; the value is at most d - cost + ceiling.
  auto assign = [&](auto&& self, std::size_t idx, int blocks, int cost) -> void {
    if (static_cast<int>(d) - cost + ceiling <= best.value) return;
    if (idx == active_ids.size()) {
      evaluate(blocks);
      return;
    }
    budget.charge();
    const auto i = active_ids[idx];
    for (int b = 1; b <= blocks; ++b) {
      label[i] = b;
      self(self, idx + 1, blocks, cost + 1);
    }
    label[i] = blocks + 1;
    self(self, idx + 1, blocks + 1, cost);
    label[i] = 0;
    self(self, idx + 1, blocks, cost);
  };
  assign(assign, 0, 0, 0);
  return best;
}

int acyclic_degree(const Graph& g, Vertex v, const AcyclicDegreeOptions& opts) {
  return acyclic_degree_detail(g, v, opts).value;
}

int m_a_degree(const Graph& g, const AcyclicDegreeOptions& opts) {
  std::vector<int> degrees;
  degrees.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) degrees.push_back(acyclic_degree(g, v, opts));
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return m_degree(degrees);
}

}  // namespace abchrom
