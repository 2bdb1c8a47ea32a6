#include "abchrom/exact.hpp"

#include <algorithm>
#include <chrono>

#include <boost/dynamic_bitset.hpp>

#include "abchrom/acyclic_degree.hpp"
#include "abchrom/error.hpp"
#include "abchrom/recolor.hpp"

namespace abchrom {

namespace {

// Depth-first restricted-growth enumeration. `emit` gets the full assignment, its color count and
// whether it is acyclic; with filter == acyclic, non-acyclic branches are cut.
template <typename Emit>
void enumerate_partitions(const Graph& g, const EnumerationOptions& opts, Emit&& emit) {
  const int n = g.order();
  SearchBudget budget(opts.budget, "coloring enumeration");
  if (n == 0) {
    emit(std::vector<Color>{}, 0, true);
    return;
  }
  const int cap = opts.max_k > 0 ? opts.max_k : n;
  std::vector<Color> colors(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n) + 1, 0);
  // acyclic_upto[d]: colors[0..d) induce an acyclic partial coloring.
  std::vector<char> acyclic_upto(static_cast<std::size_t>(n) + 1, 1);
  bool stop = false;

  auto recurse = [&](auto&& self, int depth) -> void {
    if (stop) return;
    const auto d = static_cast<std::size_t>(depth);
    if (depth == n) {
      if (!emit(colors, prefix_max[d], acyclic_upto[d] != 0)) stop = true;
      return;
    }
    const int top = std::min(prefix_max[d] + 1, cap);
    for (Color col = 1; col <= top && !stop; ++col) {
      budget.charge();
      bool clash = false;
      for (auto w : g.neighbors(depth))
        if (w < depth && colors[static_cast<std::size_t>(w)] == col) {
          clash = true;
          break;
        }
      if (clash) continue;
      bool acyclic = acyclic_upto[d] && !closes_bicolored_cycle(g, colors, depth, col);
      if (!acyclic && opts.filter == ColoringFilter::acyclic) continue;
      colors[d] = col;
      prefix_max[d + 1] = std::max(prefix_max[d], col);
      acyclic_upto[d + 1] = acyclic;
      self(self, depth + 1);
      colors[d] = 0;
    }
  };
  recurse(recurse, 0);
}

}  // namespace

void enumerate_colorings(const Graph& g, const EnumerationOptions& opts,
                         const std::function<bool(const Coloring&)>& visit) {
  enumerate_partitions(g, opts, [&](const std::vector<Color>& colors, int k, bool) {
    return visit(Coloring(colors, k));
  });
}

std::vector<Coloring> all_colorings(const Graph& g, const EnumerationOptions& opts) {
  std::vector<Coloring> out;
  enumerate_colorings(g, opts, [&](const Coloring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

int clique_number(const Graph& g, std::vector<Vertex>* witness) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<boost::dynamic_bitset<>> adj(n, boost::dynamic_bitset<>(n));
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
  }
  std::vector<Vertex> best, current;
  auto expand = [&](auto&& self, boost::dynamic_bitset<> candidates) -> void {
    if (current.size() + candidates.count() <= best.size()) return;
    if (candidates.none()) {
      best = current;
      return;
    }
    for (auto v = candidates.find_first(); v != boost::dynamic_bitset<>::npos; v = candidates.find_next(v)) {
      if (current.size() + candidates.count() <= best.size()) return;
      current.push_back(static_cast<Vertex>(v));
      self(self, candidates & adj[v]);
      current.pop_back();
      candidates.reset(v);
    }
  };
  boost::dynamic_bitset<> all(n);
  all.set();
  expand(expand, all);
  if (witness) *witness = best;
  return static_cast<int>(best.size());
}

int m_degree(std::span<const int> non_increasing) {
  int m = 0;
  for (std::size_t i = 0; i < non_increasing.size(); ++i)
    if (non_increasing[i] >= static_cast<int>(i)) m = static_cast<int>(i) + 1;
  return m;
}

int m_degree(const Graph& g) { return m_degree(degree_stats(g).sequence); }

InvariantReport exact_invariants(const Graph& g, const ExactOptions& opts) {
  const auto started = std::chrono::steady_clock::now();
  InvariantReport r;
  r.n = g.order();
  r.max_degree = degree_stats(g).max_degree;
  r.m = m_degree(g);
  r.omega = clique_number(g, &r.clique);

  int chi = 0, acyc = 0, phi = 0, ab = 0;
  EnumerationOptions eopts{ColoringFilter::proper, 0, opts.partition_budget};
  enumerate_partitions(g, eopts, [&](const std::vector<Color>& colors, int k, bool acyclic) {
    ++r.partitions;
    if (chi == 0 || k < chi) {
      chi = k;
      r.chi_witness = Coloring(colors, k);
    }
    if (k > phi) {
      Coloring c(colors, k);
      if (is_minimal_by_definition(g, c, Variant::proper)) {
        phi = k;
        r.phi_witness = std::move(c);
      }
    }
    if (acyclic) {
      if (acyc == 0 || k < acyc) {
        acyc = k;
        r.acyclic_witness = Coloring(colors, k);
      }
      if (k > ab) {
        Coloring c(colors, k);
        if (is_minimal_by_definition(g, c, Variant::acyclic, opts.step_budget)) {
          ab = k;
          r.ab_witness = std::move(c);
        }
      }
    }
    return true;
  });
  r.chi = chi;
  r.acyclic_chromatic = acyc;
  r.phi = phi;
  r.ab = ab;
  if (opts.with_m_a) r.m_a = m_a_degree(g, {opts.path_budget});
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

}  // namespace abchrom
