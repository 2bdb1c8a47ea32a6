#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "abchrom/budget.hpp"
#include "abchrom/coloring.hpp"

namespace abchrom {

enum class ColoringFilter { proper, acyclic };

struct EnumerationOptions {
  ColoringFilter filter = ColoringFilter::proper;
  int max_k = 0;                                   ///< 0 = no limit
  std::uint64_t budget = SearchBudget::unlimited;  ///< search nodes
};

/// One coloring per partition of V into independent sets (acyclic: pairwise inducing forests),
/// labelled as restricted growth strings and visited in lexicographic order. The visitor returns
/// false to stop early.
void enumerate_colorings(const Graph& g, const EnumerationOptions& opts,
                         const std::function<bool(const Coloring&)>& visit);

std::vector<Coloring> all_colorings(const Graph& g, const EnumerationOptions& opts = {});

struct InvariantReport {
  int n = 0;
  int max_degree = 0;
  int omega = 0;
  int chi = 0;
  int acyclic_chromatic = 0;  ///< A(G)
  int phi = 0;                ///< b-chromatic number
  int ab = 0;                 ///< acyclic b-chromatic number
  int m = 0;
  int m_a = -1;               ///< -1 when not requested

  std::vector<Vertex> clique;
  Coloring chi_witness;
  Coloring acyclic_witness;
  Coloring phi_witness;
  Coloring ab_witness;

  std::uint64_t partitions = 0;  ///< proper partitions visited
  double seconds = 0;
};

struct ExactOptions {
  std::uint64_t partition_budget = 50'000'000;
  std::uint64_t step_budget = 10'000'000;
  std::uint64_t path_budget = 50'000'000;
  bool with_m_a = true;
};

/// Brute force over every proper partition. Witnesses are the lexicographically first optima.
InvariantReport exact_invariants(const Graph& g, const ExactOptions& opts = {});

/// Exact branch and bound. `witness`, if given, receives one maximum clique.
int clique_number(const Graph& g, std::vector<Vertex>* witness = nullptr);

/// max{i : d_i >= i - 1} over a non-increasing sequence (1-based), 0 for an empty one.
int m_degree(std::span<const int> non_increasing);
int m_degree(const Graph& g);

}  // namespace abchrom
