#pragma once

#include <cstdint>
#include <vector>

#include "abchrom/graph.hpp"

namespace abchrom::corpus {

/// One representative per isomorphism class of connected graphs on exactly n vertices
/// (n <= 10), grown by adding a vertex to every smaller connected graph. Deterministic order.
std::vector<Graph> connected_graphs(int n);

/// connected_graphs(1) .. connected_graphs(max_n), concatenated.
std::vector<Graph> connected_graphs_up_to(int max_n);

/// Canonical code: the smallest upper-triangle adjacency bit string over all vertex orders that
/// list vertices by non-increasing degree. Equal codes mean isomorphic graphs. n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// Seeded G(n, p) samples with n uniform in [min_n, max_n] and p uniform in [0.15, 0.75].
std::vector<Graph> random_graphs(std::size_t count, int min_n, int max_n, std::uint64_t seed);

}  // namespace abchrom::corpus
