#pragma once

#include <cstdint>
#include <vector>

#include "abchrom/graph.hpp"

namespace abchrom {

/// Partition of N(v) into free singles (a0) and blocks of size >= 2.
struct WeakPartition {
  Vertex vertex = 0;
  std::vector<Vertex> a0;
  std::vector<std::vector<Vertex>> blocks;
};

/// Even-length path avoiding the partition vertex, both endpoints in one block.
struct EviPath {
  std::vector<Vertex> vertices;  ///< p_1 .. p_{2t+1}
  int block_id = -1;
};

struct AcyclicDegreeOptions {
  std::uint64_t budget = 50'000'000;  ///< path DFS plus packing search nodes
};

/// Throws PreconditionError unless P partitions N(P.vertex) with every block of size >= 2.
void validate_weak_partition(const Graph& g, const WeakPartition& p);

/// No vertex sits on an even position of one path and anywhere on the other.
bool evi_compatible(const EviPath& a, const EviPath& b);

/// Even paths between endpoints of a common block, with shortcut-dominated paths left out:
/// a path with a chord skipping an odd number (>= 3) of positions contains a shorter
/// even path that conflicts with a subset of what it conflicts with.
std::vector<EviPath> candidate_paths(const Graph& g, const WeakPartition& p, const AcyclicDegreeOptions& opts = {});

/// Maximum number of pairwise EVI-disjoint paths. `packing` receives one optimum.
int elp(const Graph& g, const WeakPartition& p, const AcyclicDegreeOptions& opts = {},
        std::vector<EviPath>* packing = nullptr);

struct AcyclicDegree {
  int value = 0;
  WeakPartition partition;
  std::vector<EviPath> packing;
};

/// max over weak partitions of |A0| + (number of blocks) + elp.
AcyclicDegree acyclic_degree_detail(const Graph& g, Vertex v, const AcyclicDegreeOptions& opts = {});
int acyclic_degree(const Graph& g, Vertex v, const AcyclicDegreeOptions& opts = {});

/// max{i : d^a(v_i) >= i - 1} over vertices sorted by non-increasing acyclic degree.
int m_a_degree(const Graph& g, const AcyclicDegreeOptions& opts = {});

}  // namespace abchrom
