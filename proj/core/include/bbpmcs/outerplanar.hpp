// Outerplanarity test: a graph is outerplanar iff every block admits a
// Hamiltonian cycle of the block under which the remaining block edges are
// pairwise non-crossing chords. Exact search per block, bounded by
// kDefaultBlockSizeLimit vertices.
#pragma once

#include <optional>
#include <vector>

#include "bbpmcs/decomposition.hpp"
#include "bbpmcs/graph.hpp"

namespace bbpmcs {

inline constexpr int kDefaultBlockSizeLimit = 16;

struct OuterplanarityReport {
  bool outerplanar = true;
  /// One cyclic vertex order per block when outerplanar.
  std::vector<std::vector<VertexId>> block_orders;
  /// Index (into the decomposition's block list) of the first failing block.
  std::optional<int> offending_block;
};

/// Throws BlockTooLarge when a block exceeds `block_size_limit` vertices.
OuterplanarityReport is_outerplanar(const LabeledGraph& g,
                                    int block_size_limit = kDefaultBlockSizeLimit);

OuterplanarityReport is_outerplanar(const LabeledGraph& g,
                                    const BCDecomposition& decomposition,
                                    int block_size_limit = kDefaultBlockSizeLimit);

}  // namespace bbpmcs
