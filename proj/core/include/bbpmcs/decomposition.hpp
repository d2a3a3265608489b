// Block/bridge decomposition. Following the cycle-based notion of
// biconnectivity, a lone edge is never a block: blocks are the maximal
// biconnected subgraphs that contain a cycle, and every remaining edge is a
// bridge. Blocks and bridges partition the edge set.
#pragma once

#include <optional>
#include <vector>

#include "bbpmcs/graph.hpp"

namespace bbpmcs {

struct BCDecomposition {
  /// Edge sets of the blocks, each sorted ascending.
  std::vector<std::vector<Edge>> blocks;
  std::vector<Edge> bridges;
  std::vector<VertexId> articulation_vertices;

  /// Block index for a block edge, std::nullopt for a bridge.
  std::optional<int> block_of(const Edge& e) const;
  bool is_bridge(const Edge& e) const;

  /// Sorted vertex set of block `i`.
  std::vector<VertexId> block_vertices(int i) const;

  /// True iff the decomposed graph was a tree: no blocks and |V|-1 bridges.
  bool is_tree(const LabeledGraph& g) const;

  // flat lookup, filled by decompose_bc
  std::vector<std::pair<Edge, std::optional<int>>> edge_blocks;
};

/// Disconnected inputs are fine; the decomposition is per component.
BCDecomposition decompose_bc(const LabeledGraph& g);

}  // namespace bbpmcs
