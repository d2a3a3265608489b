// Undirected labeled graphs with dense integer vertex ids, plus the
// label-dependent weight scheme. Graphs are immutable once built and safe to
// share across threads.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bbpmcs/errors.hpp"
#include "bbpmcs/rational.hpp"

namespace bbpmcs {

using VertexId = int;

/// Unordered edge, stored with u < v.
struct Edge {
  VertexId u;
  VertexId v;

  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::string name) : name_(std::move(name)) {}

  /// Throws DuplicateVertex if the id is already present; ids must be >= 0.
  void add_vertex(VertexId id, std::string label = "");
  /// Throws SelfLoop, DanglingEdge or DuplicateEdge.
  void add_edge(VertexId a, VertexId b, std::string label = "");

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Vertex ids in ascending order.
  const std::vector<VertexId>& vertices() const { return vertices_; }
  /// Edges in ascending (u, v) order.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(VertexId id) const;
  bool has_edge(VertexId a, VertexId b) const;

  const std::string& vertex_label(VertexId id) const;
  const std::string& edge_label(VertexId a, VertexId b) const;
  const std::string& edge_label(const Edge& e) const { return edge_label(e.u, e.v); }

  /// Neighbors of `id` in ascending order.
  const std::vector<VertexId>& neighbors(VertexId id) const;
  int degree(VertexId id) const { return static_cast<int>(neighbors(id).size()); }

  bool is_connected() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&);

 private:
  std::string name_;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::string> vertex_labels_;
  std::map<Edge, std::string> edge_labels_;
  std::map<VertexId, std::vector<VertexId>> adjacency_;
};

/// A connected graph with a distinguished root vertex.
struct RootedGraph {
  const LabeledGraph* graph;
  VertexId root;

  RootedGraph(const LabeledGraph& g, VertexId r);
};

/// Label -> weight tables with optional defaults (both default to 1).
/// A graph's weight is the sum of its vertex and edge weights; under the
/// default scheme this is |V| + |E|.
class WeightScheme {
 public:
  WeightScheme() = default;

  void set_vertex_weight(const std::string& label, Rational w);
  void set_edge_weight(const std::string& label, Rational w);
  void set_vertex_default(std::optional<Rational> w);
  void set_edge_default(std::optional<Rational> w);

  /// Throws UnknownLabel when the label has no entry and no default is set.
  Rational vertex_weight(const std::string& label) const;
  Rational edge_weight(const std::string& label) const;

 private:
  static void check_nonnegative(const Rational& w);

  std::map<std::string, Rational> vertex_weights_;
  std::map<std::string, Rational> edge_weights_;
  std::optional<Rational> vertex_default_ = Rational(1);
  std::optional<Rational> edge_default_ = Rational(1);
};

Rational graph_weight(const LabeledGraph& g, const WeightScheme& scheme);

}  // namespace bbpmcs
