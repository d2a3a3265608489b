#include "bbpmcs/graph.hpp"

#include <algorithm>
#include <queue>

namespace bbpmcs {

void LabeledGraph::add_vertex(VertexId id, std::string label) {
  if (id < 0) throw DanglingEdge("vertex id must be nonnegative: " + std::to_string(id));
  if (vertex_labels_.contains(id)) {
    throw DuplicateVertex("vertex " + std::to_string(id) + " declared twice");
  }
  vertex_labels_.emplace(id, std::move(label));
  adjacency_.emplace(id, std::vector<VertexId>{});
  vertices_.insert(std::lower_bound(vertices_.begin(), vertices_.end(), id), id);
}

void LabeledGraph::add_edge(VertexId a, VertexId b, std::string label) {
  if (a == b) throw SelfLoop("self-loop at vertex " + std::to_string(a));
  if (!has_vertex(a) || !has_vertex(b)) {
    throw DanglingEdge("edge {" + std::to_string(a) + "," + std::to_string(b) +
                       "} references an undeclared vertex");
  }
  Edge e(a, b);
  if (edge_labels_.contains(e)) {
    throw DuplicateEdge("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        "} declared twice");
  }
  edge_labels_.emplace(e, std::move(label));
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
  auto& au = adjacency_[e.u];
  au.insert(std::lower_bound(au.begin(), au.end(), e.v), e.v);
  auto& av = adjacency_[e.v];
  av.insert(std::lower_bound(av.begin(), av.end(), e.u), e.u);
}

bool LabeledGraph::has_vertex(VertexId id) const { return vertex_labels_.contains(id); }

bool LabeledGraph::has_edge(VertexId a, VertexId b) const {
  if (a == b) return false;
  return edge_labels_.contains(Edge(a, b));
}

const std::string& LabeledGraph::vertex_label(VertexId id) const {
  auto it = vertex_labels_.find(id);
  if (it == vertex_labels_.end()) {
    throw DanglingEdge("unknown vertex " + std::to_string(id));
  }
  return it->second;
}

const std::string& LabeledGraph::edge_label(VertexId a, VertexId b) const {
  auto it = edge_labels_.find(Edge(a, b));
  if (it == edge_labels_.end()) {
    throw DanglingEdge("unknown edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  return it->second;
}

const std::vector<VertexId>& LabeledGraph::neighbors(VertexId id) const {
  auto it = adjacency_.find(id);
  if (it == adjacency_.end()) {
    throw DanglingEdge("unknown vertex " + std::to_string(id));
  }
  return it->second;
}

bool LabeledGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::map<VertexId, bool> seen;
  std::queue<VertexId> queue;
  queue.push(vertices_.front());
  seen[vertices_.front()] = true;
  int reached = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    ++reached;
    for (VertexId w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push(w);
      }
    }
  }
  return reached == vertex_count();
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  return a.name_ == b.name_ && a.vertex_labels_ == b.vertex_labels_ &&
         a.edge_labels_ == b.edge_labels_;
}

RootedGraph::RootedGraph(const LabeledGraph& g, VertexId r) : graph(&g), root(r) {
  if (!g.has_vertex(r)) {
    throw DanglingEdge("root " + std::to_string(r) + " is not a vertex");
  }
  if (!g.is_connected()) throw Disconnected("rooted graph must be connected");
}

void WeightScheme::check_nonnegative(const Rational& w) {
  if (w < Rational(0)) {
    throw UnknownLabel("weights must be nonnegative");
  }
}

void WeightScheme::set_vertex_weight(const std::string& label, Rational w) {
  check_nonnegative(w);
  vertex_weights_[label] = w;
}

void WeightScheme::set_edge_weight(const std::string& label, Rational w) {
  check_nonnegative(w);
  edge_weights_[label] = w;
}

void WeightScheme::set_vertex_default(std::optional<Rational> w) {
  if (w) check_nonnegative(*w);
  vertex_default_ = w;
}

void WeightScheme::set_edge_default(std::optional<Rational> w) {
  if (w) check_nonnegative(*w);
  edge_default_ = w;
}

Rational WeightScheme::vertex_weight(const std::string& label) const {
  auto it = vertex_weights_.find(label);
  if (it != vertex_weights_.end()) return it->second;
  if (vertex_default_) return *vertex_default_;
  throw UnknownLabel("no weight for vertex label '" + label + "' and no default");
}

Rational WeightScheme::edge_weight(const std::string& label) const {
  auto it = edge_weights_.find(label);
  if (it != edge_weights_.end()) return it->second;
  if (edge_default_) return *edge_default_;
  throw UnknownLabel("no weight for edge label '" + label + "' and no default");
}

Rational graph_weight(const LabeledGraph& g, const WeightScheme& scheme) {
  Rational total(0);
  for (VertexId v : g.vertices()) total += scheme.vertex_weight(g.vertex_label(v));
  for (const Edge& e : g.edges()) total += scheme.edge_weight(g.edge_label(e));
  return total;
}

}  // namespace bbpmcs
