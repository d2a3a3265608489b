#include "bbpmcs/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "bbpmcs/errors.hpp"

namespace bbpmcs {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

VertexId parse_id(const std::string& tok, int line_no) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected a vertex id, got '" + tok + "'");
  }
  if (pos != tok.size() || value < 0 || value > 1'000'000'000) {
    throw ParseError(line_no, "expected a vertex id, got '" + tok + "'");
  }
  return static_cast<VertexId>(value);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

LabeledGraph parse_graph(const std::string& text) {
  LabeledGraph g;
  bool saw_header = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0];
    if (kind == "graph") {
      if (saw_header) throw ParseError(line_no, "duplicate 'graph' header");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'graph <name>'");
      saw_header = true;
      g.set_name(tokens[1]);
    } else if (kind == "v") {
      if (tokens.size() < 2 || tokens.size() > 3) {
        throw ParseError(line_no, "expected 'v <id> [label]'");
      }
      g.add_vertex(parse_id(tokens[1], line_no), tokens.size() == 3 ? tokens[2] : "");
    } else if (kind == "e") {
      if (tokens.size() < 3 || tokens.size() > 4) {
        throw ParseError(line_no, "expected 'e <id> <id> [label]'");
      }
      g.add_edge(parse_id(tokens[1], line_no), parse_id(tokens[2], line_no),
                 tokens.size() == 4 ? tokens[3] : "");
    } else {
      throw ParseError(line_no, "unknown directive '" + kind + "'");
    }
  }
  return g;
}

LabeledGraph load_graph(const std::string& path) {
  LabeledGraph g = parse_graph(read_file(path));
  if (g.name().empty()) {
    auto slash = path.find_last_of('/');
    g.set_name(slash == std::string::npos ? path : path.substr(slash + 1));
  }
  return g;
}

std::string serialize_graph(const LabeledGraph& g) {
  std::ostringstream out;
  if (!g.name().empty()) out << "graph " << g.name() << "\n";
  for (VertexId v : g.vertices()) {
    out << "v " << v;
    if (!g.vertex_label(v).empty()) out << " " << g.vertex_label(v);
    out << "\n";
  }
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << " " << e.v;
    if (!g.edge_label(e).empty()) out << " " << g.edge_label(e);
    out << "\n";
  }
  return out.str();
}

WeightScheme parse_weight_scheme(const std::string& text) {
  WeightScheme scheme;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0];
    try {
      if (kind == "vlabel") {
        if (tokens.size() != 3) throw ParseError(line_no, "expected 'vlabel <label> <weight>'");
        scheme.set_vertex_weight(tokens[1], parse_rational(tokens[2]));
      } else if (kind == "elabel") {
        if (tokens.size() != 3) throw ParseError(line_no, "expected 'elabel <label> <weight>'");
        scheme.set_edge_weight(tokens[1], parse_rational(tokens[2]));
      } else if (kind == "default") {
        if (tokens.size() != 2) throw ParseError(line_no, "expected 'default <weight>'");
        Rational w = parse_rational(tokens[1]);
        scheme.set_vertex_default(w);
        scheme.set_edge_default(w);
      } else {
        throw ParseError(line_no, "unknown directive '" + kind + "'");
      }
    } catch (const UnknownLabel&) {
      throw ParseError(line_no, "weights must be nonnegative");
    }
  }
  return scheme;
}

WeightScheme load_weight_scheme(const std::string& path) {
  return parse_weight_scheme(read_file(path));
}

}  // namespace bbpmcs
