#include "plabic/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "plabic/error.hpp"

namespace plabic {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

// Comment-stripped, trimmed, nonempty lines.
std::vector<std::string> strip_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (!tokenize(line).empty()) out.push_back(line);
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : lines_(strip_lines(in)) {}

  bool done() const { return pos_ >= lines_.size(); }

  const std::string& peek() const {
    if (done()) throw ParseError("unexpected end of file");
    return lines_[pos_];
  }

  std::vector<std::string> next_tokens() {
    const std::vector<std::string> tokens = tokenize(peek());
    ++pos_;
    return tokens;
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

int parse_int(const std::string& token) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + token + "'");
  }
  if (used != token.size()) throw ParseError("bad integer '" + token + "'");
  return value;
}

void expect_header(const std::vector<std::string>& tokens,
                   const std::string& word, std::size_t arity) {
  if (tokens.size() != arity || tokens[0] != word) {
    throw ParseError("expected '" + word + "' header");
  }
}

}  // namespace

PlabicGraph read_graph(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.next_tokens();
  expect_header(header, "PLABIC", 2);
  const int declared_n = parse_int(header[1]);
  const auto vheader = reader.next_tokens();
  expect_header(vheader, "VERTICES", 2);
  const int vcount = parse_int(vheader[1]);
  PlabicGraph graph;
  for (int i = 0; i < vcount; ++i) {
    const auto tokens = reader.next_tokens();
    if (tokens.size() < 3) throw ParseError("short vertex line");
    if (parse_int(tokens[0]) != i) {
      throw ValidationError("vertex ids must run 0.." +
                            std::to_string(vcount - 1) + " in order");
    }
    Color color;
    if (tokens[1] == "b") {
      color = Color::black;
    } else if (tokens[1] == "w") {
      color = Color::white;
    } else {
      throw ParseError("vertex color must be 'b' or 'w'");
    }
    if (tokens[2] == "interior") {
      if (tokens.size() != 3) throw ParseError("trailing tokens on vertex line");
      graph.add_vertex(color);
    } else if (tokens[2] == "boundary") {
      if (tokens.size() != 4) {
        throw ParseError("boundary vertex line needs a label");
      }
      graph.add_vertex(color, parse_int(tokens[3]));
    } else {
      throw ParseError("vertex kind must be 'interior' or 'boundary'");
    }
  }
  const auto eheader = reader.next_tokens();
  expect_header(eheader, "EDGES", 2);
  const int ecount = parse_int(eheader[1]);
  for (int i = 0; i < ecount; ++i) {
    const auto tokens = reader.next_tokens();
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError("edge line needs two endpoints and an optional "
                       "weight");
    }
    const Rational weight =
        tokens.size() == 3 ? parse_rational(tokens[2]) : Rational(1);
    graph.add_edge(parse_int(tokens[0]), parse_int(tokens[1]), weight);
  }
  std::vector<bool> rotation_given(static_cast<std::size_t>(vcount), false);
  if (!reader.done() && tokenize(reader.peek())[0] == "ROTATIONS") {
    reader.next_tokens();
    while (!reader.done() && tokenize(reader.peek())[0] != "SYMMETRY") {
      auto tokens = reader.next_tokens();
      if (tokens.size() < 1 || tokens[0].back() != ':') {
        throw ParseError("rotation line must start with '<vertex>:'");
      }
      const int v = parse_int(tokens[0].substr(0, tokens[0].size() - 1));
      if (v < 0 || v >= vcount) {
        throw ValidationError("rotation line for unknown vertex " +
                              std::to_string(v));
      }
      if (rotation_given[static_cast<std::size_t>(v)]) {
        throw ValidationError("duplicate rotation line for vertex " +
                              std::to_string(v));
      }
      rotation_given[static_cast<std::size_t>(v)] = true;
      std::vector<int> edges;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        edges.push_back(parse_int(tokens[t]));
      }
      graph.set_rotation(v, std::move(edges));
    }
  }
  for (int v = 0; v < vcount; ++v) {
    if (graph.degree(v) >= 2 && !rotation_given[static_cast<std::size_t>(v)]) {
      throw ValidationError("vertex " + std::to_string(v) +
                            " needs a rotation line");
    }
  }
  if (!reader.done() && tokenize(reader.peek())[0] == "SYMMETRY") {
    reader.next_tokens();
    std::vector<int> mirror(static_cast<std::size_t>(vcount), -1);
    while (!reader.done()) {
      const auto tokens = reader.next_tokens();
      if (tokens.size() != 2) throw ParseError("symmetry line needs a pair");
      const int u = parse_int(tokens[0]);
      const int v = parse_int(tokens[1]);
      if (u < 0 || u >= vcount || v < 0 || v >= vcount) {
        throw ValidationError("symmetry pair out of range");
      }
      if (mirror[static_cast<std::size_t>(u)] != -1 ||
          mirror[static_cast<std::size_t>(v)] != -1) {
        throw ValidationError("vertex repeated in the symmetry pairing");
      }
      mirror[static_cast<std::size_t>(u)] = v;
      mirror[static_cast<std::size_t>(v)] = u;
    }
    graph.set_mirror(std::move(mirror));
  }
  if (!reader.done()) throw ParseError("trailing lines after the graph");
  if (graph.n() != declared_n) {
    throw ValidationError("declared boundary size " +
                          std::to_string(declared_n) + " disagrees with " +
                          std::to_string(graph.n()) + " boundary vertices");
  }
  return graph;
}

void write_graph(std::ostream& out, const PlabicGraph& graph) {
  out << "PLABIC " << graph.n() << "\n";
  out << "VERTICES " << graph.vertex_count() << "\n";
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const Vertex& vertex = graph.vertex(v);
    out << v << " " << (vertex.color == Color::black ? "b" : "w") << " ";
    if (vertex.boundary) {
      out << "boundary " << vertex.label;
    } else {
      out << "interior";
    }
    out << "\n";
  }
  out << "EDGES " << graph.edge_count() << "\n";
  for (int e = 0; e < graph.edge_count(); ++e) {
    const GraphEdge& edge = graph.edge(e);
    out << edge.u << " " << edge.v << " " << format_rational(edge.weight)
        << "\n";
  }
  out << "ROTATIONS\n";
  for (int v = 0; v < graph.vertex_count(); ++v) {
    out << v << ":";
    for (int e : graph.rotation(v)) out << " " << e;
    out << "\n";
  }
  if (graph.has_mirror()) {
    out << "SYMMETRY\n";
    for (int v = 0; v < graph.vertex_count(); ++v) {
      if (v < graph.mirror(v)) {
        out << v << " " << graph.mirror(v) << "\n";
      }
    }
  }
}

RationalMatrix read_matrix(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.next_tokens();
  if (header.size() != 2) {
    throw ParseError("matrix header must be '<rows> <cols>'");
  }
  const int rows = parse_int(header[0]);
  const int cols = parse_int(header[1]);
  if (rows < 1 || cols < 1) {
    throw ValidationError("matrix dimensions must be positive");
  }
  RationalMatrix matrix(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto tokens = reader.next_tokens();
    if (static_cast<int>(tokens.size()) != cols) {
      throw ParseError("matrix row " + std::to_string(r + 1) + " needs " +
                       std::to_string(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) {
      matrix.at(r, c) = parse_rational(tokens[static_cast<std::size_t>(c)]);
    }
  }
  if (!reader.done()) throw ParseError("trailing lines after the matrix");
  return matrix;
}

void write_matrix(std::ostream& out, const RationalMatrix& matrix) {
  out << matrix.rows() << " " << matrix.cols() << "\n";
  for (int r = 0; r < matrix.rows(); ++r) {
    for (int c = 0; c < matrix.cols(); ++c) {
      if (c > 0) out << " ";
      out << format_rational(matrix.at(r, c));
    }
    out << "\n";
  }
}

BridgeScript read_script(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.next_tokens();
  if (header.size() != 4 || header[0] != "n" || header[2] != "base") {
    throw ParseError("script header must be 'n <n> base <list|->'");
  }
  BridgeScript script;
  script.n = parse_int(header[1]);
  if (script.n < 1) throw ValidationError("script boundary size must be "
                                          "positive");
  std::vector<int> base;
  if (header[3] != "-") {
    std::istringstream list(header[3]);
    std::string item;
    while (std::getline(list, item, ',')) base.push_back(parse_int(item));
  }
  script.base = KSubset(script.n, std::move(base));
  while (!reader.done()) {
    const auto tokens = reader.next_tokens();
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError("script move needs '<kind> <site> [weight]'");
    }
    BridgeMove move;
    if (tokens[0] == "bridge") {
      move.pair = false;
    } else if (tokens[0] == "pair") {
      move.pair = true;
    } else {
      throw ParseError("script move kind must be 'bridge' or 'pair'");
    }
    move.site = parse_int(tokens[1]);
    move.weight = tokens.size() == 3 ? parse_rational(tokens[2]) : Rational(1);
    script.moves.push_back(std::move(move));
  }
  validate_script(script);
  return script;
}

void write_script(std::ostream& out, const BridgeScript& script) {
  out << "n " << script.n << " base ";
  if (script.base.k() == 0) {
    out << "-";
  } else {
    bool first = true;
    for (int s : script.base.elements()) {
      if (!first) out << ",";
      out << s;
      first = false;
    }
  }
  out << "\n";
  for (const BridgeMove& move : script.moves) {
    out << (move.pair ? "pair" : "bridge") << " " << move.site << " "
        << format_rational(move.weight) << "\n";
  }
}

void write_plucker(std::ostream& out, const PluckerVector& point) {
  for (const auto& [subset, value] : point.coords()) {
    if (subset.k() == 0) {
      out << "-";
    } else {
      bool first = true;
      for (int i : subset.elements()) {
        if (!first) out << ",";
        out << i;
        first = false;
      }
    }
    out << "\t" << format_rational(value) << "\n";
  }
}

std::string to_dot(const PlabicGraph& graph) {
  std::ostringstream out;
  out << "graph plabic {\n";
  out << "  layout=neato;\n";
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const Vertex& vertex = graph.vertex(v);
    out << "  v" << v << " [shape=circle, style=filled, fillcolor="
        << (vertex.color == Color::black ? "black" : "white")
        << ", fontcolor="
        << (vertex.color == Color::black ? "white" : "black") << ", label=\"";
    if (vertex.boundary) out << vertex.label;
    out << "\"];\n";
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    const GraphEdge& edge = graph.edge(e);
    out << "  v" << edge.u << " -- v" << edge.v;
    if (edge.weight != 1) {
      out << " [label=\"" << format_rational(edge.weight) << "\"]";
    }
    out << ";\n";
  }
  if (graph.has_mirror()) {
    for (int v = 0; v < graph.vertex_count(); ++v) {
      if (v < graph.mirror(v)) {
        out << "  v" << v << " -- v" << graph.mirror(v)
            << " [style=dashed, color=gray, constraint=false];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

PlabicGraph read_graph_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_graph(in);
}

RationalMatrix read_matrix_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_matrix(in);
}

BridgeScript read_script_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_script(in);
}

FileKind sniff_file(const std::string& path) {
  std::ifstream in = open_file(path);
  const std::vector<std::string> lines = strip_lines(in);
  if (lines.empty()) throw ParseError("empty file '" + path + "'");
  const std::string first = tokenize(lines.front()).front();
  if (first == "PLABIC") return FileKind::graph;
  if (first == "n") return FileKind::script;
  if (std::isdigit(static_cast<unsigned char>(first[0])) || first[0] == '-') {
    return FileKind::matrix;
  }
  throw ParseError("unrecognized file format in '" + path + "'");
}

}  // namespace plabic
