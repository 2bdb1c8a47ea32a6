#include "abchrom/io.hpp"

#include <charconv>
#include <sstream>

#include "abchrom/error.hpp"

namespace abchrom {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    auto j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

int to_vertex_count(std::string_view tok, std::size_t line) {
  auto n = to_int(tok, line);
  if (n < 0 || n > 1'000'000) throw ParseError(line, "vertex count out of range");
  return static_cast<int>(n);
}

Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  int n = -1;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto tok = tokens(lines[i]);
    if (tok.empty()) continue;
    const auto lineno = i + 1;
    if (n < 0) {
      if (tok.size() != 1) throw ParseError(lineno, "first line must hold the vertex count only");
      n = to_vertex_count(tok[0], lineno);
      continue;
    }
    if (tok.size() != 2) throw ParseError(lineno, "expected 'u v'");
    auto u = to_int(tok[0], lineno), v = to_int(tok[1], lineno);
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex outside [0," + std::to_string(n) + ")");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw ParseError(0, "missing vertex count");
  return Graph::build(n, edges);
}

Graph parse_dimacs(std::string_view text) {
  auto lines = split_lines(text);
  int n = -1;
  long long declared = -1;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto tok = tokens(lines[i]);
    const auto lineno = i + 1;
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(lineno, "second 'p' line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      n = to_vertex_count(tok[2], lineno);
      declared = to_int(tok[3], lineno);
      if (declared < 0) throw ParseError(lineno, "negative edge count");
      continue;
    }
    if (tok[0] == "e") {
      if (n < 0) throw ParseError(lineno, "edge before the 'p' line");
      if (tok.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
      auto u = to_int(tok[1], lineno), v = to_int(tok[2], lineno);
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex outside [1," + std::to_string(n) + "]");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (n < 0) throw ParseError(0, "missing 'p edge' line");
  if (static_cast<long long>(edges.size()) != declared)
    throw ParseError(0, "header declares " + std::to_string(declared) + " edges but " + std::to_string(edges.size()) +
                            " were listed");
  return Graph::build(n, edges);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format, const std::vector<std::string>& comments) {
  std::ostringstream out;
  if (format == GraphFormat::edge_list) {
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  } else {
    for (const auto& line : comments) out << "c " << line << '\n';
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
  return out.str();
}

Coloring parse_coloring(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  auto next_nonblank = [&]() -> std::size_t {
    while (i < lines.size() && tokens(lines[i]).empty()) ++i;
    return i;
  };
  if (next_nonblank() >= lines.size()) throw ParseError(0, "missing color count");
  auto head = tokens(lines[i]);
  if (head.size() != 1) throw ParseError(i + 1, "first line must hold the color count only");
  auto k = to_int(head[0], i + 1);
  if (k < 0) throw ParseError(i + 1, "negative color count");
  ++i;
  std::vector<Color> colors;
  if (next_nonblank() < lines.size()) {
    const auto lineno = i + 1;
    for (auto tok : tokens(lines[i])) colors.push_back(static_cast<Color>(to_int(tok, lineno)));
    ++i;
    if (next_nonblank() < lines.size()) throw ParseError(i + 1, "trailing content after the color line");
  }
  try {
    return Coloring(std::move(colors), static_cast<int>(k));
  } catch (const InvalidColoring& e) {
    throw ParseError(0, e.what());
  }
}

std::string serialize_coloring(const Coloring& c) {
  std::ostringstream out;
  out << c.num_colors() << '\n';
  for (int v = 0; v < c.size(); ++v) out << (v ? " " : "") << c[v];
  out << '\n';
  return out.str();
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels, const Coloring* coloring) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    std::string label = static_cast<std::size_t>(v) < labels.size() ? labels[static_cast<std::size_t>(v)] : std::to_string(v);
    if (coloring) label += " c=" + std::to_string((*coloring)[v]);
    out << "  " << v << " [label=\"" << label << "\"];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

GraphFormat format_from_path(std::string_view path) {
  for (std::string_view ext : {".dimacs", ".col", ".clq"})
    if (path.size() >= ext.size() && path.substr(path.size() - ext.size()) == ext) return GraphFormat::dimacs;
  return GraphFormat::edge_list;
}

}  // namespace abchrom
