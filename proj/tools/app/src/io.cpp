#include "abchrom_app/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <abchrom/error.hpp>

namespace abchrom::app {

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

GraphFormat parse_format(const std::string& name) {
  if (name == "edgelist") return GraphFormat::edge_list;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw ParseError(0, "unknown graph format '" + name + "'");
}

LoadedGraph load_graph(const GraphSource& source) {
  if (!source.family.empty() && !source.path.empty()) throw ParseError(0, "give either a graph file or a family, not both");
  if (!source.family.empty()) {
    auto spec = parse_family(source.family);
    return {generate(spec), spec};
  }
  if (source.path.empty()) throw ParseError(0, "no graph given");
  const auto format = source.format.empty() ? format_from_path(source.path) : parse_format(source.format);
  auto g = parse_graph(read_text(source.path), format);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.order(); ++v) labels.push_back(std::to_string(v));
  return {{std::move(g), std::move(labels)}, std::nullopt};
}

Coloring load_coloring(const std::string& path) { return parse_coloring(read_text(path)); }

}  // namespace abchrom::app
