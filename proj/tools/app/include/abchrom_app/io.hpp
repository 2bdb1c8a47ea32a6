#pragma once

#include <optional>
#include <string>

#include <abchrom/coloring.hpp>
#include <abchrom/families.hpp>
#include <abchrom/io.hpp>

namespace abchrom::app {

/// Where a command reads its graph from: a file ("-" for stdin) or a family spec.
struct GraphSource {
  std::string path;
  std::string family;
  std::string format;  ///< "edgelist", "dimacs" or empty to guess from the file name
};

struct LoadedGraph {
  LabeledGraph graph;
  std::optional<FamilySpec> spec;
};

/// Throws abchrom::Error subclasses; a missing file is a ParseError without a line.
std::string read_text(const std::string& path);
LoadedGraph load_graph(const GraphSource& source);
Coloring load_coloring(const std::string& path);

GraphFormat parse_format(const std::string& name);

}  // namespace abchrom::app
