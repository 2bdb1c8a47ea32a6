#include "abchrom/fixtures.hpp"

#include <algorithm>

#include "abchrom/error.hpp"

namespace abchrom::fixtures {

namespace {

struct Builder {
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  Vertex id(std::string_view label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw InvalidFamily("unknown fixture vertex " + std::string(label));
    return static_cast<Vertex>(it - labels.begin());
  }
  void edge(std::string_view a, std::string_view b) { edges.emplace_back(id(a), id(b)); }
  LabeledGraph finish() const { return {Graph::build(static_cast<int>(labels.size()), edges), labels}; }
};

Coloring by_label(const Builder& b, std::initializer_list<std::pair<const char*, Color>> colors) {
  std::vector<Color> out(b.labels.size(), 0);
  for (auto [label, col] : colors) out[static_cast<std::size_t>(b.id(label))] = col;
  return Coloring(std::move(out));
}

}  // namespace

const Coloring& Fixture::coloring(std::string_view key) const {
  for (const auto& [k, c] : colorings)
    if (k == key) return c;
  throw InvalidFamily(name + " has no coloring named " + std::string(key));
}

Vertex Fixture::vertex(std::string_view label) const {
  auto it = std::find(graph.labels.begin(), graph.labels.end(), label);
  if (it == graph.labels.end()) throw InvalidFamily(name + " has no vertex " + std::string(label));
  return static_cast<Vertex>(it - graph.labels.begin());
}

Fixture figure1_c8() {
  // y and x are the two color-3 vertices named in the text.
  Builder b{{"a", "y", "c", "x", "e", "f", "g", "h"}, {}};
  for (std::size_t i = 0; i < 8; ++i) b.edge(b.labels[i], b.labels[(i + 1) % 8]);
  Fixture f{"fig1-c8", b.finish(), {}};
  f.colorings.emplace_back("c", Coloring({1, 3, 1, 3, 1, 2, 1, 2}));
  return f;
}

Fixture figure1_g() {
  Builder b{{"a1", "v", "c1", "u", "e1", "f1", "a", "b", "w", "c", "d2", "z", "t"}, {}};
  const char* cycle[] = {"a1", "v", "c1", "u", "e1", "f1", "a", "b"};
  for (std::size_t i = 0; i < 8; ++i) b.edge(cycle[i], cycle[(i + 1) % 8]);
  b.edge("b", "w");
  b.edge("w", "a");
  b.edge("b", "c");
  b.edge("c", "a");
  b.edge("u", "d2");
  b.edge("v", "z");
  b.edge("t", "c");
  Fixture f{"fig1-g", b.finish(), {}};
  auto colored = [&](Color z) {
    return by_label(b, {{"a1", 1}, {"v", 3}, {"c1", 1}, {"u", 3}, {"e1", 1}, {"f1", 2}, {"a", 1},
                        {"b", 2}, {"w", 3}, {"c", 4}, {"d2", 4}, {"z", z}, {"t", 3}});
  };
  f.colorings.emplace_back("z2", colored(2));
  f.colorings.emplace_back("z4", colored(4));
  return f;
}

Fixture figure2() {
  Builder b{{"b", "a", "c0", "c", "e", "f0", "d", "h0", "i0", "f", "k0", "l0", "m0", "e1", "e2", "j1", "j2", "g",
             "a2", "h"},
            {}};
  const std::pair<const char*, const char*> edges[] = {
      {"d", "b"},  {"b", "a"},   {"a", "c0"}, {"c0", "e"}, {"e", "f0"}, {"f0", "d"}, {"d", "c"},
      {"c", "a"},  {"a", "h"},   {"a", "g"},  {"g", "a2"}, {"a2", "b"}, {"b", "g"},  {"g", "c"},
      {"c", "a2"}, {"b", "c"},   {"c", "h0"}, {"h0", "i0"}, {"i0", "f"}, {"f", "m0"}, {"m0", "l0"},
      {"l0", "k0"}, {"k0", "d"}, {"e1", "e"}, {"e", "e2"}, {"j1", "f"}, {"f", "j2"}};
  for (auto [x, y] : edges) b.edge(x, y);
  Fixture f{"fig2", b.finish(), {}};
  f.colorings.emplace_back(
      "c", by_label(b, {{"b", 2}, {"a", 1}, {"c0", 2}, {"c", 4}, {"e", 3}, {"f0", 2}, {"d", 1}, {"h0", 5},
                        {"i0", 4}, {"f", 1}, {"k0", 4}, {"l0", 5}, {"m0", 4}, {"e1", 4}, {"e2", 5}, {"j1", 2},
                        {"j2", 3}, {"g", 5}, {"a2", 3}, {"h", 4}}));
  return f;
}

Fixture figure4() {
  Builder b{{"y1^1", "y2^1", "y3^1", "y4^1", "x1^1", "x2^1", "z1^1", "u", "y1^2"}, {}};
  for (const char* x : {"x1^1", "x2^1"})
    for (const char* y : {"y1^1", "y2^1", "y3^1", "y4^1"}) b.edge(x, y);
  b.edge("y1^1", "z1^1");
  b.edge("y1^1", "u");
  b.edge("y1^1", "y1^2");
  Fixture f{"fig4", b.finish(), {}};
  f.colorings.emplace_back("c", by_label(b, {{"y1^1", 1}, {"y2^1", 5}, {"y3^1", 6}, {"y4^1", 7}, {"x1^1", 4},
                                             {"x2^1", 4}, {"z1^1", 3}, {"u", 8}, {"y1^2", 2}}));
  return f;
}

Fixture figure7() {
  Builder b{{"a", "v", "c", "d", "a1", "u", "z", "d1", "e1", "e", "x'", "x", "y", "y'"}, {}};
  const std::pair<const char*, const char*> edges[] = {
      {"a", "u"},   {"a", "d1"}, {"a", "z"},   {"a", "e"},   {"a", "x'"}, {"v", "e"},   {"v", "a1"},
      {"v", "d1"},  {"v", "x"},  {"v", "z"},   {"c", "u"},   {"c", "d1"}, {"c", "a1"},  {"c", "e"},
      {"c", "y"},   {"d", "z"},  {"d", "a1"},  {"d", "u"},   {"d", "e"},  {"d", "y'"},  {"a1", "e1"},
      {"a1", "x'"}, {"u", "e1"}, {"u", "x"},   {"z", "e1"},  {"z", "y"},  {"d1", "y'"}, {"d1", "e1"},
      {"e1", "e"},  {"x'", "x"}, {"x'", "y'"}, {"x", "y"},   {"y", "y'"}};
  for (auto [x, y] : edges) b.edge(x, y);
  Fixture f{"fig7", b.finish(), {}};
  auto colored = [&](Color x) {
    return by_label(b, {{"a", 1}, {"v", 2}, {"c", 3}, {"d", 4}, {"a1", 1}, {"u", 2}, {"z", 3}, {"d1", 4},
                        {"e1", 5}, {"e", 6}, {"x'", 5}, {"x", x}, {"y", 5}, {"y'", 6}});
  };
  f.colorings.emplace_back("c", colored(6));
  f.colorings.emplace_back("c-prime", colored(3));
  return f;
}

std::vector<std::string> names() { return {"fig1-c8", "fig1-g", "fig2", "fig4", "fig7"}; }

Fixture by_name(std::string_view name) {
  if (name == "fig1-c8") return figure1_c8();
  if (name == "fig1-g") return figure1_g();
  if (name == "fig2") return figure2();
  if (name == "fig4") return figure4();
  if (name == "fig7") return figure7();
  throw InvalidFamily("unknown figure " + std::string(name));
}

}  // namespace abchrom::fixtures
