#include "abchrom/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "abchrom/error.hpp"
#include "abchrom/exact.hpp"
#include "abchrom/fixtures.hpp"

namespace abchrom {

namespace {

const std::map<std::string, Family, std::less<>>& family_names() {
  static const std::map<std::string, Family, std::less<>> names{
      {"empty", Family::empty},
      {"path", Family::path},
      {"cycle", Family::cycle},
      {"complete", Family::complete},
      {"complete_bipartite", Family::complete_bipartite},
      {"star", Family::star},
      {"wheel", Family::wheel},
      {"fan", Family::fan},
      {"complete_split", Family::complete_split},
      {"star_of_stars", Family::star_of_stars},
      {"roof", Family::roof},
      {"quad", Family::quad_extremal},
  };
  return names;
}

std::size_t arity(Family f) {
  return f == Family::complete_bipartite || f == Family::complete_split ? 2 : 1;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    auto spec = spec_();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidFamily("bad family spec '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string word() {
    skip_space();
    auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '-'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  int integer() {
    skip_space();
    int value = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  FamilySpec spec_() {
    auto name = word();
    if (name.empty()) fail("expected a family name");
    FamilySpec spec;
    if (name == "join") {
      spec.family = Family::join_of;
      if (!eat('(')) fail("expected '('");
      spec.parts.push_back(spec_());
      if (!eat(',')) fail("expected ','");
      spec.parts.push_back(spec_());
      if (!eat(')')) fail("expected ')'");
      return spec;
    }
    auto figures = fixtures::names();
    if (std::find(figures.begin(), figures.end(), name) != figures.end()) {
      spec.family = Family::figure;
      spec.name = name;
      return spec;
    }
    auto it = family_names().find(name);
    if (it == family_names().end()) fail("unknown family '" + name + "'");
    spec.family = it->second;
    if (!eat(':')) fail("expected ':'");
    spec.params.push_back(integer());
    while (spec.params.size() < arity(spec.family)) {
      if (!eat(',')) fail("expected ','");
      spec.params.push_back(integer());
    }
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void require(bool ok, const FamilySpec& spec, const char* range) {
  if (!ok) throw InvalidFamily(spec.to_string() + ": parameters must satisfy " + range);
}

// Builds graphs by label, so constructions read like their definitions.
struct Named {
  std::vector<std::string> labels;
  std::map<std::string, Vertex> index;
  std::vector<Edge> edges;

  Vertex add(const std::string& label) {
    auto [it, fresh] = index.emplace(label, static_cast<Vertex>(labels.size()));
    if (fresh) labels.push_back(label);
    return it->second;
  }
  void edge(const std::string& a, const std::string& b) { edges.emplace_back(add(a), add(b)); }
  LabeledGraph finish() const { return {Graph::build(static_cast<int>(labels.size()), edges), labels}; }
};

std::string sup(const std::string& base, int sub, int top) {
  return base + std::to_string(sub) + "^" + std::to_string(top);
}

LabeledGraph numbered(int n, std::vector<Edge> edges, const std::string& prefix = "v") {
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back(prefix + std::to_string(v));
  return {Graph::build(n, edges), labels};
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::build(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(0, n - 1);
  return Graph::build(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::build(n, e);
}

Graph empty_graph(int n) { return Graph::build(n, std::span<const Edge>{}); }

LabeledGraph labelled_join(const LabeledGraph& g, const LabeledGraph& h, const std::string& gp, const std::string& hp) {
  LabeledGraph out{join(g.graph, h.graph), {}};
  for (const auto& l : g.labels) out.labels.push_back(gp + l);
  for (const auto& l : h.labels) out.labels.push_back(hp + l);
  return out;
}

LabeledGraph roof(int n) {
  Named g;
  const int columns = 2 * n + 4;
  g.add("u");
  g.add("v");
  for (int i = 1; i <= columns; ++i) {
    for (int l = 1; l <= n + 2; ++l) g.add(sup("y", l, i));
    for (int j = 1; j <= 2; ++j) g.add(sup("x", j, i));
    for (int j = 1; j <= n - 1; ++j) g.add(sup("z", j, i));
  }
  g.edge("u", sup("y", 1, 1));
  g.edge("v", sup("y", 1, columns));
  for (int i = 1; i < columns; ++i) g.edge(sup("y", 1, i), sup("y", 1, i + 1));
  for (int i = 1; i <= columns; ++i) {
    for (int j = 1; j <= 2; ++j)
      for (int l = 1; l <= n + 2; ++l) g.edge(sup("x", j, i), sup("y", l, i));
    for (int j = 1; j <= n - 1; ++j) g.edge(sup("y", 1, i), sup("z", j, i));
  }
  return g.finish();
}

// Label of y_k in copy i after gluing the last y of each copy to the first y of the next.
std::string quad_y(int n, int k, int i) {
  const int last = n * (2 * n - 1);
  if (k == last && i < 2 * n * n) return sup("y", 1, i + 1);
  return sup("y", k, i);
}

LabeledGraph quad(int n) {
  if (n == 1) {
    Named g;
    for (const char* l : {"v^0", "x1^0", "x2^0", "y1^0"}) g.add(l);
    g.edge("v^0", "x1^0");
    g.edge("v^0", "x2^0");
    g.edge("x1^0", "y1^0");
    g.edge("x2^0", "y1^0");
    return g.finish();
  }
  Named g;
  const int copies = 2 * n * n + 1;
  const int ys = n * (2 * n - 1);
  for (int i = 0; i < copies; ++i) {
    g.add("v^" + std::to_string(i));
    for (int j = 1; j <= 2 * n; ++j) g.add(sup("x", j, i));
    for (int k = 1; k <= ys; ++k) g.add(quad_y(n, k, i));
  }
  for (int i = 0; i < copies; ++i) {
    for (int j = 1; j <= 2 * n; ++j) g.edge("v^" + std::to_string(i), sup("x", j, i));
    for (int l = 1; l <= n; ++l)
      for (int j : {2 * l - 1, 2 * l})
        for (int k = (2 * n - 1) * (l - 1) + 1; k <= (2 * n - 1) * l; ++k) g.edge(sup("x", j, i), quad_y(n, k, i));
  }
  return g.finish();
}

LabeledGraph star_of_stars(int n) {
  Named g;
  g.add("c");
  for (int j = 1; j <= n + 1; ++j) g.edge("c", "s" + std::to_string(j));
  for (int j = 1; j <= n + 1; ++j)
    for (int t = 1; t <= n; ++t) g.edge("s" + std::to_string(j), "l" + std::to_string(j) + "_" + std::to_string(t));
  return g.finish();
}

Color wrap(int value, int modulus) { return ((value - 1) % modulus + modulus) % modulus + 1; }

Coloring roof_coloring(const FamilySpec& spec, int n) {
  auto lg = roof(n);
  const int columns = 2 * n + 4;
  std::map<std::string, Color> c;
  c["u"] = columns;
  c["v"] = 1;
  for (int i = 1; i <= columns; ++i) {
    c[sup("y", 1, i)] = i;
    for (int j = 1; j <= n - 1; ++j) c[sup("z", j, i)] = wrap(i + 1 + j, columns);
    c[sup("x", 1, i)] = c[sup("x", 2, i)] = wrap(i + n + 1, columns);
    for (int l = 2; l <= n + 2; ++l) c[sup("y", l, i)] = wrap(i + n + l, columns);
  }
  std::vector<Color> out;
  for (const auto& label : lg.labels) out.push_back(c.at(label));
  (void)spec;
  return Coloring(std::move(out), columns);
}

Coloring quad_coloring(int n) {
  auto lg = quad(n);
  if (n == 1) return Coloring({3, 2, 2, 1});
  const int modulus = 2 * n * n + 1;
  const int ys = n * (2 * n - 1);
  std::map<std::string, Color> c;
  auto put = [&](const std::string& label, int value) { c[label] = ((value % modulus) + modulus) % modulus + 1; };
  for (int i = 0; i < modulus; ++i) {
    put(quad_y(n, 1, i), i);
    put(quad_y(n, ys, i), i + 1);
    for (int k = 2; k <= ys - 1; ++k) put(quad_y(n, k, i), i + k);
    for (int l = 1; l <= n; ++l) {
      put(sup("x", 2 * l - 1, i), i + ys - 1 + l);
      put(sup("x", 2 * l, i), i + ys - 1 + l);
    }
    put("v^" + std::to_string(i), i + 2 * n * n);
  }
  std::vector<Color> out;
  for (const auto& label : lg.labels) out.push_back(c.at(label));
  return Coloring(std::move(out), modulus);
}

bool is_complete(const Graph& g) {
  const long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

}  // namespace

std::string FamilySpec::to_string() const {
  if (family == Family::join_of) return "join(" + parts.at(0).to_string() + "," + parts.at(1).to_string() + ")";
  if (family == Family::figure) return name;
  std::string out;
  for (const auto& [key, f] : family_names())
    if (f == family) out = key;
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : ":") + std::to_string(params[i]);
  return out;
}

FamilySpec parse_family(std::string_view text) { return Parser(text).parse(); }

LabeledGraph generate(const FamilySpec& spec) {
  const auto p = [&](std::size_t i) { return spec.params.at(i); };
  switch (spec.family) {
    case Family::empty:
      require(p(0) >= 1, spec, "n >= 1");
      return numbered(p(0), {});
    case Family::path:
      require(p(0) >= 1, spec, "n >= 1");
      return {path_graph(p(0)), numbered(p(0), {}).labels};
    case Family::cycle:
      require(p(0) >= 3, spec, "k >= 3");
      return {cycle_graph(p(0)), numbered(p(0), {}).labels};
    case Family::complete:
      require(p(0) >= 1, spec, "n >= 1");
      return {complete_graph(p(0)), numbered(p(0), {}).labels};
    case Family::complete_bipartite:
      require(p(0) >= 1 && p(1) >= 1, spec, "m, n >= 1");
      return labelled_join(numbered(p(0), {}, "a"), numbered(p(1), {}, "b"), "", "");
    case Family::star:
      require(p(0) >= 1, spec, "n >= 1");
      return labelled_join({empty_graph(1), {"c"}}, numbered(p(0), {}, "l"), "", "");
    case Family::wheel:
      require(p(0) >= 4, spec, "k >= 4");
      return labelled_join({empty_graph(1), {"h"}}, {cycle_graph(p(0) - 1), numbered(p(0) - 1, {}, "r").labels}, "", "");
    case Family::fan:
      require(p(0) >= 3, spec, "k >= 3");
      return labelled_join({empty_graph(1), {"h"}}, {path_graph(p(0) - 1), numbered(p(0) - 1, {}, "p").labels}, "", "");
    case Family::complete_split:
      require(p(0) >= 1 && p(1) >= 1, spec, "n, m >= 1");
      return labelled_join({complete_graph(p(0)), numbered(p(0), {}, "k").labels}, numbered(p(1), {}, "i"), "", "");
    case Family::star_of_stars:
      require(p(0) >= 1, spec, "n >= 1");
      return star_of_stars(p(0));
    case Family::roof:
      require(p(0) >= 1, spec, "n >= 1");
      return roof(p(0));
    case Family::quad_extremal:
      require(p(0) >= 1, spec, "n >= 1");
      return quad(p(0));
    case Family::join_of:
      return labelled_join(generate(spec.parts.at(0)), generate(spec.parts.at(1)), "L.", "R.");
    case Family::figure:
      return fixtures::by_name(spec.name).graph;
  }
  throw InvalidFamily("unhandled family");
}

bool has_reference_coloring(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::roof:
    case Family::quad_extremal:
    case Family::figure:
      return true;
    case Family::path:
      return spec.params.at(0) >= 5;
    case Family::cycle:
      return spec.params.at(0) >= 3;
    default:
      return false;
  }
}

Coloring reference_coloring(const FamilySpec& spec) {
  if (!has_reference_coloring(spec)) throw InvalidFamily(spec.to_string() + " has no reference coloring");
  switch (spec.family) {
    case Family::roof:
      require(spec.params.at(0) >= 1, spec, "n >= 1");
      return roof_coloring(spec, spec.params[0]);
    case Family::quad_extremal:
      require(spec.params.at(0) >= 1, spec, "n >= 1");
      return quad_coloring(spec.params[0]);
    case Family::figure: {
      auto f = fixtures::by_name(spec.name);
      return f.colorings.front().second;
    }
    case Family::path: {
      std::vector<Color> c;
      for (int i = 1; i <= spec.params[0]; ++i) c.push_back(i % 3 + 1);
      return Coloring(std::move(c));
    }
    case Family::cycle: {
      const int k = spec.params[0];
      std::vector<Color> c;
      for (int i = 0; i < k; ++i) c.push_back(i % 3 + 1);
      // A trailing 1 would touch vertex 0; 2 is always free there.
      if (k % 3 == 1) c.back() = 2;
      if (k == 4) c = {1, 2, 1, 3};
      return Coloring(std::move(c));
    }
    default:
      break;
  }
  throw InvalidFamily(spec.to_string() + " has no reference coloring");
}

AbValue formula_ab(const FamilySpec& spec) {
  auto exact = [](int v) { return AbValue{v, v}; };
  const auto p = [&](std::size_t i) { return spec.params.at(i); };
  switch (spec.family) {
    case Family::empty:
      require(p(0) >= 1, spec, "n >= 1");
      return exact(1);
    case Family::path:
      require(p(0) >= 5, spec, "l >= 5");
      return exact(3);
    case Family::cycle:
      require(p(0) >= 3, spec, "k >= 3");
      return exact(3);
    case Family::complete:
      require(p(0) >= 1, spec, "n >= 1");
      return exact(p(0));
    case Family::complete_bipartite:
      // With one side a single vertex the join theorem's complete-factor clause applies instead.
      require((p(0) >= 2 && p(1) >= 2) || (p(0) == 1 && p(1) == 1), spec, "m, n >= 2");
      return exact(1 + std::max(p(0), p(1)));
    case Family::star:
      require(p(0) >= 1, spec, "n >= 1");
      return exact(2);
    case Family::wheel:
      require(p(0) >= 5, spec, "k >= 5");
      return exact(4);
    case Family::fan:
      require(p(0) >= 6, spec, "k >= 6");
      return exact(4);
    case Family::complete_split:
      require(p(0) >= 1 && p(1) >= 1, spec, "n, m >= 1");
      return exact(p(0) + 1);
    case Family::star_of_stars:
      require(p(0) >= 1, spec, "n >= 1");
      return exact(p(0) + 2);
    case Family::roof:
      require(p(0) >= 1, spec, "n >= 1");
      return exact(2 * p(0) + 4);
    case Family::quad_extremal:
      require(p(0) >= 1, spec, "n >= 1");
      return exact(2 * p(0) * p(0) + 1);
    case Family::join_of: {
      const auto& a = spec.parts.at(0);
      const auto& b = spec.parts.at(1);
      auto ga = generate(a).graph, gb = generate(b).graph;
      const bool ka = is_complete(ga), kb = is_complete(gb);
      if (ka && kb) return exact(ga.order() + gb.order());
      if (kb) {
        auto fa = formula_ab(a);
        return {fa.lo + gb.order(), fa.hi + gb.order()};
      }
      if (ka) {
        auto fb = formula_ab(b);
        return {fb.lo + ga.order(), fb.hi + ga.order()};
      }
      auto fa = formula_ab(a), fb = formula_ab(b);
      return {std::max(fa.lo + gb.order(), fb.lo + ga.order()), std::max(fa.hi + gb.order(), fb.hi + ga.order())};
    }
    case Family::figure:
      break;
  }
  throw InvalidFamily(spec.to_string() + " has no closed form");
}

AbValue tree_ab_interval(const Graph& g) {
  if (!is_connected(g) || g.size() != g.order() - 1) throw PreconditionError("graph is not a tree");
  const int m = m_degree(g);
  return {std::max(1, m - 1), m};
}

}  // namespace abchrom
