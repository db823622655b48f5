#include "racgk/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace racgk {

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : labels_(std::move(labels)), adjacency_(labels_.size(), 0) {
  if (labels_.size() > kMaxVertices)
    throw GraphError("vertex cap exceeded: " + std::to_string(labels_.size()) + " vertices (maximum " +
                     std::to_string(kMaxVertices) + ")");
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw GraphError("empty vertex label");
    if (!seen.insert(l).second) throw GraphError("duplicate vertex label '" + l + "'");
  }
  for (auto [u, v] : edges) {
    if (u >= labels_.size() || v >= labels_.size()) throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("loop edge at '" + labels_[u] + "'");
    if (adjacency_[u] & bit(v))
      throw GraphError("duplicate edge " + labels_[u] + "-" + labels_[v]);
    adjacency_[u] |= bit(v);
    adjacency_[v] |= bit(u);
  }
}

Graph Graph::from_labels(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw GraphError("unknown endpoint '" + a + "'");
    if (ib == index.end()) throw GraphError("unknown endpoint '" + b + "'");
    idx.emplace_back(ia->second, ib->second);
  }
  return Graph(std::move(labels), idx);
}

namespace {
std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}
}  // namespace

Graph Graph::complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(numbered_labels(n), e);
}

Graph Graph::edgeless(std::size_t n) { return Graph(numbered_labels(n), {}); }

Graph Graph::path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(numbered_labels(n), e);
}

Graph Graph::cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(0, n - 1);
  return Graph(numbered_labels(n), e);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto a : adjacency_) twice += popcount(a);
  return twice / 2;
}

std::optional<std::size_t> Graph::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool Graph::is_clique(VertexMask m) const {
  for (VertexMask rest = m; rest; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    if ((m & ~bit(v) & ~adjacency_[v]) != 0) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertex_count(); ++u)
    for (std::size_t v = u + 1; v < vertex_count(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::non_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertex_count(); ++u)
    for (std::size_t v = u + 1; v < vertex_count(); ++v)
      if (!adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(VertexMask vertices) const {
  vertices &= all_vertices();
  std::vector<std::string> labels;
  std::vector<std::size_t> new_index(vertex_count(), 0);
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (vertices & bit(v)) {
      new_index[v] = labels.size();
      labels.push_back(labels_[v]);
    }
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (auto [u, v] : edges())
    if ((vertices & bit(u)) && (vertices & bit(v))) e.emplace_back(new_index[u], new_index[v]);
  return Graph(std::move(labels), e);
}

VertexMask Graph::mask_of(const std::vector<std::string>& labels) const {
  VertexMask m = 0;
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw GraphError("unknown vertex '" + l + "'");
    m |= bit(*i);
  }
  return m;
}

std::vector<std::string> Graph::labels_of(VertexMask m) const {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (m & bit(v)) out.push_back(labels_[v]);
  return out;
}

std::vector<std::size_t> SphericalSubset::members() const {
  std::vector<std::size_t> out;
  for (VertexMask rest = mask; rest; rest &= rest - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view text, std::size_t first_line) {
  std::vector<Token> out;
  std::size_t line = first_line;
  std::string cur;
  std::size_t cur_line = line;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back({std::move(cur), cur_line}), cur.clear();
      if (c == '\n') ++line;
      continue;
    }
    if (cur.empty()) cur_line = line;
    cur.push_back(c);
  }
  if (!cur.empty()) out.push_back({std::move(cur), cur_line});
  return out;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line); }

Graph parse_edge_list(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw ParseError(at_line(1), "malformed syntax: vertex list must be terminated by ';'");
  const auto head = text.substr(0, semi);
  const auto tail = text.substr(semi + 1);
  const std::size_t tail_line = 1 + static_cast<std::size_t>(std::count(head.begin(), head.end(), '\n'));

  std::vector<std::string> labels;
  std::map<std::string, std::size_t, std::less<>> index;
  for (auto& tok : tokenize(head, 1)) {
    if (tok.text.find('-') != std::string::npos)
      throw ParseError(at_line(tok.line), "malformed syntax: vertex label '" + tok.text + "' contains '-'");
    if (index.count(tok.text))
      throw ParseError(at_line(tok.line), "duplicate vertex label '" + tok.text + "'");
    index.emplace(tok.text, labels.size());
    labels.push_back(tok.text);
  }
  if (labels.size() > Graph::kMaxVertices)
    throw GraphError("vertex cap exceeded: " + std::to_string(labels.size()) + " vertices (maximum " +
                     std::to_string(Graph::kMaxVertices) + ")");

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto& tok : tokenize(tail, tail_line)) {
    const auto dash = tok.text.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == tok.text.size() ||
        tok.text.find('-', dash + 1) != std::string::npos || tok.text.find(';') != std::string::npos)
      throw ParseError(at_line(tok.line), "malformed syntax: edge token '" + tok.text + "' is not of the form a-b");
    const std::string a = tok.text.substr(0, dash);
    const std::string b = tok.text.substr(dash + 1);
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw ParseError(at_line(tok.line), "unknown endpoint '" + a + "'");
    if (ib == index.end()) throw ParseError(at_line(tok.line), "unknown endpoint '" + b + "'");
    if (ia->second == ib->second) throw ParseError(at_line(tok.line), "loop edge '" + tok.text + "'");
    auto key = std::minmax(ia->second, ib->second);
    if (!seen.insert(key).second)
      throw ParseError(at_line(tok.line), "duplicate edge '" + tok.text + "'");
    edges.emplace_back(ia->second, ib->second);
  }
  return Graph(std::move(labels), edges);
}

Graph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), std::string("malformed syntax: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("$", "malformed syntax: expected an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("$.vertices", "malformed syntax: expected an array of labels");

  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  const auto& vs = doc["vertices"];
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "$.vertices[" + std::to_string(i) + "]";
    if (!vs[i].is_string()) throw ParseError(where, "malformed syntax: label must be a string");
    auto l = vs[i].get<std::string>();
    if (l.empty()) throw ParseError(where, "malformed syntax: empty label");
    if (index.count(l)) throw ParseError(where, "duplicate vertex label '" + l + "'");
    index.emplace(l, labels.size());
    labels.push_back(std::move(l));
  }
  if (labels.size() > Graph::kMaxVertices)
    throw GraphError("vertex cap exceeded: " + std::to_string(labels.size()) + " vertices (maximum " +
                     std::to_string(Graph::kMaxVertices) + ")");

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  if (doc.contains("edges")) {
    const auto& es = doc["edges"];
    if (!es.is_array()) throw ParseError("$.edges", "malformed syntax: expected an array of pairs");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "$.edges[" + std::to_string(i) + "]";
      if (!es[i].is_array() || es[i].size() != 2 || !es[i][0].is_string() || !es[i][1].is_string())
        throw ParseError(where, "malformed syntax: edge must be a pair of labels");
      const auto a = es[i][0].get<std::string>(), b = es[i][1].get<std::string>();
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end()) throw ParseError(where, "unknown endpoint '" + a + "'");
      if (ib == index.end()) throw ParseError(where, "unknown endpoint '" + b + "'");
      if (ia->second == ib->second) throw ParseError(where, "loop edge at '" + a + "'");
      if (!seen.insert(std::minmax(ia->second, ib->second)).second)
        throw ParseError(where, "duplicate edge " + a + "-" + b);
      edges.emplace_back(ia->second, ib->second);
    }
  }
  return Graph(std::move(labels), edges);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kJson ? parse_json(text) : parse_edge_list(text);
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool json = first != std::string_view::npos && text[first] == '{';
  return parse_graph(text, json ? GraphFormat::kJson : GraphFormat::kEdgeList);
}

// ---------------------------------------------------------------------------
// Cliques

namespace {

void bron_kerbosch(const Graph& g, VertexMask r, VertexMask p, VertexMask x, std::vector<VertexMask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot: the vertex of P ∪ X with most neighbours in P.
  std::size_t pivot = 0, best = 0;
  bool have = false;
  for (VertexMask rest = p | x; rest; rest &= rest - 1) {
    const auto u = static_cast<std::size_t>(std::countr_zero(rest));
    const auto c = popcount(p & g.neighbors(u));
    if (!have || c > best) pivot = u, best = c, have = true;
  }
  for (VertexMask cand = p & ~g.neighbors(pivot); cand; cand &= cand - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(cand));
    bron_kerbosch(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace

std::vector<VertexMask> maximal_cliques(const Graph& g) {
  std::vector<VertexMask> out;
  bron_kerbosch(g, 0, g.all_vertices(), 0, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<SphericalSubset> enumerate_spherical(const Graph& g) {
  std::unordered_set<VertexMask> closure;
  for (VertexMask top : maximal_cliques(g)) {
    VertexMask sub = top;
    for (;;) {
      closure.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & top;
    }
  }
  std::vector<VertexMask> masks(closure.begin(), closure.end());
  std::sort(masks.begin(), masks.end(), canonical_less);
  std::vector<SphericalSubset> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back({m});
  return out;
}

std::vector<SphericalSubset> enumerate_spherical_brute_force(const Graph& g) {
  if (g.vertex_count() > 20) throw GraphError("brute-force clique enumeration is limited to 20 vertices");
  std::vector<VertexMask> masks;
  const VertexMask limit = bit(g.vertex_count());
  for (VertexMask m = 0; m < limit; ++m)
    if (g.is_clique(m)) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), canonical_less);
  std::vector<SphericalSubset> out;
  for (auto m : masks) out.push_back({m});
  return out;
}

std::vector<std::vector<PosetChain>> poset_chains(const std::vector<SphericalSubset>& cliques,
                                                  int max_length) {
  if (max_length < 0) throw std::invalid_argument("poset_chains: max_length must be non-negative");
  const std::size_t n = cliques.size();
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && cliques[i].is_subset_of(cliques[j])) above[i].push_back(j);

  std::vector<std::vector<PosetChain>> out(static_cast<std::size_t>(max_length) + 1);
  std::vector<std::size_t> stack;
  auto extend = [&](auto&& self) -> void {
    PosetChain chain;
    chain.elements.reserve(stack.size());
    for (auto i : stack) chain.elements.push_back(cliques[i].mask);
    out[stack.size() - 1].push_back(std::move(chain));
    if (stack.size() == out.size()) return;
    for (auto j : above[stack.back()]) {
      stack.push_back(j);
      self(self);
      stack.pop_back();
    }
  };
  // `above` lists are in canonical order, so depth-first order is lexicographic
  // within each length.
  for (std::size_t i = 0; i < n; ++i) {
    stack.assign(1, i);
    extend(extend);
  }
  return out;
}

Decomposition validate_decomposition(const Graph& g, VertexMask part1, VertexMask part2) {
  const VertexMask all = g.all_vertices();
  if ((part1 | part2) != all || ((part1 | part2) & ~all) != 0)
    throw DecompositionError("parts do not cover the vertex set exactly", std::nullopt);
  const VertexMask only1 = part1 & ~part2;
  const VertexMask only2 = part2 & ~part1;
  for (auto [u, v] : g.edges()) {
    const bool crossing = ((only1 & bit(u)) && (only2 & bit(v))) || ((only2 & bit(u)) && (only1 & bit(v)));
    if (crossing)
      throw DecompositionError("crossing edge " + g.label(u) + "-" + g.label(v) +
                                   " joins the two parts outside their intersection",
                               std::make_pair(u, v));
  }
  return Decomposition{part1, part2, g.induced(part1), g.induced(part2), g.induced(part1 & part2)};
}

VertexMask deposit_bits(std::uint64_t index, VertexMask ambient) {
  VertexMask out = 0;
  for (VertexMask rest = ambient; rest && index; rest &= rest - 1, index >>= 1)
    if (index & 1) out |= rest & (~rest + 1);
  return out;
}

std::uint64_t extract_bits(VertexMask sub, VertexMask ambient) {
  std::uint64_t out = 0;
  std::size_t pos = 0;
  for (VertexMask rest = ambient; rest; rest &= rest - 1, ++pos)
    if (sub & rest & (~rest + 1)) out |= std::uint64_t{1} << pos;
  return out;
}

}  // namespace racgk
