#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "racgk/error.hpp"

namespace racgk {

// Bit i set <=> vertex i (in declaration order) is present.
using VertexMask = std::uint64_t;

inline std::size_t popcount(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }
inline VertexMask bit(std::size_t v) { return VertexMask{1} << v; }

// Canonical clique order: by size, then lexicographically by sorted member list.
inline bool canonical_less(VertexMask a, VertexMask b) {
  const auto sa = popcount(a), sb = popcount(b);
  if (sa != sb) return sa < sb;
  if (a == b) return false;
  const VertexMask lowest_diff = (a ^ b) & (~(a ^ b) + 1);
  return (a & lowest_diff) != 0;
}

struct CanonicalOrder {
  bool operator()(VertexMask a, VertexMask b) const { return canonical_less(a, b); }
};

// Finite simple graph. Vertex order is the declaration order and is never changed.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  Graph() = default;
  // Throws GraphError on loops, duplicate edges, out-of-range endpoints,
  // duplicate labels or more than kMaxVertices vertices.
  Graph(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  static Graph from_labels(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& edges);
  static Graph complete(std::size_t n);
  static Graph edgeless(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  VertexMask all_vertices() const {
    return vertex_count() == 64 ? ~VertexMask{0} : bit(vertex_count()) - 1;
  }
  VertexMask neighbors(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return (adjacency_[u] & bit(v)) != 0; }
  bool is_clique(VertexMask m) const;

  // Sorted (u < v) edge and non-edge lists.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::vector<std::pair<std::size_t, std::size_t>> non_edges() const;

  // Full subgraph on `vertices`, keeping the parent's relative order.
  Graph induced(VertexMask vertices) const;

  VertexMask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(VertexMask m) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<VertexMask> adjacency_;
};

// A clique of the parent graph, including the empty set.
struct SphericalSubset {
  VertexMask mask = 0;

  std::size_t size() const { return popcount(mask); }
  bool empty() const { return mask == 0; }
  std::vector<std::size_t> members() const;
  bool is_subset_of(const SphericalSubset& other) const { return (mask & ~other.mask) == 0; }

  friend bool operator==(const SphericalSubset&, const SphericalSubset&) = default;
};

// J_0 ⊂ J_1 ⊂ ... ⊂ J_k, strictly increasing; a chain of length k.
struct PosetChain {
  std::vector<VertexMask> elements;

  std::size_t length() const { return elements.empty() ? 0 : elements.size() - 1; }
  VertexMask minimum() const { return elements.front(); }
  friend auto operator<=>(const PosetChain&, const PosetChain&) = default;
};

enum class GraphFormat { kEdgeList, kJson };

Graph parse_graph(std::string_view text, GraphFormat format);
// Picks JSON when the first non-blank character is '{'.
Graph parse_graph(std::string_view text);

std::vector<VertexMask> maximal_cliques(const Graph& g);

// All cliques (∅ included) in canonical order; the length is d.
std::vector<SphericalSubset> enumerate_spherical(const Graph& g);

// Reference enumeration by filtering all 2^n subsets; n <= 20.
std::vector<SphericalSubset> enumerate_spherical_brute_force(const Graph& g);

// chains[k] lists all chains of length k for k = 0..max_length, in lexicographic
// order of canonical positions. `cliques` must be closed under subsets.
std::vector<std::vector<PosetChain>> poset_chains(const std::vector<SphericalSubset>& cliques,
                                                  int max_length);

struct Decomposition {
  VertexMask part1 = 0;
  VertexMask part2 = 0;
  Graph first;   // full subgraph on part1
  Graph second;  // full subgraph on part2
  Graph shared;  // full subgraph on part1 ∩ part2
};

class DecompositionError : public Error {
 public:
  DecompositionError(const std::string& message, std::optional<std::pair<std::size_t, std::size_t>> edge)
      : Error(message), edge_(edge) {}
  const std::optional<std::pair<std::size_t, std::size_t>>& crossing_edge() const { return edge_; }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> edge_;
};

// Checks that g = Γ₁ ∪ Γ₂ with Γ₁, Γ₂ full subgraphs on the two parts.
Decomposition validate_decomposition(const Graph& g, VertexMask part1, VertexMask part2);

// Submask of `ambient` whose i-th member (ascending) is present iff bit i of `index` is set.
VertexMask deposit_bits(std::uint64_t index, VertexMask ambient);
// Inverse of deposit_bits for sub ⊆ ambient.
std::uint64_t extract_bits(VertexMask sub, VertexMask ambient);

}  // namespace racgk
