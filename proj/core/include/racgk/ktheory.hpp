#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "racgk/graph.hpp"
#include "racgk/hermite.hpp"
#include "racgk/int_matrix.hpp"
#include "racgk/rep_ring.hpp"

namespace racgk {

// star: monomials in s* = the sign characters.  bar: monomials in s̄ = s* − 1.
enum class Basis { kStar, kBar };

const char* to_string(Basis b);

using GraphPtr = std::shared_ptr<const Graph>;

/// Element of K⁰_W(E̲W) = Z[S*]/I written on the clique basis.
///
/// Every key is a clique of the graph; non-clique supports are rewritten away
/// before an operation returns.
class KRingElement {
 public:
  using Terms = std::map<VertexMask, BigInt, CanonicalOrder>;

  KRingElement(GraphPtr graph, Basis basis);

  static KRingElement monomial(GraphPtr graph, Basis basis, VertexMask clique, const BigInt& coeff = 1);
  static KRingElement constant(GraphPtr graph, Basis basis, const BigInt& value);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  BigInt coefficient(VertexMask clique) const;
  bool is_zero() const { return terms_.empty(); }

  // Throws AlgebraError if `clique` is not a clique.
  void add_term(VertexMask clique, const BigInt& coeff);

  KRingElement& operator+=(const KRingElement& other);
  KRingElement& operator-=(const KRingElement& other);
  KRingElement& operator*=(const BigInt& scalar);
  friend KRingElement operator+(KRingElement a, const KRingElement& b) { return a += b; }
  friend KRingElement operator-(KRingElement a, const KRingElement& b) { return a -= b; }
  friend KRingElement operator*(KRingElement a, const BigInt& s) { return a *= s; }

  // Same graph, same basis, same coefficients.
  friend bool operator==(const KRingElement& a, const KRingElement& b);

 private:
  friend class StarRewriter;
  void require_compatible(const KRingElement& other, const char* op) const;

  GraphPtr graph_;
  Basis basis_;
  Terms terms_;
};

bool same_graph(const Graph& a, const Graph& b);

/// Star-basis product. Monomials multiply by symmetric difference (s*² = 1);
/// a non-clique support K is rewritten with the smallest non-adjacent pair
/// {s < t} ⊆ K as m_K → m_{K∖t} + m_{K∖s} − m_{K∖{s,t}} until only cliques remain.
KRingElement multiply_star(const KRingElement& a, const KRingElement& b);

/// Bar-basis product: m̄_J·m̄_K = (−2)^{|J∩K|} m̄_{J∪K} if J ∪ K is a clique, else 0.
KRingElement multiply_bar(const KRingElement& a, const KRingElement& b);

// Dispatches on the (shared) basis of the operands.
KRingElement multiply(const KRingElement& a, const KRingElement& b);

// Star-basis normal form of the single monomial m*_K for an arbitrary K ⊆ V.
KRingElement star_normal_form(const GraphPtr& graph, VertexMask support);

KRingElement convert_basis(const KRingElement& a, Basis target);

// Component of ρ at `target`: m*_K ↦ m*_{K ∩ target} in R(W_target).
RepRingElement restrict_to_clique(const KRingElement& a, VertexMask target);

// Dimension homomorphism to Z.
BigInt augmentation(const KRingElement& a);

struct Relation {
  std::string text;
  std::vector<std::size_t> vertices;  // one vertex (square relation) or a non-edge pair
};

struct Presentation {
  std::vector<std::string> generators;  // s* for s ∈ V in declaration order
  std::vector<Relation> star_relations;  // s*² − 1, then s*t* − s* − t* + 1 per non-edge
  std::vector<Relation> bar_relations;   // s̄(s̄ + 2), then s̄t̄ per non-edge
  std::vector<SphericalSubset> basis;    // canonical clique order
  std::size_t rank = 0;                  // d, the number of spherical subgroups
};

Presentation presentation_report(const Graph& g);

/// The sublattice I^k ⊆ Z^d of the k-th power of the augmentation ideal, in bar
/// coordinates ordered by the canonical clique order.
struct IdealLattice {
  GraphPtr graph;
  std::size_t power = 0;
  std::vector<VertexMask> coordinates;
  HermiteForm form;

  const IntMatrix& basis_matrix() const { return form.basis; }
};

IdealLattice ideal_power(const GraphPtr& graph, std::size_t k);
// I^1, ..., I^{max_power}, each computed from the previous one.
std::vector<IdealLattice> ideal_powers(const GraphPtr& graph, std::size_t max_power);

// [outer : inner] for nested lattices of equal rank; zero when ranks differ.
BigInt lattice_index(const IdealLattice& outer, const IdealLattice& inner);

}  // namespace racgk
