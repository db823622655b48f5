#pragma once

#include <map>

#include "racgk/ktheory.hpp"

namespace racgk {

/// Truncation of K⁰(BW) = Z ⊕ ∏_{J ≠ ∅} Z₂ at 2-adic precision p.
///
/// The constant term stays an exact integer; every coefficient of a non-empty
/// bar monomial m̄_J is a residue in [0, 2^p).
class CompletedElement {
 public:
  using Terms = std::map<VertexMask, BigInt, CanonicalOrder>;

  CompletedElement(GraphPtr graph, unsigned precision);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  unsigned precision() const { return precision_; }
  const BigInt& constant() const { return constant_; }
  const Terms& terms() const { return terms_; }
  BigInt coefficient(VertexMask clique) const;

  void set_constant(BigInt c) { constant_ = std::move(c); }
  // Adds to the residue of a non-empty clique; the empty clique goes to the constant.
  void add_term(VertexMask clique, const BigInt& coeff);

  friend bool operator==(const CompletedElement& a, const CompletedElement& b);

 private:
  GraphPtr graph_;
  unsigned precision_;
  BigInt modulus_;
  BigInt constant_ = 0;
  Terms terms_;
};

CompletedElement complete(const KRingElement& a, unsigned precision);
CompletedElement completed_multiply(const CompletedElement& a, const CompletedElement& b);

}  // namespace racgk
