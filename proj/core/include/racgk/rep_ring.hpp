#pragma once

#include <map>
#include <span>
#include <vector>

#include "racgk/graph.hpp"
#include "racgk/int_matrix.hpp"

namespace racgk {

/// Element of the representation ring R(W_J) of W_J ≅ (C₂)^J.
///
/// R(W_J) is the integral group ring of the character group; the monomial m_K
/// (K ⊆ J) is the product of the sign characters s* for s ∈ K, and m_∅ is the
/// trivial representation. Keys are vertex masks in the global vertex order.
class RepRingElement {
 public:
  using Terms = std::map<VertexMask, BigInt, CanonicalOrder>;

  RepRingElement() = default;
  explicit RepRingElement(VertexMask ambient) : ambient_(ambient) {}

  static RepRingElement monomial(VertexMask ambient, VertexMask support, const BigInt& coeff = 1);
  static RepRingElement constant(VertexMask ambient, const BigInt& value);

  VertexMask ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  BigInt coefficient(VertexMask support) const;
  bool is_zero() const { return terms_.empty(); }

  // Adds coeff·m_support; throws AlgebraError when support ⊄ ambient.
  void add_term(VertexMask support, const BigInt& coeff);

  RepRingElement& operator+=(const RepRingElement& other);
  RepRingElement& operator-=(const RepRingElement& other);
  RepRingElement& operator*=(const BigInt& scalar);

  friend RepRingElement operator+(RepRingElement a, const RepRingElement& b) { return a += b; }
  friend RepRingElement operator-(RepRingElement a, const RepRingElement& b) { return a -= b; }
  friend RepRingElement operator*(RepRingElement a, const BigInt& s) { return a *= s; }
  friend bool operator==(const RepRingElement&, const RepRingElement&) = default;

 private:
  void require_same_ambient(const RepRingElement& other) const;

  VertexMask ambient_ = 0;
  Terms terms_;
};

// Group-ring product: m_K · m_L = m_{K △ L}.
RepRingElement rep_multiply(const RepRingElement& a, const RepRingElement& b);
inline RepRingElement operator*(const RepRingElement& a, const RepRingElement& b) { return rep_multiply(a, b); }

// m_K ↦ m_{K ∩ target}; target must be a subset of the ambient.
RepRingElement restriction(const RepRingElement& a, VertexMask target);

// Columns indexed by subsets of `source`, rows by subsets of `target`, both in
// deposit_bits order. Exactly one 1 per column.
IntMatrix restriction_matrix(VertexMask source, VertexMask target);

// Largest |J| accepted by the character transforms.
inline constexpr std::size_t kMaxCharacterRank = 24;

// Values of the virtual character at every g ∈ (C₂)^J; entry i is the value at
// deposit_bits(i, J).
std::vector<BigInt> character_evaluation(const RepRingElement& a);

// Inverse of character_evaluation. Throws AlgebraError when `values` is not the
// character of a virtual representation (a coefficient fails to be integral).
RepRingElement character_interpolation(VertexMask ambient, std::span<const BigInt> values);

}  // namespace racgk
