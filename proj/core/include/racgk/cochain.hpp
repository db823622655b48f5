#pragma once

#include <string>
#include <vector>

#include "racgk/int_matrix.hpp"

namespace racgk {

/// Bounded cochain complex of free abelian groups C^0 → C^1 → ... → C^top.
///
/// differentials[k] is d^k : C^k → C^{k+1} with rank(C^k) columns and
/// rank(C^{k+1}) rows; there are ranks.size() - 1 of them.
struct CochainComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> differentials;
  // Optional per-degree basis descriptions.
  std::vector<std::vector<std::string>> labels;

  std::size_t degrees() const { return ranks.size(); }
  // Throws std::invalid_argument if matrix shapes do not chain.
  void validate() const;
  // d^{k+1} ∘ d^k == 0 for every k, checked exactly.
  bool squares_to_zero() const;
};

struct DegreeCohomology {
  std::size_t degree = 0;
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors ≥ 2, each dividing the next

  bool vanishes() const { return free_rank == 0 && torsion.empty(); }
};

using CohomologyResult = std::vector<DegreeCohomology>;

// H^k = ker d^k / im d^{k−1}, from the Smith normal forms of the differentials.
CohomologyResult cohomology(const CochainComplex& c);

// (C ⊗ D)^k = ⊕_{i+j=k} C^i ⊗ D^j with d(x ⊗ y) = dx ⊗ y + (−1)^i x ⊗ dy.
// Basis order: by i, then the C-index, then the D-index.
CochainComplex tensor_product(const CochainComplex& c, const CochainComplex& d);

}  // namespace racgk
