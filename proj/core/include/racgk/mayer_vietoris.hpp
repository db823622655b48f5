#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "racgk/graph.hpp"
#include "racgk/ktheory.hpp"

namespace racgk {

// Bar monomials supported outside `part` go to zero; the rest are re-indexed into
// the full subgraph on `part`.
KRingElement project_to_part(const KRingElement& a, VertexMask part, const GraphPtr& subgraph);
// Monomial inclusion of the subgraph ring into the ring of the whole graph.
KRingElement include_from_part(const KRingElement& a, VertexMask part, const GraphPtr& whole);

struct SplitCheck {
  std::string side;  // "first" or "second"
  bool projection_multiplicative = true;
  bool section_multiplicative = true;
  bool projection_unital = true;
  bool splits = true;  // projection ∘ section = id
  std::size_t samples = 0;
  std::string first_failure;

  bool passed() const { return projection_multiplicative && section_multiplicative && projection_unital && splits; }
};

struct MayerVietorisReport {
  std::size_t rank_whole = 0;
  std::size_t rank_first = 0;
  std::size_t rank_second = 0;
  std::size_t rank_shared = 0;
  std::vector<SplitCheck> splits;

  bool rank_identity() const { return rank_whole + rank_shared == rank_first + rank_second; }
  bool passed() const;
};

// Throws DecompositionError for an invalid split.
MayerVietorisReport mayer_vietoris_check(const Graph& g, VertexMask part1, VertexMask part2,
                                         std::size_t samples, std::uint64_t seed);

}  // namespace racgk
