#pragma once

#include <vector>

#include "racgk/cochain.hpp"
#include "racgk/graph.hpp"
#include "racgk/hermite.hpp"
#include "racgk/ktheory.hpp"

namespace racgk {

/// Cochain complex of the spherical-subset poset with coefficients J ↦ R(W_J).
///
/// C^k = ⊕ over chains J₀ ⊂ … ⊂ J_k of R(W_{J₀}); basis pairs (chain, K ⊆ J₀)
/// with chains in poset_chains order and K in deposit_bits order. The
/// differential is (dφ)(J₀ ⊂ … ⊂ J_{k+1}) = res(φ(∂₀)) + Σ_{i≥1} (−1)^i φ(∂_i).
struct BredonComplex {
  std::vector<SphericalSubset> cliques;
  std::vector<std::vector<PosetChain>> chains;
  // block_offset[k][c]: first basis index of chain c inside C^k.
  std::vector<std::vector<std::size_t>> block_offset;
  CochainComplex complex;
};

// `chains` must reach the dimension of the order complex (the size of a largest
// clique); throws AlgebraError otherwise. Longer chain lists are accepted.
BredonComplex build_bredon_complex(const Graph& g, const std::vector<SphericalSubset>& cliques,
                                   const std::vector<std::vector<PosetChain>>& chains);
BredonComplex build_bredon_complex(const Graph& g);

// Number of W-orbits of k-cubes in the Davis complex, i.e. cliques of size k.
std::vector<std::size_t> cube_orbit_counts(const std::vector<SphericalSubset>& cliques);

/// lim_J R(W_J) as the kernel of d^0 inside C^0 = ∏_J R(W_J).
struct LimitLattice {
  std::vector<SphericalSubset> cliques;
  std::vector<std::size_t> block_offset;  // C^0 offset of each clique's R(W_J) block
  std::size_t ambient_rank = 0;           // rank of C^0
  HermiteForm lattice;                    // HNF basis of the kernel

  const IntMatrix& basis_matrix() const { return lattice.basis; }
  std::size_t rank() const { return lattice.rank(); }
};

LimitLattice inverse_limit(const Graph& g);

// C^0 coordinates of the family (restrict_to_clique(a, J))_J.
std::vector<BigInt> limit_family(const LimitLattice& limit, const KRingElement& a);

struct LatticeMap {
  IntMatrix matrix;                        // columns: images in LimitLattice coordinates
  std::vector<BigInt> invariant_factors;   // nonzero SNF diagonal
  std::size_t rank() const { return invariant_factors.size(); }
  // rank == target rank and every invariant factor is 1.
  bool onto(std::size_t target_rank) const;
  bool in_lattice = true;                  // every image was a member of the lattice
};

// Images of the clique-basis monomials m*_K of K⁰_W(E̲W) in the limit.
LatticeMap clique_basis_to_limit(const Graph& g, const LimitLattice& limit);

struct RhoReport {
  std::size_t source_rank = 0;  // 2^|V|
  std::size_t limit_rank = 0;
  LatticeMap image;
  std::size_t kernel_rank = 0;
  bool surjective = false;
};

// Largest vertex count accepted by rho_surjectivity (R(G) has rank 2^|V|).
inline constexpr std::size_t kMaxRhoVertices = 20;

// ρ : R(⊕_S C₂) → lim_J R(W_J); each monomial m_K maps to (m_{K∩J})_J.
RhoReport rho_surjectivity(const Graph& g, const LimitLattice& limit);
RhoReport rho_surjectivity(const Graph& g);

// Relative complex of (I, ∂I) for C₂: Z² → Z, d = (1 1), basis (tr, λ) then (1).
CochainComplex interval_complex();

struct KunnethReport {
  std::size_t n = 0;
  CochainComplex complex;
  CohomologyResult cohomology;
  bool rank_bookkeeping = false;  // rank C^k = C(n,k)·2^{n−k}
  bool passed = false;            // H^0 ≅ Z, H^m = 0 for 0 < m ≤ n, d∘d = 0
};

inline constexpr std::size_t kDefaultKunnethCap = 6;

KunnethReport interval_tensor_kunneth(std::size_t n, std::size_t cap = kDefaultKunnethCap);

}  // namespace racgk
