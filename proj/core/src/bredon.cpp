#include "racgk/bredon.hpp"

#include <algorithm>
#include <map>

#include "racgk/rep_ring.hpp"
#include "racgk/smith.hpp"

namespace racgk {

namespace {

std::size_t max_clique_size(const std::vector<SphericalSubset>& cliques) {
  std::size_t m = 0;
  for (const auto& c : cliques) m = std::max(m, c.size());
  return m;
}

std::string chain_label(const Graph& g, const PosetChain& chain, VertexMask monomial) {
  std::string s;
  for (std::size_t i = 0; i < chain.elements.size(); ++i) {
    if (i) s += " < ";
    s += '{';
    bool first = true;
    for (const auto& l : g.labels_of(chain.elements[i])) {
      if (!first) s += ',';
      s += l;
      first = false;
    }
    s += '}';
  }
  s += " : ";
  if (monomial == 0) return s + "1";
  for (const auto& l : g.labels_of(monomial)) s += l + "*";
  return s;
}

}  // namespace

BredonComplex build_bredon_complex(const Graph& g, const std::vector<SphericalSubset>& cliques,
                                   const std::vector<std::vector<PosetChain>>& chains) {
  const std::size_t top = max_clique_size(cliques);
  if (chains.size() < top + 1)
    throw AlgebraError("build_bredon_complex: chains cover " + std::to_string(chains.size()) +
                       " degrees" +
                       " but the order complex has dimension " + std::to_string(top));
  for (const auto& c : cliques)
    if (c.size() > kMaxCharacterRank) throw AlgebraError("build_bredon_complex: clique too large");

  BredonComplex b;
  b.cliques = cliques;
  b.chains.assign(chains.begin(), chains.begin() + static_cast<std::ptrdiff_t>(top + 1));
  auto& cx = b.complex;
  cx.ranks.assign(top + 1, 0);
  b.block_offset.resize(top + 1);
  cx.labels.resize(top + 1);
  std::vector<std::map<std::vector<VertexMask>, std::size_t>> index(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    for (std::size_t c = 0; c < b.chains[k].size(); ++c) {
      const auto& chain = b.chains[k][c];
      index[k].emplace(chain.elements, c);
      b.block_offset[k].push_back(cx.ranks[k]);
      const VertexMask j0 = chain.minimum();
      const std::uint64_t block = std::uint64_t{1} << popcount(j0);
      for (std::uint64_t i = 0; i < block; ++i) cx.labels[k].push_back(chain_label(g, chain, deposit_bits(i, j0)));
      cx.ranks[k] += block;
    }
  }

  for (std::size_t k = 0; k < top; ++k) {
    IntMatrix d(cx.ranks[k + 1], cx.ranks[k]);
    for (std::size_t t = 0; t < b.chains[k + 1].size(); ++t) {
      const auto& chain = b.chains[k + 1][t];
      const VertexMask j0 = chain.elements[0];
      const std::size_t row0 = b.block_offset[k + 1][t];
      for (std::size_t i = 0; i < chain.elements.size(); ++i) {
        std::vector<VertexMask> face = chain.elements;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        const std::size_t f = index[k].at(face);
        const std::size_t col0 = b.block_offset[k][f];
        if (i == 0) {
          // Restriction R(W_{J₁}) → R(W_{J₀}).
          const VertexMask j1 = face[0];
          const std::uint64_t block = std::uint64_t{1} << popcount(j1);
          for (std::uint64_t m = 0; m < block; ++m) {
            const VertexMask mono = deposit_bits(m, j1);
            d(row0 + extract_bits(mono & j0, j0), col0 + m) += 1;
          }
        } else {
          const long sign = i % 2 ? -1 : 1;
          const std::uint64_t block = std::uint64_t{1} << popcount(j0);
          for (std::uint64_t m = 0; m < block; ++m) d(row0 + m, col0 + m) += sign;
        }
      }
    }
    cx.differentials.push_back(std::move(d));
  }
  cx.validate();
  return b;
}

BredonComplex build_bredon_complex(const Graph& g) {
  const auto cliques = enumerate_spherical(g);
  return build_bredon_complex(g, cliques, poset_chains(cliques, static_cast<int>(max_clique_size(cliques))));
}

std::vector<std::size_t> cube_orbit_counts(const std::vector<SphericalSubset>& cliques) {
  std::vector<std::size_t> counts(max_clique_size(cliques) + 1, 0);
  for (const auto& c : cliques) ++counts[c.size()];
  return counts;
}

// ---------------------------------------------------------------------------

LimitLattice inverse_limit(const Graph& g) {
  const BredonComplex b = build_bredon_complex(g);
  LimitLattice out;
  out.cliques = b.cliques;
  out.block_offset = b.block_offset[0];
  out.ambient_rank = b.complex.ranks[0];
  IntMatrix kernel = b.complex.differentials.empty() ? IntMatrix::identity(out.ambient_rank)
                                                     : hermite_normal_form(b.complex.differentials[0]).kernel_basis();
  out.lattice = hermite_normal_form(kernel);
  return out;
}

std::vector<BigInt> limit_family(const LimitLattice& limit, const KRingElement& a) {
  std::vector<BigInt> v(limit.ambient_rank);
  for (std::size_t c = 0; c < limit.cliques.size(); ++c) {
    const VertexMask j = limit.cliques[c].mask;
    const RepRingElement r = restrict_to_clique(a, j);
    for (const auto& [k, coeff] : r.terms()) v[limit.block_offset[c] + extract_bits(k, j)] = coeff;
  }
  return v;
}

bool LatticeMap::onto(std::size_t target_rank) const {
  if (!in_lattice || rank() != target_rank) return false;
  return std::all_of(invariant_factors.begin(), invariant_factors.end(), [](const BigInt& f) { return f == 1; });
}

namespace {

LatticeMap map_into_limit(const LimitLattice& limit, const std::vector<std::vector<BigInt>>& families) {
  LatticeMap m;
  std::vector<std::vector<BigInt>> coords;
  for (const auto& f : families) {
    auto mem = lattice_membership(limit.lattice, f);
    if (!mem.member) {
      m.in_lattice = false;
      coords.emplace_back(limit.rank(), BigInt(0));
    } else {
      coords.push_back(std::move(mem.coordinates));
    }
  }
  m.matrix = IntMatrix::from_columns(limit.rank(), coords);
  m.invariant_factors = smith_normal_form(m.matrix, SmithTransforms::kNone).diagonal;
  return m;
}

}  // namespace

LatticeMap clique_basis_to_limit(const Graph& g, const LimitLattice& limit) {
  auto graph = std::make_shared<const Graph>(g);
  std::vector<std::vector<BigInt>> families;
  for (const auto& c : limit.cliques)
    families.push_back(limit_family(limit, KRingElement::monomial(graph, Basis::kStar, c.mask)));
  return map_into_limit(limit, families);
}

RhoReport rho_surjectivity(const Graph& g, const LimitLattice& limit) {
  if (g.vertex_count() > kMaxRhoVertices)
    throw AlgebraError("rho_surjectivity: R(G) has rank 2^" + std::to_string(g.vertex_count()) +
                       ", limit is 2^" + std::to_string(kMaxRhoVertices));
  RhoReport r;
  r.source_rank = std::size_t{1} << g.vertex_count();
  r.limit_rank = limit.rank();
  std::vector<std::vector<BigInt>> families;
  families.reserve(r.source_rank);
  for (std::uint64_t m = 0; m < r.source_rank; ++m) {
    const VertexMask k = m;  // every subset of V is a monomial of R(G)
    std::vector<BigInt> v(limit.ambient_rank);
    for (std::size_t c = 0; c < limit.cliques.size(); ++c) {
      const VertexMask j = limit.cliques[c].mask;
      v[limit.block_offset[c] + extract_bits(k & j, j)] = 1;
    }
    families.push_back(std::move(v));
  }
  r.image = map_into_limit(limit, families);
  r.kernel_rank = r.source_rank - r.image.rank();
  r.surjective = r.image.onto(r.limit_rank);
  return r;
}

RhoReport rho_surjectivity(const Graph& g) { return rho_surjectivity(g, inverse_limit(g)); }

// ---------------------------------------------------------------------------

CochainComplex interval_complex() {
  CochainComplex c;
  c.ranks = {2, 1};
  c.differentials.push_back(IntMatrix{{1, 1}});
  c.labels = {{"tr", "lambda"}, {"1"}};
  return c;
}

namespace {
std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

KunnethReport interval_tensor_kunneth(std::size_t n, std::size_t cap) {
  if (n == 0) throw AlgebraError("interval_tensor_kunneth: n must be at least 1");
  if (n > cap)
    throw AlgebraError("interval_tensor_kunneth: n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  KunnethReport r;
  r.n = n;
  const CochainComplex e = interval_complex();
  r.complex = e;
  for (std::size_t i = 1; i < n; ++i) r.complex = tensor_product(r.complex, e);
  r.complex.labels.clear();

  r.rank_bookkeeping = r.complex.ranks.size() == n + 1;
  for (std::size_t k = 0; r.rank_bookkeeping && k <= n; ++k)
    r.rank_bookkeeping = r.complex.ranks[k] == binomial(n, k) * (std::size_t{1} << (n - k));

  r.cohomology = cohomology(r.complex);
  bool ok = r.complex.squares_to_zero() && !r.cohomology.empty() && r.cohomology[0].free_rank == 1 &&
            r.cohomology[0].torsion.empty();
  for (std::size_t m = 1; m < r.cohomology.size(); ++m) ok = ok && r.cohomology[m].vanishes();
  r.passed = ok;
  return r;
}

}  // namespace racgk
