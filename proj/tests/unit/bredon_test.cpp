#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "racgk/bredon.hpp"
#include "racgk/error.hpp"

namespace racgk {
namespace {

constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 1'000'000'007ULL};

// rank C^k = Σ over chains of 2^{|minimum|}, counted by recursion on the clique list.
std::vector<std::size_t> cochain_ranks_oracle(const Graph& g) {
  const auto cliques = testing::clique_masks_oracle(g);
  std::size_t top = 0;
  for (VertexMask c : cliques) top = std::max(top, popcount(c));
  std::vector<std::size_t> ranks(top + 1, 0);
  auto extend = [&](auto&& self, VertexMask last, std::size_t length, std::size_t weight) -> void {
    ranks[length] += weight;
    for (VertexMask c : cliques)
      if (c != last && (last & ~c) == 0) self(self, c, length + 1, weight);
  };
  for (VertexMask c : cliques) extend(extend, c, 0, std::size_t{1} << popcount(c));
  return ranks;
}

void expect_cohomology_matches_modular_ranks(const CochainComplex& c, const CohomologyResult& h) {
  ASSERT_EQ(h.size(), c.degrees());
  for (std::size_t k = 0; k < c.degrees(); ++k) {
    auto rank_q = [&](std::size_t i, std::uint64_t p) {
      return i < c.differentials.size() ? testing::rank_mod_p(c.differentials[i], p) : 0;
    };
    const std::size_t in = k ? rank_q(k - 1, kPrimes[4]) : 0;
    EXPECT_EQ(h[k].free_rank, c.ranks[k] - rank_q(k, kPrimes[4]) - in) << "degree " << k;
    // No p-torsion in H^{k+1} exactly when d^k keeps its rank mod p.
    if (h.size() > k + 1 && h[k + 1].torsion.empty()) {
      for (std::uint64_t p : kPrimes) EXPECT_EQ(rank_q(k, p), rank_q(k, kPrimes[4])) << "p = " << p;
    }
  }
}

TEST(BredonComplex, SingleVertex) {
  const auto b = build_bredon_complex(Graph::complete(1));
  EXPECT_EQ(b.complex.ranks, (std::vector<std::size_t>{3, 1}));
  ASSERT_EQ(b.complex.differentials.size(), 1u);
  // (dφ)(∅ ⊂ {s}) = res φ({s}) − φ(∅), with C^0 basis (∅:1, {s}:1, {s}:s*).
  EXPECT_EQ(b.complex.differentials[0], (IntMatrix{{-1, 1, 1}}));
  EXPECT_TRUE(b.complex.squares_to_zero());
}

TEST(BredonComplex, PathDegreeZeroRank) {
  // 1 + 2 + 2 + 2 + 4 + 4 over ∅, the three vertices and the two edges.
  EXPECT_EQ(build_bredon_complex(parse_graph("s t u; s-t t-u")).complex.ranks[0], 15u);
}

TEST(BredonComplex, InsufficientChains) {
  const Graph g = Graph::complete(2);
  const auto cliques = enumerate_spherical(g);
  EXPECT_THROW(build_bredon_complex(g, cliques, poset_chains(cliques, 1)), AlgebraError);
  EXPECT_NO_THROW(build_bredon_complex(g, cliques, poset_chains(cliques, 4)));
}

TEST(BredonComplex, RanksMatchChainOracle) {
  for (const auto& name : testing::suite_names()) {
    const Graph g = testing::load_suite_graph(name);
    EXPECT_EQ(build_bredon_complex(g).complex.ranks, cochain_ranks_oracle(g)) << name;
  }
}

TEST(BredonComplex, LabelsDescribeBasis) {
  const auto b = build_bredon_complex(parse_graph("a b; a-b"));
  ASSERT_EQ(b.complex.labels.size(), 3u);
  EXPECT_EQ(b.complex.labels[0].size(), b.complex.ranks[0]);
  EXPECT_EQ(b.complex.labels[2].front(), "{} < {a} < {a,b} : 1");
}

TEST(Cohomology, Examples) {
  const auto k1 = cohomology(build_bredon_complex(Graph::complete(1)).complex);
  ASSERT_EQ(k1.size(), 2u);
  EXPECT_EQ(k1[0].free_rank, 2u);
  EXPECT_TRUE(k1[1].vanishes());

  const auto c5 = cohomology(build_bredon_complex(Graph::cycle(5)).complex);
  EXPECT_EQ(c5[0].free_rank, 11u);
  for (const auto& d : c5) EXPECT_TRUE(d.torsion.empty());
  for (std::size_t k = 1; k < c5.size(); ++k) EXPECT_TRUE(c5[k].vanishes());

  CochainComplex zero{{3, 2}, {IntMatrix(2, 3)}, {}};
  const auto z = cohomology(zero);
  EXPECT_EQ(z[0].free_rank, 3u);
  EXPECT_EQ(z[1].free_rank, 2u);
}

TEST(Cohomology, Torsion) {
  // Z --2--> Z: H^0 = 0, H^1 = Z/2.
  const auto h = cohomology(CochainComplex{{1, 1}, {IntMatrix{{2}}}, {}});
  EXPECT_TRUE(h[0].vanishes());
  EXPECT_EQ(h[1].free_rank, 0u);
  EXPECT_EQ(h[1].torsion, (std::vector<BigInt>{2}));
}

TEST(Cohomology, ShapeValidation) {
  CochainComplex bad{{2, 2}, {IntMatrix(3, 2)}, {}};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Cohomology, SuiteVanishesAboveZero) {
  for (const auto& name : testing::suite_names()) {
    const Graph g = testing::load_suite_graph(name);
    const auto b = build_bredon_complex(g);
    EXPECT_TRUE(b.complex.squares_to_zero()) << name;
    const auto h = cohomology(b.complex);
    EXPECT_EQ(h[0].free_rank, testing::clique_count_oracle(g)) << name;
    for (std::size_t k = 1; k < h.size(); ++k) EXPECT_TRUE(h[k].vanishes()) << name << " degree " << k;
    expect_cohomology_matches_modular_ranks(b.complex, h);
  }
}

TEST(Cohomology, RandomGraphs) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 12; ++trial) {
    const Graph g = testing::random_graph(rng, 2 + rng() % 6, 1, 2);
    const auto b = build_bredon_complex(g);
    EXPECT_TRUE(b.complex.squares_to_zero());
    const auto h = cohomology(b.complex);
    EXPECT_EQ(h[0].free_rank, testing::clique_count_oracle(g));
    for (std::size_t k = 1; k < h.size(); ++k) EXPECT_TRUE(h[k].vanishes());
    // Euler characteristic of the complex equals d.
    long chi = 0;
    for (std::size_t k = 0; k < b.complex.ranks.size(); ++k)
      chi += (k % 2 ? -1 : 1) * static_cast<long>(b.complex.ranks[k]);
    EXPECT_EQ(chi, static_cast<long>(testing::clique_count_oracle(g)));
  }
}

TEST(CubeOrbits, CountsCliquesBySize) {
  EXPECT_EQ(cube_orbit_counts(enumerate_spherical(Graph::cycle(5))), (std::vector<std::size_t>{1, 5, 5}));
  EXPECT_EQ(cube_orbit_counts(enumerate_spherical(Graph::complete(3))), (std::vector<std::size_t>{1, 3, 3, 1}));
}

TEST(InverseLimit, Examples) {
  EXPECT_EQ(inverse_limit(Graph::complete(1)).rank(), 2u);
  EXPECT_EQ(inverse_limit(Graph::edgeless(2)).rank(), 3u);
  const auto k1 = inverse_limit(Graph::complete(1));
  const IntMatrix d0{{-1, 1, 1}};
  EXPECT_TRUE((d0 * k1.basis_matrix()).is_zero());
}

TEST(InverseLimit, MatchesCohomologyAndCliqueBasis) {
  for (const auto& name : testing::suite_names()) {
    const Graph g = testing::load_suite_graph(name);
    const auto limit = inverse_limit(g);
    const auto b = build_bredon_complex(g);
    EXPECT_EQ(limit.rank(), cohomology(b.complex)[0].free_rank) << name;
    EXPECT_TRUE((b.complex.differentials[0] * limit.basis_matrix()).is_zero()) << name;
    const auto map = clique_basis_to_limit(g, limit);
    EXPECT_TRUE(map.in_lattice) << name;
    EXPECT_TRUE(map.onto(limit.rank())) << name;
    EXPECT_EQ(map.matrix.cols(), limit.rank()) << name;
  }
}

TEST(InverseLimit, FamiliesAreCompatible) {
  const auto g = std::make_shared<const Graph>(parse_graph("s t u; s-t t-u"));
  const auto limit = inverse_limit(*g);
  const auto a = KRingElement::monomial(g, Basis::kStar, 0b011, 3) + KRingElement::constant(g, Basis::kStar, -2);
  const auto family = limit_family(limit, a);
  const auto d0 = build_bredon_complex(*g).complex.differentials[0];
  for (const auto& v : d0 * std::span<const BigInt>(family)) EXPECT_EQ(v, 0);
  EXPECT_TRUE(lattice_membership(limit.lattice, family).member);
}

TEST(Rho, Examples) {
  const auto k1 = rho_surjectivity(Graph::complete(1));
  EXPECT_TRUE(k1.surjective);
  EXPECT_EQ(k1.kernel_rank, 0u);

  const auto p3 = rho_surjectivity(parse_graph("s t u; s-t t-u"));
  EXPECT_EQ(p3.source_rank, 8u);
  EXPECT_EQ(p3.limit_rank, 6u);
  EXPECT_EQ(p3.image.rank(), 6u);
  EXPECT_TRUE(p3.surjective);

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto r = rho_surjectivity(Graph::complete(n));
    EXPECT_TRUE(r.surjective);
    EXPECT_EQ(r.kernel_rank, 0u);
  }
  EXPECT_THROW(rho_surjectivity(Graph::edgeless(kMaxRhoVertices + 1)), AlgebraError);
}

TEST(Kunneth, IntervalComplex) {
  const auto e = interval_complex();
  EXPECT_EQ(e.ranks, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(e.differentials[0], (IntMatrix{{1, 1}}));
  const auto r = interval_tensor_kunneth(1);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.cohomology[0].free_rank, 1u);
  // The kernel is spanned by tr − λ.
  const auto kernel = hermite_normal_form(e.differentials[0]).kernel_basis();
  ASSERT_EQ(kernel.cols(), 1u);
  EXPECT_EQ(kernel(0, 0), -kernel(1, 0));
  EXPECT_EQ(abs(kernel(0, 0)), 1);
}

TEST(Kunneth, RanksAndVanishing) {
  EXPECT_EQ(interval_tensor_kunneth(2).complex.ranks, (std::vector<std::size_t>{4, 4, 1}));
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto r = interval_tensor_kunneth(n);
    EXPECT_TRUE(r.passed) << n;
    EXPECT_TRUE(r.rank_bookkeeping) << n;
    EXPECT_TRUE(r.complex.squares_to_zero());
    std::size_t binom = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(r.complex.ranks[k], binom << (n - k));
      binom = binom * (n - k) / (k + 1);
    }
    expect_cohomology_matches_modular_ranks(r.complex, r.cohomology);
  }
  EXPECT_THROW(interval_tensor_kunneth(kDefaultKunnethCap + 1), AlgebraError);
  EXPECT_THROW(interval_tensor_kunneth(0), AlgebraError);
}

TEST(TensorProduct, RankBookkeeping) {
  const CochainComplex a{{1, 2}, {IntMatrix{{1}, {0}}}, {}};
  const CochainComplex b{{2, 3, 1}, {IntMatrix(3, 2), IntMatrix(1, 3)}, {}};
  const auto t = tensor_product(a, b);
  EXPECT_EQ(t.ranks, (std::vector<std::size_t>{2, 3 + 4, 1 + 6, 2}));
  EXPECT_TRUE(t.squares_to_zero());
}

}  // namespace
}  // namespace racgk
