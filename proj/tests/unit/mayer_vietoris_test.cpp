#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "racgk/mayer_vietoris.hpp"
#include "racgk/sampling.hpp"

namespace racgk {
namespace {

TEST(MayerVietoris, PathSplitAtMiddle) {
  const Graph g = parse_graph("s t u; s-t t-u");
  const auto r = mayer_vietoris_check(g, g.mask_of({"s", "t"}), g.mask_of({"t", "u"}), 50, 1);
  EXPECT_EQ(r.rank_whole, 6u);
  EXPECT_EQ(r.rank_first, 4u);
  EXPECT_EQ(r.rank_second, 4u);
  EXPECT_EQ(r.rank_shared, 2u);
  EXPECT_TRUE(r.passed());
}

TEST(MayerVietoris, DisjointUnion) {
  const Graph g = parse_graph("a b c d; a-b c-d");
  const auto r = mayer_vietoris_check(g, g.mask_of({"a", "b"}), g.mask_of({"c", "d"}), 50, 2);
  EXPECT_EQ(r.rank_shared, 1u);
  EXPECT_EQ(r.rank_whole, r.rank_first + r.rank_second - 1);
  EXPECT_TRUE(r.passed());
}

TEST(MayerVietoris, TrivialSplit) {
  const Graph g = Graph::cycle(5);
  const auto r = mayer_vietoris_check(g, g.all_vertices(), 0, 30, 3);
  EXPECT_EQ(r.rank_first, r.rank_whole);
  EXPECT_EQ(r.rank_second, 1u);
  EXPECT_TRUE(r.passed());
}

TEST(MayerVietoris, InvalidDecompositionPropagates) {
  const Graph g = Graph::complete(3);
  EXPECT_THROW(mayer_vietoris_check(g, 0b011, 0b100, 10, 1), DecompositionError);
}

TEST(ProjectToPart, SendsMissingStarGeneratorsToOne) {
  // Killing s̄ for s outside the part is s* ↦ 1, so m*_K ↦ m*_{K ∩ part}.
  std::mt19937_64 grng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = std::make_shared<const Graph>(testing::random_graph(grng, 2 + grng() % 7, 1, 2));
    const VertexMask part = grng() & g->all_vertices();
    const auto sub = std::make_shared<const Graph>(g->induced(part));
    std::vector<VertexMask> cliques;
    for (const auto& c : enumerate_spherical(*g)) cliques.push_back(c.mask);
    SampleRng rng(trial);
    const auto a = random_element(g, Basis::kStar, cliques, rng);
    KRingElement expected(sub, Basis::kStar);
    for (const auto& [k, c] : a.terms()) expected.add_term(extract_bits(k & part, part), c);
    EXPECT_EQ(convert_basis(project_to_part(a, part, sub), Basis::kStar), expected);
  }
}

TEST(MayerVietoris, RandomDecompositions) {
  std::mt19937_64 rng(23);
  int valid = 0;
  for (int trial = 0; trial < 400 && valid < 15; ++trial) {
    const Graph g = testing::random_graph(rng, 3 + rng() % 7, 1, 3);
    const VertexMask all = g.all_vertices();
    const VertexMask p1 = rng() & all;
    const VertexMask p2 = (all & ~p1) | (rng() & p1);
    try {
      const auto r = mayer_vietoris_check(g, p1, p2, 25, trial);
      ++valid;
      EXPECT_TRUE(r.rank_identity());
      for (const auto& s : r.splits) EXPECT_TRUE(s.passed()) << s.first_failure;
    } catch (const DecompositionError&) {
    }
  }
  EXPECT_EQ(valid, 15);
}

}  // namespace
}  // namespace racgk
