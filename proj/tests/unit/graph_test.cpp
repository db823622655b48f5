#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "racgk/error.hpp"
#include "racgk/graph.hpp"

namespace racgk {
namespace {

using testing::clique_count_oracle;

Graph path_stu() { return parse_graph("s t u; s-t t-u"); }

TEST(ParseGraph, EdgeListTranscription) {
  const Graph g = path_stu();
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"s", "t", "u"}));
  EXPECT_EQ(g.edges(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}));
}

TEST(ParseGraph, SingleVertex) {
  const Graph g = parse_graph("s; ");
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(ParseGraph, VertexOrderIsDeclarationOrder) {
  const Graph g = parse_graph("z a m; a-z");
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"z", "a", "m"}));
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(ParseGraph, ErrorsCarryLocation) {
  auto message = [](std::string_view text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("s; s-s").find("loop edge"), std::string::npos);
  EXPECT_NE(message("s t;\ns-t\ns-x").find("line 3"), std::string::npos);
  EXPECT_NE(message("s t;\ns-t\ns-x").find("unknown endpoint"), std::string::npos);
  EXPECT_NE(message("s s;").find("duplicate vertex"), std::string::npos);
  EXPECT_NE(message("s t; s-t t-s").find("duplicate edge"), std::string::npos);
  EXPECT_NE(message("s t").find("malformed"), std::string::npos);
  EXPECT_NE(message("s t; st").find("malformed"), std::string::npos);
  EXPECT_NE(message(R"({"vertices": ["a", "a"], "edges": []})").find("$.vertices[1]"), std::string::npos);
  EXPECT_NE(message(R"({"vertices": ["a", "b"], "edges": [["a", "c"]]})").find("$.edges[0]"), std::string::npos);
  EXPECT_NE(message(R"({"vertices": ["a"], "edges": [["a", "a"]]})").find("loop edge"), std::string::npos);
}

TEST(ParseGraph, JsonMatchesEdgeList) {
  EXPECT_EQ(testing::load_suite_graph("petersen"), parse_graph(testing::read_data("petersen.json")));
}

TEST(ParseGraph, VertexCap) {
  std::string text;
  for (int i = 0; i < 65; ++i) text += "v" + std::to_string(i) + " ";
  text += ";";
  EXPECT_THROW(parse_graph(text), GraphError);
  EXPECT_NO_THROW(Graph::edgeless(64));
}

TEST(EnumerateSpherical, Pentagon) {
  const auto c = enumerate_spherical(Graph::cycle(5));
  EXPECT_EQ(c.size(), 11u);
  EXPECT_EQ(c.size(), clique_count_oracle(Graph::cycle(5)));
}

TEST(EnumerateSpherical, TriangleHasAllSubsets) { EXPECT_EQ(enumerate_spherical(Graph::complete(3)).size(), 8u); }

TEST(EnumerateSpherical, PathListedCanonically) {
  const Graph g = path_stu();
  std::vector<std::vector<std::string>> got;
  for (const auto& c : enumerate_spherical(g)) got.push_back(g.labels_of(c.mask));
  const std::vector<std::vector<std::string>> want = {{}, {"s"}, {"t"}, {"u"}, {"s", "t"}, {"t", "u"}};
  EXPECT_EQ(got, want);
}

TEST(EnumerateSpherical, CanonicalOrderIsSizeThenLexicographic) {
  const Graph g = Graph::complete(4);
  const auto c = enumerate_spherical(g);
  for (std::size_t i = 1; i < c.size(); ++i) {
    const auto a = c[i - 1].members(), b = c[i].members();
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
}

TEST(EnumerateSpherical, RandomGraphsMatchSubsetFilter) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + rng() % 14, 1 + rng() % 4, 5);
    const auto fast = enumerate_spherical(g);
    auto oracle = testing::clique_masks_oracle(g);
    std::sort(oracle.begin(), oracle.end(), canonical_less);
    ASSERT_EQ(fast.size(), oracle.size());
    for (std::size_t i = 0; i < fast.size(); ++i) EXPECT_EQ(fast[i].mask, oracle[i]);
    EXPECT_EQ(enumerate_spherical_brute_force(g), fast);
  }
}

TEST(EnumerateSpherical, ClosedUnderSubsets) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_graph(rng, 2 + rng() % 10, 1, 2);
    std::set<VertexMask> all;
    for (const auto& c : enumerate_spherical(g)) all.insert(c.mask);
    for (VertexMask m : all)
      for (VertexMask s = m;; s = (s - 1) & m) {
        EXPECT_TRUE(all.count(s));
        if (s == 0) break;
      }
  }
}

TEST(EnumerateSpherical, CompleteAndEdgelessCounts) {
  for (std::size_t n = 0; n <= 10; ++n) {
    EXPECT_EQ(enumerate_spherical(Graph::complete(n)).size(), std::size_t{1} << n);
    EXPECT_EQ(enumerate_spherical(Graph::edgeless(n)).size(), n + 1);
  }
}

TEST(EnumerateSpherical, SixtyFourVertices) {
  EXPECT_EQ(enumerate_spherical(Graph::path(64)).size(), 1u + 64u + 63u);
  EXPECT_EQ(enumerate_spherical(Graph::cycle(64)).size(), 1u + 64u + 64u);
}

TEST(PosetChains, OneVertex) {
  const Graph g = Graph::complete(1);
  const auto chains = poset_chains(enumerate_spherical(g), 1);
  ASSERT_EQ(chains.size(), 2u);
  EXPECT_EQ(chains[0].size(), 2u);
  ASSERT_EQ(chains[1].size(), 1u);
  EXPECT_EQ(chains[1][0].elements, (std::vector<VertexMask>{0, 1}));
}

TEST(PosetChains, PathDegreeZero) { EXPECT_EQ(poset_chains(enumerate_spherical(path_stu()), 0)[0].size(), 6u); }

TEST(PosetChains, EdgeTopDegree) {
  const auto chains = poset_chains(enumerate_spherical(Graph::complete(2)), 2);
  ASSERT_EQ(chains[2].size(), 2u);
  EXPECT_EQ(chains[2][0].elements, (std::vector<VertexMask>{0, 1, 3}));
  EXPECT_EQ(chains[2][1].elements, (std::vector<VertexMask>{0, 2, 3}));
}

TEST(PosetChains, NegativeLengthRejected) {
  EXPECT_THROW(poset_chains(enumerate_spherical(path_stu()), -1), std::invalid_argument);
}

TEST(PosetChains, CountsMatchDynamicProgramming) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + rng() % 8, 2, 3);
    const auto chains = poset_chains(enumerate_spherical(g), 5);
    const auto want = testing::chain_counts_oracle(g, 5);
    for (std::size_t k = 0; k <= 5; ++k) {
      EXPECT_EQ(chains[k].size(), want[k]);
      for (const auto& c : chains[k]) {
        EXPECT_EQ(c.length(), k);
        for (std::size_t i = 1; i < c.elements.size(); ++i) {
          EXPECT_NE(c.elements[i - 1], c.elements[i]);
          EXPECT_EQ(c.elements[i - 1] & ~c.elements[i], 0u);
        }
      }
    }
  }
}

TEST(ValidateDecomposition, PathSplitAtMiddle) {
  const Graph g = path_stu();
  const auto d = validate_decomposition(g, g.mask_of({"s", "t"}), g.mask_of({"t", "u"}));
  EXPECT_EQ(d.shared.labels(), (std::vector<std::string>{"t"}));
  EXPECT_EQ(d.first.edge_count(), 1u);
}

TEST(ValidateDecomposition, CrossingEdgeReported) {
  const Graph g = parse_graph("s t u; s-t t-u s-u");
  try {
    validate_decomposition(g, g.mask_of({"s", "t"}), g.mask_of({"u"}));
    FAIL() << "expected a crossing edge";
  } catch (const DecompositionError& e) {
    ASSERT_TRUE(e.crossing_edge());
    EXPECT_EQ(*e.crossing_edge(), (std::pair<std::size_t, std::size_t>{0, 2}));
  }
}

TEST(ValidateDecomposition, TrivialSplit) {
  const Graph g = Graph::cycle(5);
  const auto d = validate_decomposition(g, g.all_vertices(), 0);
  EXPECT_EQ(d.first, g);
  EXPECT_EQ(d.second.vertex_count(), 0u);
  EXPECT_EQ(d.shared.vertex_count(), 0u);
}

TEST(ValidateDecomposition, PartsMustCoverVertices) {
  const Graph g = path_stu();
  EXPECT_THROW(validate_decomposition(g, g.mask_of({"s"}), g.mask_of({"u"})), DecompositionError);
}

TEST(ValidateDecomposition, CliqueInclusionExclusion) {
  std::mt19937_64 rng(5);
  int valid = 0;
  for (int trial = 0; trial < 300 && valid < 40; ++trial) {
    const Graph g = testing::random_graph(rng, 2 + rng() % 9, 1, 3);
    const VertexMask all = g.all_vertices();
    const VertexMask p1 = rng() & all;
    const VertexMask p2 = (all & ~p1) | (rng() & p1);
    try {
      const auto d = validate_decomposition(g, p1, p2);
      ++valid;
      EXPECT_EQ(clique_count_oracle(g) + clique_count_oracle(d.shared),
                clique_count_oracle(d.first) + clique_count_oracle(d.second));
    } catch (const DecompositionError&) {
    }
  }
  EXPECT_GE(valid, 10);
}

TEST(BitPacking, DepositExtractRoundTrip) {
  const VertexMask ambient = 0b1011'0100;
  for (std::uint64_t i = 0; i < 16; ++i) {
    const VertexMask sub = deposit_bits(i, ambient);
    EXPECT_EQ(sub & ~ambient, 0u);
    EXPECT_EQ(extract_bits(sub, ambient), i);
  }
}

}  // namespace
}  // namespace racgk
