#include <gtest/gtest.h>

#include "oracles.hpp"
#include "racgk/completion.hpp"
#include "racgk/error.hpp"
#include "racgk/sampling.hpp"

namespace racgk {
namespace {

const GraphPtr kEdge = std::make_shared<const Graph>(parse_graph("s t; s-t"));
constexpr VertexMask s = 1, t = 2;

KRingElement bar(VertexMask m, long c = 1) { return KRingElement::monomial(kEdge, Basis::kBar, m, c); }

TEST(Complete, Examples) {
  const auto a = complete(bar(s), 4);
  EXPECT_EQ(a.constant(), 0);
  EXPECT_EQ(a.coefficient(s), 1);

  const auto b = complete(bar(s, -2), 2);
  EXPECT_EQ(b.coefficient(s), 2);

  const auto c = complete(KRingElement::constant(kEdge, Basis::kBar, 5), 3);
  EXPECT_EQ(c.constant(), 5);
  EXPECT_TRUE(c.terms().empty());
}

TEST(Complete, StarInputIsConverted) {
  // s* = 1 + s̄.
  const auto a = complete(KRingElement::monomial(kEdge, Basis::kStar, s), 8);
  EXPECT_EQ(a.constant(), 1);
  EXPECT_EQ(a.coefficient(s), 1);
}

TEST(Complete, ConstantStaysExact) {
  const auto a = complete(KRingElement::constant(kEdge, Basis::kBar, -1000), 2);
  EXPECT_EQ(a.constant(), -1000);
}

TEST(CompletedMultiply, Examples) {
  const auto x = complete(KRingElement::constant(kEdge, Basis::kBar, 1) + bar(s), 8);
  const auto sq = completed_multiply(x, x);
  EXPECT_EQ(sq.constant(), 1);
  EXPECT_EQ(sq.coefficient(s), 0);
  EXPECT_TRUE(sq.terms().empty());

  const auto m = complete(bar(s | t), 6);
  EXPECT_EQ(completed_multiply(m, m).coefficient(s | t), 4);

  const auto unit = complete(KRingElement::constant(kEdge, Basis::kBar, 1), 6);
  EXPECT_EQ(completed_multiply(m, unit), m);
}

TEST(CompletedMultiply, Mismatches) {
  EXPECT_THROW(completed_multiply(complete(bar(s), 4), complete(bar(s), 5)), AlgebraError);
  const auto other = std::make_shared<const Graph>(parse_graph("s t;"));
  EXPECT_THROW(completed_multiply(complete(bar(s), 4),
                                  complete(KRingElement::monomial(other, Basis::kBar, s), 4)),
               AlgebraError);
  EXPECT_THROW(CompletedElement(kEdge, 0), AlgebraError);
}

TEST(CompletedMultiply, ResiduesInRange) {
  SampleRng rng(3);
  for (const auto& name : testing::suite_names()) {
    const auto g = std::make_shared<const Graph>(testing::load_suite_graph(name));
    std::vector<VertexMask> cliques;
    for (const auto& c : enumerate_spherical(*g)) cliques.push_back(c.mask);
    for (unsigned p : {1u, 3u, 32u, 70u}) {
      const BigInt mod = BigInt(1) << p;
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_element(g, Basis::kBar, cliques, rng, {6, 1000});
        const auto b = random_element(g, Basis::kBar, cliques, rng, {6, 1000});
        const auto prod = completed_multiply(complete(a, p), complete(b, p));
        EXPECT_EQ(prod, complete(multiply_bar(a, b), p)) << name << " p=" << p;
        for (const auto& [k, v] : prod.terms()) {
          EXPECT_NE(k, 0u);
          EXPECT_GE(v, 0);
          EXPECT_LT(v, mod);
        }
      }
    }
  }
}

}  // namespace
}  // namespace racgk
