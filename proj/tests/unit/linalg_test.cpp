#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "racgk/hermite.hpp"
#include "racgk/smith.hpp"

namespace racgk {
namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  return m;
}

bool is_diagonal_form(const IntMatrix& d, const std::vector<BigInt>& diag) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      const BigInt want = (i == j && i < diag.size()) ? diag[i] : BigInt(0);
      if (d(i, j) != want) return false;
    }
  return true;
}

bool unimodular(const IntMatrix& u) {
  const auto f = testing::invariant_factors_oracle(u);
  if (f.size() != u.rows()) return false;
  for (const auto& x : f)
    if (x != 1) return false;
  return true;
}

TEST(Smith, DiagonalTwoThree) {
  const auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.diagonal, ints({1, 6}));
}

TEST(Smith, SingleRow) { EXPECT_EQ(smith_normal_form(IntMatrix{{1, 1}}).diagonal, ints({1})); }

TEST(Smith, ZeroMatrix) {
  EXPECT_TRUE(smith_normal_form(IntMatrix(3, 4)).diagonal.empty());
  EXPECT_TRUE(smith_normal_form(IntMatrix(0, 0)).diagonal.empty());
}

TEST(Smith, TransformsReproduceDiagonal) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 6);
    const auto s = smith_normal_form(m);
    EXPECT_TRUE(is_diagonal_form(s.left * m * s.right, s.diagonal)) << m;
    EXPECT_TRUE(unimodular(s.left));
    EXPECT_TRUE(unimodular(s.right));
  }
}

TEST(Smith, InvariantFactorsMatchDeterminantalDivisors) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 8);
    const auto s = smith_normal_form(m, SmithTransforms::kNone);
    EXPECT_EQ(s.diagonal, testing::invariant_factors_oracle(m)) << m;
    for (std::size_t i = 1; i < s.diagonal.size(); ++i) EXPECT_EQ(s.diagonal[i] % s.diagonal[i - 1], 0);
  }
}

TEST(Smith, RankMatchesModularRank) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_matrix(rng, 2 + rng() % 10, 2 + rng() % 10, 3);
    // Force dependencies.
    if (m.cols() > 2) m = m * IntMatrix{random_matrix(rng, m.cols(), m.cols() - 2, 2)};
    EXPECT_EQ(integer_rank(m), testing::rank_mod_p(m, 1'000'000'007ULL));
  }
}

TEST(Hermite, CanonicalShape) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 6, 9);
    const auto h = hermite_normal_form(a);
    const auto& b = h.basis;
    ASSERT_EQ(b.cols(), h.rank());
    for (std::size_t j = 0; j < h.rank(); ++j) {
      const auto p = h.pivot_rows[j];
      if (j) {
        EXPECT_GT(p, h.pivot_rows[j - 1]);
      }
      for (std::size_t r = 0; r < p; ++r) EXPECT_EQ(b(r, j), 0);
      EXPECT_GT(b(p, j), 0);
      for (std::size_t k = 0; k < j; ++k) {
        EXPECT_GE(b(p, k), 0);
        EXPECT_LT(b(p, k), b(p, j));
      }
    }
    // A·U = [H | 0] with U unimodular.
    const auto au = a * h.transform;
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) EXPECT_EQ(au(r, c), c < h.rank() ? b(r, c) : BigInt(0));
    EXPECT_TRUE(unimodular(h.transform));
    EXPECT_EQ(h.rank(), testing::rank_mod_p(a, 1'000'000'007ULL));
  }
}

TEST(Hermite, IndependentOfGeneratorOrder) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_matrix(rng, 3, 4, 7);
    IntMatrix shuffled = a;
    shuffled.swap_cols(0, 3);
    shuffled.add_col_multiple(1, 2, 5);
    EXPECT_EQ(hermite_normal_form(a).basis, hermite_normal_form(shuffled).basis);
  }
}

TEST(Hermite, MembershipAgreesWithEnumeration) {
  // The lattice spanned by (2,1) and (0,3).
  const IntMatrix a{{2, 0}, {1, 3}};
  const auto h = hermite_normal_form(a);
  for (long x = -6; x <= 6; ++x)
    for (long y = -6; y <= 6; ++y) {
      bool expected = false;
      for (long i = -10; i <= 10 && !expected; ++i)
        for (long j = -10; j <= 10 && !expected; ++j) expected = (2 * i == x && i + 3 * j == y);
      const auto v = ints({x, y});
      const auto m = lattice_membership(h, v);
      EXPECT_EQ(m.member, expected) << x << "," << y;
      if (m.member)
        EXPECT_EQ(a * std::span<const BigInt>(m.certificate), v);
      else
        EXPECT_FALSE(m.violation.empty());
    }
}

TEST(Hermite, MembershipDimensionMismatch) {
  const auto h = hermite_normal_form(IntMatrix{{1, 0}, {0, 2}});
  EXPECT_THROW(lattice_membership(h, ints({1, 2, 3})), std::invalid_argument);
}

TEST(Hermite, ZeroVectorHasZeroCertificate) {
  const auto h = hermite_normal_form(IntMatrix{{1, 0}, {0, 2}});
  const auto m = lattice_membership(h, ints({0, 0}));
  EXPECT_TRUE(m.member);
  for (const auto& c : m.certificate) EXPECT_EQ(c, 0);
}

TEST(Hermite, KernelBasis) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(rng, 2, 5, 4);
    const auto h = hermite_normal_form(a);
    const auto k = h.kernel_basis();
    EXPECT_EQ(k.cols(), a.cols() - h.rank());
    EXPECT_TRUE((a * k).is_zero());
  }
}

TEST(Hermite, ContainmentAndIndex) {
  const auto outer = hermite_normal_form(IntMatrix{{1, 0}, {0, 1}});
  const auto inner = hermite_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_TRUE(lattice_contains(outer, inner));
  EXPECT_FALSE(lattice_contains(inner, outer));
  EXPECT_EQ(inner.pivot_product(), 6);
}

TEST(IntMatrixOps, KroneckerShape) {
  const IntMatrix a{{1, 2}}, b{{0, 1}, {1, 0}};
  const auto k = IntMatrix::kronecker(a, b);
  EXPECT_EQ(k, (IntMatrix{{0, 1, 0, 2}, {1, 0, 2, 0}}));
}

TEST(IntMatrixOps, TripletDump) {
  std::ostringstream os;
  IntMatrix{{0, 5}, {-1, 0}}.write_triplets(os);
  EXPECT_EQ(os.str(), "2 2\n0 1 5\n1 0 -1\n");
}

}  // namespace
}  // namespace racgk
