#include <gtest/gtest.h>

#include "test_support.hpp"

namespace lpembed {
namespace {

using testing::naive_det;
using testing::naive_rank;

TEST(Linalg, EchelonRelation) {
  IncrementalEchelon ech(3);
  const std::vector<Rational> a{1, Rational(1, 2), 0}, b{0, 1, Rational(2, 3)}, c{2, 3, Rational(4, 3)};
  EXPECT_TRUE(ech.insert(a).independent);
  EXPECT_TRUE(ech.insert(b).independent);
  const auto ins = ech.insert(c);  // c = 2a + 2b
  ASSERT_FALSE(ins.independent);
  ASSERT_EQ(ins.relation.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j)
    EXPECT_EQ(ins.relation[0] * a[j] + ins.relation[1] * b[j] + ins.relation[2] * c[j], 0);
  EXPECT_NE(ins.relation[2], 0);
  EXPECT_EQ(ech.rank(), 2u);
}

TEST(Linalg, InverseAgainstIdentity) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a(4, std::vector<Rational>(4));
    for (auto& row : a)
      for (auto& v : row) v = testing::random_rational(rng);
    const auto inv = inverse(a);
    if (naive_det(a) == 0) {
      EXPECT_FALSE(inv);
      continue;
    }
    ASSERT_TRUE(inv);
    EXPECT_EQ(multiply(a, *inv), identity_matrix(4));
  }
  EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
}

TEST(Linalg, RankAgainstNaiveElimination) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 2 + trial % 5, cols = 2 + (trial * 7) % 5;
    Matrix a(rows, std::vector<Rational>(cols));
    for (auto& row : a)
      for (auto& v : row) v = testing::random_rational(rng, 2, 2);
    if (trial % 3 == 0) a.back() = a.front();
    EXPECT_EQ(rank(a), naive_rank(a));
  }
  EXPECT_EQ(rank(Matrix{{0, 0}, {0, 0}}), 0u);
}

TEST(Linalg, EchelonRelationsAnnihilate) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<Rational>> rows;
    IncrementalEchelon ech(4);
    for (int r = 0; r < 7; ++r) {
      std::vector<Rational> row(4);
      for (auto& v : row) v = testing::random_rational(rng, 3, 3);
      rows.push_back(row);
      const auto ins = ech.insert(row);
      if (ins.independent) continue;
      for (std::size_t j = 0; j < 4; ++j) {
        Rational s(0);
        for (std::size_t k = 0; k < ins.relation.size(); ++k) s += ins.relation[k] * rows[k][j];
        EXPECT_EQ(s, 0);
      }
    }
    EXPECT_EQ(ech.rank(), naive_rank(rows));
  }
}

}  // namespace
}  // namespace lpembed
