#include <gtest/gtest.h>

#include "kzmodp/ext_field.hpp"
#include "kzmodp/matrix.hpp"
#include "oracles.hpp"

using namespace kzmodp;

namespace {

Matrix<PrimeField> random_matrix(const PrimeField& F, std::size_t r, std::size_t c, Rng& rng, int zero_bias) {
  Matrix<PrimeField> m(F, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<int>(rng() % 10) < zero_bias ? F.zero() : F.random(rng);
  }
  return m;
}

oracle::Mat raw(const Matrix<PrimeField>& m) {
  oracle::Mat a(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).value();
  }
  return a;
}

}  // namespace

TEST(Matrix, KernelExamples) {
  const PrimeField F(5);
  const auto id = Matrix<PrimeField>::from_rows(F, {{F.one(), F.zero()}, {F.zero(), F.one()}}, 2);
  EXPECT_TRUE(id.kernel().empty());
  EXPECT_EQ(Matrix<PrimeField>(F, 2, 3).kernel().size(), 3u);
  const auto ones = Matrix<PrimeField>::from_rows(F, {{F.one(), F.one(), F.one()}}, 3);
  const auto k = ones.kernel();
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_TRUE(ones.apply(v)[0].is_zero());
}

TEST(Matrix, RankMatchesMinorExpansion) {
  Rng rng(42);
  for (std::uint64_t p : {2u, 5u, 7u}) {
    const PrimeField F(p);
    for (int t = 0; t < 300; ++t) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
      const auto m = random_matrix(F, r, c, rng, static_cast<int>(rng() % 8));
      EXPECT_EQ(m.rank(), oracle::minor_rank(raw(m), static_cast<long long>(p)));
    }
  }
}

TEST(Matrix, RankNullity) {
  const PrimeField F(7);
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const auto m = random_matrix(F, r, c, rng, static_cast<int>(rng() % 8));
    const auto k = m.kernel();
    EXPECT_EQ(m.rank() + k.size(), c);
    for (const auto& v : k) {
      for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
    }
    EXPECT_EQ(span_rank(F, k, c), k.size());
    EXPECT_EQ(m.transpose().rank(), m.rank());
  }
}

TEST(Matrix, WorksOverExtensionFields) {
  const ExtField E(PrimeField(3), 2);
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    Matrix<ExtField> m(E, 3, 4);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = E.random(rng);
    }
    const auto k = m.kernel();
    EXPECT_EQ(m.rank() + k.size(), 4u);
    for (const auto& v : k) {
      for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
    }
  }
}
