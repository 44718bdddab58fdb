#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tia/simd/bitops.hpp"
#include "tia/vertex_set.hpp"

using namespace tia;

TEST(VertexSet, IteratesAscending) {
  VertexSet s(200, {150, 3, 64, 63, 0});
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 3, 63, 64, 150}));
  EXPECT_EQ(s.size(), 5u);
  EXPECT_EQ(s.front(), 0u);
}

TEST(VertexSet, SetAlgebra) {
  VertexSet a(10, {1, 2, 3}), b(10, {3, 4});
  EXPECT_EQ((a | b).to_vector(), (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_EQ((a & b).to_vector(), (std::vector<Vertex>{3}));
  EXPECT_EQ((a - b).to_vector(), (std::vector<Vertex>{1, 2}));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(VertexSet(10, {1}).intersects(VertexSet(10, {2})));
  EXPECT_TRUE(VertexSet(10, {1, 2}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_EQ(a.intersection_size(b), 1u);
  EXPECT_TRUE(VertexSet(10).empty());
  EXPECT_TRUE(VertexSet(10).is_subset_of(b));
}

TEST(VertexSet, FullAndRange) {
  EXPECT_EQ(VertexSet::full(130).size(), 130u);
  EXPECT_EQ(VertexSet::interval(10, 3, 6).to_vector(), (std::vector<Vertex>{3, 4, 5}));
  EXPECT_EQ(VertexSet::singleton(5, 4).to_vector(), (std::vector<Vertex>{4}));
}

TEST(VertexSet, RejectsOutOfRange) {
  VertexSet s(5);
  EXPECT_THROW(s.insert(5), std::out_of_range);
}

namespace {

std::vector<simd::Word> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<simd::Word> w(n);
  for (auto& x : w) {
    x = rng();
    for (int i = 0; i < density; ++i) x &= rng();
  }
  return w;
}

}  // namespace

TEST(SimdKernels, Avx2MatchesScalar) {
  const auto* avx = simd::avx2_kernels();
  if (!avx || !simd::cpu_has_avx2()) GTEST_SKIP() << "no AVX2 variant on this machine";
  const auto& sc = simd::scalar_kernels();
  std::mt19937_64 rng(7);
  for (std::size_t n : {0, 1, 3, 4, 5, 8, 13, 31, 64}) {
    for (int rep = 0; rep < 50; ++rep) {
      auto a = random_words(rng, n, rep % 3), b = random_words(rng, n, rep % 2);
      if (rep % 5 == 0)
        for (std::size_t i = 0; i < n; ++i) b[i] |= a[i];  // make subset cases
      EXPECT_EQ(sc.popcount(a.data(), n), avx->popcount(a.data(), n));
      EXPECT_EQ(sc.and_popcount(a.data(), b.data(), n), avx->and_popcount(a.data(), b.data(), n));
      EXPECT_EQ(sc.intersects(a.data(), b.data(), n), avx->intersects(a.data(), b.data(), n));
      EXPECT_EQ(sc.is_subset(a.data(), b.data(), n), avx->is_subset(a.data(), b.data(), n));
      auto x1 = a, x2 = a;
      sc.and_into(x1.data(), b.data(), n);
      avx->and_into(x2.data(), b.data(), n);
      EXPECT_EQ(x1, x2);
      x1 = a, x2 = a;
      sc.or_into(x1.data(), b.data(), n);
      avx->or_into(x2.data(), b.data(), n);
      EXPECT_EQ(x1, x2);
      x1 = a, x2 = a;
      sc.andnot_into(x1.data(), b.data(), n);
      avx->andnot_into(x2.data(), b.data(), n);
      EXPECT_EQ(x1, x2);
    }
  }
}

TEST(SimdKernels, VertexSetAgreesWithStdSet) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t u = 1 + rng() % 300;
    VertexSet a(u), b(u);
    std::set<Vertex> sa, sb;
    for (int i = 0; i < 60; ++i) {
      Vertex x = rng() % u, y = rng() % u;
      a.insert(x), sa.insert(x);
      b.insert(y), sb.insert(y);
    }
    std::vector<Vertex> inter, uni, diff;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(uni));
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(diff));
    EXPECT_EQ((a & b).to_vector(), inter);
    EXPECT_EQ((a | b).to_vector(), uni);
    EXPECT_EQ((a - b).to_vector(), diff);
    EXPECT_EQ(a.intersects(b), !inter.empty());
    EXPECT_EQ(a.is_subset_of(b), diff.empty());
  }
}
