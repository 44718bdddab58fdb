#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tia/degeneracy.hpp"
#include "tia/harness.hpp"
#include "tia/oracles.hpp"

using namespace tia;

namespace {

// X = 0..a-1, Y = a..a+b-1
Graph bipartite(std::size_t a, std::size_t b, const std::vector<Edge>& xy) {
  std::vector<Edge> e;
  for (const auto& [x, y] : xy) e.emplace_back(x, a + y);
  return Graph::from_edges(a + b, e);
}

std::size_t brute_alpha_degeneracy(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::size_t best = g.order() + 1;
  do {
    VertexSet alive = g.vertices();
    std::size_t worst = 0;
    for (Vertex v : order) {
      worst = std::max(worst, alpha_of_subset(g, g.closed_neighborhood(v) & alive));
      alive.erase(v);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace

TEST(Nokll, K22GivesBiclique) {
  const Graph g = Graph::complete_bipartite(2, 2);
  const auto r = nokll_filter(g, VertexSet(4, {0, 1}), VertexSet(4, {2, 3}), 1, 2);
  ASSERT_TRUE(std::holds_alternative<InducedBiclique>(r));
  EXPECT_TRUE(verify_witness(g, std::get<InducedBiclique>(r)));
}

TEST(Nokll, PreconditionOnB) {
  const Graph g = bipartite(3, 3, {{0, 0}, {1, 1}, {2, 2}});
  EXPECT_THROW(nokll_filter(g, VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5}), 2, 2), std::invalid_argument);
}

TEST(Nokll, RandomBicliqueFreeInstancesMatchCounting) {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int i = 0; i < 4000 && checked < 60; ++i) {
    const std::size_t a = 3 + i % 4, b = 6 + i % 5, l = 2 + i % 2, p = 1 + i % 3;
    if (b < p * l) continue;
    std::vector<Edge> xy;
    for (Vertex x = 0; x < a; ++x)
      for (Vertex y = 0; y < b; ++y)
        if (rng() % 3 == 0) xy.emplace_back(x, y);
    const Graph g = bipartite(a, b, xy);
    if (find_induced_biclique(g, l)) continue;
    const VertexSet sa = VertexSet::interval(a + b, 0, a), sb = VertexSet::interval(a + b, a, a + b);
    const auto r = nokll_filter(g, sa, sb, p, l);
    ASSERT_TRUE(std::holds_alternative<std::vector<Vertex>>(r));
    std::vector<Vertex> expect;
    for (Vertex x : sa)
      if ((sb - g.neighbors(x)).size() < p) expect.push_back(x);
    EXPECT_EQ(std::get<std::vector<Vertex>>(r), expect);
    EXPECT_LE(expect.size(), l - 1);
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(Bigdegree, TwoK2Example) {
  // x1=0, x2=1, y1=2, y2=3, y3=4
  const Graph g = bipartite(2, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}});
  const auto r = bigdegree_extract(g, VertexSet(5, {0, 1}), VertexSet(5, {2, 3, 4}), 2, 2);
  ASSERT_TRUE(std::holds_alternative<InducedMatching>(r));
  const auto& m = std::get<InducedMatching>(r);
  EXPECT_EQ(m.edges, (std::vector<Edge>{{0, 2}, {1, 4}}));
  EXPECT_TRUE(verify_witness(g, m));
}

TEST(Bigdegree, K22GivesBiclique) {
  const Graph g = Graph::complete_bipartite(2, 2);
  const auto r = bigdegree_extract(g, VertexSet(4, {0, 1}), VertexSet(4, {2, 3}), 2, 2);
  ASSERT_TRUE(std::holds_alternative<InducedBiclique>(r));
  EXPECT_TRUE(verify_witness(g, std::get<InducedBiclique>(r)));
}

TEST(Bigdegree, SmallXGivesBound) {
  const Graph g = bipartite(1, 2, {{0, 0}, {0, 1}});
  const auto r = bigdegree_extract(g, VertexSet(3, {0}), VertexSet(3, {1, 2}), 2, 2);
  ASSERT_TRUE(std::holds_alternative<BigdegreeBound>(r));
  EXPECT_EQ(std::get<BigdegreeBound>(r).x_size, 1u);
  EXPECT_EQ(std::get<BigdegreeBound>(r).bound, 1u);
}

TEST(Bigdegree, DegreePreconditionNamesVertex) {
  const Graph g = bipartite(2, 2, {{0, 0}, {0, 1}, {1, 1}});
  try {
    // l^(d-1) = 2 and only vertex 1 has degree 1
    bigdegree_extract(g, VertexSet(4, {0, 1}), VertexSet(4, {2, 3}), 2, 2);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 1"), std::string::npos);
  }
}

TEST(Smalldegree, ThreeK2) {
  const Graph g = bipartite(3, 3, {{0, 0}, {1, 1}, {2, 2}});
  const VertexSet x(6, {0, 1, 2}), y(6, {3, 4, 5});
  const auto m = bipartite_max_matching(g, x, y);
  const InducedMatching r = smalldegree_extract(g, x, y, m, 1, 2);
  EXPECT_EQ(r.edges.size(), 2u);
  EXPECT_TRUE(verify_witness(g, r));
  const InducedMatching one = smalldegree_extract(g, x, y, m, 1, 1);
  EXPECT_EQ(one.edges.size(), 1u);
  EXPECT_TRUE(verify_witness(g, one));
}

TEST(Smalldegree, RandomDegreeTwo) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    const std::size_t a = 5, b = 8;
    std::vector<Edge> xy;
    for (Vertex x = 0; x < a; ++x) {
      xy.emplace_back(x, x);
      const Vertex extra = a + rng() % (b - a);
      if (rng() % 2) xy.emplace_back(x, extra);
    }
    const Graph g = bipartite(a, b, xy);
    const VertexSet x = VertexSet::interval(a + b, 0, a), y = VertexSet::interval(a + b, a, a + b);
    const auto m = bipartite_max_matching(g, x, y);
    ASSERT_EQ(m.edges.size(), a);
    const InducedMatching r = smalldegree_extract(g, x, y, m, 2, 2);
    EXPECT_TRUE(verify_witness(g, r));
    EXPECT_TRUE(find_induced_matching(g, g.vertices(), 2).has_value());
  }
}

TEST(Smalldegree, Preconditions) {
  const Graph g = bipartite(2, 2, {{0, 0}, {1, 1}});
  const VertexSet x(4, {0, 1}), y(4, {2, 3});
  const auto m = bipartite_max_matching(g, x, y);
  EXPECT_THROW(smalldegree_extract(g, x, y, m, 1, 2), std::invalid_argument);
}

TEST(LowAlpha, C5) {
  const auto r = low_alpha_vertex(Graph::cycle(5), 2, 2);
  EXPECT_EQ(r.vertex, 0u);
  EXPECT_EQ(r.alpha_closed, 2u);
  EXPECT_EQ(r.bound, 4u);
  EXPECT_FALSE(r.witness);
}

TEST(LowAlpha, StarLeaf) {
  const auto r = low_alpha_vertex(Graph::complete_bipartite(1, 3), 2, 2);
  EXPECT_NE(r.vertex, 0u);
  EXPECT_EQ(r.alpha_closed, 1u);
  EXPECT_FALSE(r.witness);
}

TEST(LowAlpha, K44GivesVerifiedBiclique) {
  const Graph g = Graph::complete_bipartite(4, 4);
  const auto r = low_alpha_vertex(g, 2, 2);
  EXPECT_EQ(r.alpha_closed, 4u);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(witness_kind(*r.witness), "biclique");
  EXPECT_TRUE(verify_witness(g, *r.witness));
}

TEST(LowAlpha, Bounds) {
  EXPECT_EQ(low_alpha_bound(2, 2), 4u);
  EXPECT_EQ(low_alpha_bound(2, 3), 9u * 2 + 6 * 4);
  EXPECT_THROW(low_alpha_vertex(Graph::cycle(5), 1, 2), std::invalid_argument);
  EXPECT_THROW(low_alpha_vertex(Graph::cycle(5), 2, 1), std::invalid_argument);
  EXPECT_THROW(low_alpha_vertex(Graph(), 2, 2), std::invalid_argument);
}

TEST(LowAlpha, ReportInvariantOnP5FreeCorpus) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph g = gen_p5_free(6 + s % 15, s, s % 2 ? GenMethod::UnionJoin : GenMethod::PerturbFilter);
    for (std::size_t l : {2, 3}) {
      const auto r = low_alpha_vertex(g, l, 2);
      if (r.witness) {
        EXPECT_TRUE(verify_witness(g, *r.witness));
        EXPECT_GE(r.alpha_closed, r.bound);
      } else {
        EXPECT_LT(r.alpha_closed, r.bound);
        EXPECT_EQ(r.alpha_closed, alpha_of_subset(g, g.closed_neighborhood(r.vertex)));
        EXPECT_TRUE(max_independent_set(g).contains(r.vertex));
      }
    }
  }
}

TEST(AlphaDegeneracy, Examples) {
  EXPECT_EQ(alpha_degeneracy(Graph::complete(5)), 1u);
  EXPECT_EQ(alpha_degeneracy(Graph::edgeless(4)), 1u);
  EXPECT_EQ(alpha_degeneracy(Graph::complete_bipartite(3, 3)), 3u);
  EXPECT_THROW(alpha_degeneracy(Graph()), std::invalid_argument);
}

TEST(AlphaDegeneracy, GreedyMatchesAllOrders) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 3 + i % 5;
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 2) e.emplace_back(u, v);
    const Graph g = Graph::from_edges(n, e);
    EXPECT_EQ(alpha_degeneracy(g), brute_alpha_degeneracy(g)) << serialize_graph(g);
  }
}
