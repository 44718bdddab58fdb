#include <gtest/gtest.h>

#include <cmath>

#include "tia/harness.hpp"
#include "tia/oracles.hpp"
#include "tia/separators.hpp"

using namespace tia;

namespace {

SeparatorCertificate cert(const SeparatorOutcome& o) {
  EXPECT_TRUE(std::holds_alternative<SeparatorCertificate>(o));
  return std::get<SeparatorCertificate>(o);
}

}  // namespace

TEST(Gyarfas, Clique) {
  const Graph g = Graph::complete(6);
  const auto c = cert(gyarfas_dominated_separator(g, 3));
  EXPECT_EQ(c.x.to_vector(), (std::vector<Vertex>{0}));
  EXPECT_TRUE(c.components.empty());
  EXPECT_TRUE(c.validate(g, 2));
}

TEST(Gyarfas, Path9) {
  const Graph g = Graph::path(9);
  const auto c = cert(gyarfas_dominated_separator(g, 5));
  EXPECT_EQ(c.x.to_vector(), (std::vector<Vertex>{4}));
  ASSERT_EQ(c.components.size(), 2u);
  EXPECT_EQ(c.components[0].to_vector(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(c.components[1].to_vector(), (std::vector<Vertex>{6, 7, 8}));
  EXPECT_TRUE(c.validate(g, 4));
}

TEST(Gyarfas, Cycle6) {
  const Graph g = Graph::cycle(6);
  const auto c = cert(gyarfas_dominated_separator(g, 5));
  EXPECT_EQ(c.x.to_vector(), (std::vector<Vertex>{0}));
  ASSERT_EQ(c.components.size(), 1u);
  EXPECT_EQ(c.components[0].to_vector(), (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(c.bound, 3u);
  EXPECT_TRUE(c.validate(g, 4));
}

TEST(Gyarfas, LongCycleYieldsWitness) {
  // removing N[X] for an induced path X of at most 2 vertices leaves a path of 26
  const Graph g = Graph::cycle(30);
  const auto o = gyarfas_dominated_separator(g, 3);
  ASSERT_TRUE(std::holds_alternative<InducedPath>(o));
  const auto& p = std::get<InducedPath>(o);
  EXPECT_EQ(p.vertices.size(), 3u);
  EXPECT_TRUE(verify_witness(g, p));
}

TEST(Gyarfas, RejectsDisconnectedAndNull) {
  EXPECT_THROW(gyarfas_dominated_separator(Graph::edgeless(2), 5), std::invalid_argument);
  EXPECT_THROW(gyarfas_dominated_separator(Graph(), 5), std::invalid_argument);
}

TEST(Gyarfas, CertificatesValidateOnPtFreeCorpus) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const std::size_t t = 5 + s % 3;
    const Graph g = gen_class_free(8 + s % 20, s, {Pattern{Pattern::Path, t}});
    for (const auto& comp : components(g, g.vertices())) {
      const InducedSubgraph sub = induced_subgraph(g, comp);
      const auto o = gyarfas_dominated_separator(sub.graph, t);
      ASSERT_TRUE(std::holds_alternative<SeparatorCertificate>(o));
      EXPECT_TRUE(std::get<SeparatorCertificate>(o).validate(sub.graph, t - 1));
    }
  }
}

TEST(Certificate, DetectsBrokenClaims) {
  const Graph g = Graph::path(9);
  auto c = cert(gyarfas_dominated_separator(g, 5));
  c.x = VertexSet(9, {0});
  EXPECT_FALSE(c.validate(g, 4));
  auto d = cert(gyarfas_dominated_separator(g, 5));
  EXPECT_FALSE(d.validate(g, 0));
}

TEST(Providers, ByName) {
  const NamedProvider p = provider_by_name("pt-free:6");
  EXPECT_EQ(p.name, "pt-free:6");
  EXPECT_EQ(p.d, 5u);
  EXPECT_THROW(provider_by_name("bogus"), std::invalid_argument);
}

TEST(Dbs, Clique) {
  const NamedProvider p = pt_free_provider(5);
  const auto r = dbs_low_alpha_vertex(Graph::complete(7), 2, p.d, p.provide);
  EXPECT_EQ(r.alpha_closed, 1u);
}

TEST(Dbs, C5) {
  const NamedProvider p = pt_free_provider(5);
  const Graph g = Graph::cycle(5);
  const auto r = dbs_low_alpha_vertex(g, 2, p.d, p.provide);
  EXPECT_EQ(r.alpha_closed, 2u);
  EXPECT_NEAR(r.bound, 8 * std::log2(5.0), 1e-9);
  EXPECT_LE(static_cast<double>(r.alpha_closed), r.bound);
}

TEST(Dbs, StarLeaf) {
  const NamedProvider p = pt_free_provider(5);
  const auto r = dbs_low_alpha_vertex(Graph::complete_bipartite(1, 8), 2, p.d, p.provide);
  EXPECT_NE(r.vertex, 0u);
  EXPECT_EQ(r.alpha_closed, 1u);
}

TEST(Dbs, BoundOnClassCorpus) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const std::size_t t = 5 + s % 3, l = 2 + s % 2;
    const Graph g = gen_class_free(10 + s % 25, s, {Pattern{Pattern::Path, t}, Pattern{Pattern::K2l, l}});
    const NamedProvider p = pt_free_provider(t);
    const auto r = dbs_low_alpha_vertex(g, l, p.d, p.provide);
    EXPECT_EQ(r.alpha_closed, alpha_of_subset(g, g.closed_neighborhood(r.vertex)));
    EXPECT_LE(static_cast<double>(r.alpha_closed), static_cast<double>((t - 1) * l) * std::log2(double(g.order())));
    for (const auto& step : r.steps)
      if (step.separator) {
        EXPECT_TRUE(step.separator->validate(g, p.d));
      }
  }
}

TEST(Dbs, SparseTreeTakesSeparatorStep) {
  // centres 0 and 1, four children each, four leaves per child: n = 42, max degree 5
  std::vector<Edge> e{{0, 1}};
  Vertex next = 2;
  for (Vertex c : {0, 1})
    for (int k = 0; k < 4; ++k) {
      const Vertex child = next++;
      e.emplace_back(c, child);
      for (int j = 0; j < 4; ++j) e.emplace_back(child, next++);
    }
  const Graph g = Graph::from_edges(next, e);
  ASSERT_FALSE(find_induced_path(g, 7));
  const NamedProvider p = pt_free_provider(7);
  const auto r = dbs_low_alpha_vertex(g, 2, p.d, p.provide);
  ASSERT_FALSE(r.steps.empty());
  EXPECT_EQ(r.steps[0].kind, DbsCase::Separator);
  ASSERT_TRUE(r.steps[0].separator);
  EXPECT_TRUE(r.steps[0].separator->validate(g, p.d));
  EXPECT_LE(static_cast<double>(r.alpha_closed), 12 * std::log2(42.0));
}
