#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "tia/decomposer.hpp"
#include "tia/degeneracy.hpp"
#include "tia/harness.hpp"
#include "tia/oracles.hpp"

using namespace tia;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, int num, int den) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % den) < num) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph random_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(rng() % v, v);
  return Graph::from_edges(n, e);
}

}  // namespace

TEST(ExactTia, Examples) {
  EXPECT_EQ(exact_tia(Graph::cycle(5)), 2u);
  EXPECT_EQ(exact_tia(Graph::complete_bipartite(3, 3)), 3u);
  EXPECT_EQ(exact_tia(Graph::complete(6)), 1u);
  EXPECT_EQ(exact_tia(Graph::edgeless(4)), 1u);
  EXPECT_EQ(exact_tia(Graph()), 0u);
}

TEST(ExactTia, TreesAreOne) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(exact_tia(random_tree(rng, 2 + i % 7)), 1u);
}

TEST(ExactTia, OneIffChordal) {
  std::mt19937_64 rng(5);
  int chordal = 0;
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_graph(rng, 3 + i % 6, 1 + i % 3, 4);
    const bool c = is_chordal(g);
    chordal += c;
    EXPECT_EQ(exact_tia(g) == 1, c) << serialize_graph(g);
  }
  EXPECT_GT(chordal, 10);
}

TEST(ExactTia, AgreesWithCompletions) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 120; ++i) {
    const Graph g = random_graph(rng, 1 + i % 6, 1 + i % 3, 4);
    EXPECT_EQ(exact_tia(g), exact_tia_by_completions(g)) << serialize_graph(g);
  }
  EXPECT_THROW(exact_tia_by_completions(Graph::edgeless(7)), OracleCapExceeded);
}

TEST(ExactTia, Cap) {
  EXPECT_THROW(exact_tia(Graph::cycle(9), 8), OracleCapExceeded);
  EXPECT_EQ(exact_tia(Graph::cycle(9), 9), 2u);
  ::setenv("TIA_ORACLE_CAP", "5", 1);
  EXPECT_EQ(oracle_cap(), 5u);
  EXPECT_THROW(exact_tia(Graph::cycle(6)), OracleCapExceeded);
  ::unsetenv("TIA_ORACLE_CAP");
  EXPECT_EQ(oracle_cap(), 8u);
  EXPECT_THROW(exact_tia(Graph::cycle(21), 30), OracleCapExceeded);
}

TEST(Chordal, Examples) {
  EXPECT_TRUE(is_chordal(Graph::complete(5)));
  EXPECT_TRUE(is_chordal(Graph::path(6)));
  EXPECT_FALSE(is_chordal(Graph::cycle(4)));
  EXPECT_FALSE(is_chordal(Graph::cycle(5)));
  EXPECT_TRUE(is_chordal(Graph()));
}

TEST(Generators, P5FreeDeterministicAndCertified) {
  for (GenMethod m : {GenMethod::UnionJoin, GenMethod::PerturbFilter}) {
    for (std::uint64_t s = 0; s < 15; ++s) {
      const std::size_t n = 1 + s * 2;
      const Graph g = gen_p5_free(n, s, m);
      EXPECT_EQ(g.order(), n);
      EXPECT_EQ(g, gen_p5_free(n, s, m));
      EXPECT_FALSE(find_induced_path(g, 5));
    }
    EXPECT_EQ(gen_method_from_name(gen_method_name(m)), m);
  }
  EXPECT_THROW(gen_method_from_name("nope"), std::invalid_argument);
}

TEST(Generators, ClassFreeCertified) {
  const std::vector<Pattern> forbid = parse_patterns("p5,kll:2");
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = gen_class_free(5 + 3 * s, s, forbid);
    EXPECT_EQ(g, gen_class_free(5 + 3 * s, s, forbid));
    EXPECT_FALSE(first_forbidden(g, forbid));
    EXPECT_GT(g.size(), 0u);
  }
  EXPECT_EQ(gen_class_free(1, 0, forbid).order(), 1u);
}

TEST(Generators, BudgetAndStart) {
  EXPECT_THROW(gen_class_free(10, 0, parse_patterns("p5"), 0), GeneratorExhausted);
  const Graph c5 = Graph::cycle(5);
  const Graph g = gen_class_free(0, 1, parse_patterns("p5,k2l:2"), 16, &c5);
  EXPECT_EQ(g.order(), 5u);
  EXPECT_FALSE(first_forbidden(g, parse_patterns("p5,k2l:2")));
  const Graph p5 = Graph::path(5);
  EXPECT_THROW(gen_class_free(0, 1, parse_patterns("p5"), 16, &p5), std::invalid_argument);
}

TEST(Patterns, Parse) {
  EXPECT_EQ(parse_pattern("p5").kind, Pattern::P5);
  const Pattern p = parse_pattern("path:7");
  EXPECT_EQ(p.kind, Pattern::Path);
  EXPECT_EQ(p.param, 7u);
  EXPECT_EQ(p.name(), "path:7");
  EXPECT_EQ(parse_patterns("p5,kll:3,sd:2").size(), 3u);
  EXPECT_THROW(parse_pattern("kll"), std::invalid_argument);
  EXPECT_THROW(parse_pattern("kll:x"), std::invalid_argument);
  EXPECT_THROW(parse_pattern("star:3"), std::invalid_argument);
}

TEST(Patterns, FindAndFirstForbidden) {
  const Graph k33 = Graph::complete_bipartite(3, 3);
  const auto w = find_pattern(k33, parse_pattern("k2l:3"));
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(k33, *w));
  EXPECT_FALSE(find_pattern(k33, parse_pattern("kll:4")));
  const auto f = first_forbidden(Graph::path(6), parse_patterns("kll:2,path:6,p5"));
  ASSERT_TRUE(f);
  EXPECT_EQ(witness_vertices(*f).size(), 6u);
}

TEST(Audit, C5) {
  const TrialRecord r = audit_sandwich(Graph::cycle(5), 3, "fixed");
  EXPECT_EQ(r.l_star, 2u);
  EXPECT_EQ(r.k_star, 2u);
  EXPECT_EQ(r.tia, std::optional<std::size_t>(2));
  EXPECT_EQ(r.alpha_degeneracy, 2u);
  EXPECT_EQ(r.outcome, "decomposition");
}

TEST(Audit, K4) {
  const TrialRecord r = audit_sandwich(Graph::complete(4));
  EXPECT_EQ(r.l_star, 2u);
  EXPECT_EQ(r.k_star, 1u);
  EXPECT_EQ(r.tia, std::optional<std::size_t>(1));
}

TEST(Audit, K33) {
  const TrialRecord r = audit_sandwich(Graph::complete_bipartite(3, 3));
  EXPECT_EQ(r.l_star, 4u);
  EXPECT_EQ(r.tia, std::optional<std::size_t>(3));
  EXPECT_EQ(r.biclique_number, 3u);
  EXPECT_GE(r.k_star, 3u);
}

TEST(Audit, SandwichOnSmallCorpus) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph g = gen_p5_free(3 + s % 6, s, s % 2 ? GenMethod::UnionJoin : GenMethod::PerturbFilter);
    const TrialRecord r = audit_sandwich(g, s, "mixed");
    ASSERT_TRUE(r.tia);
    EXPECT_LE(*r.tia, r.k_star);
    EXPECT_LE(r.k_star, 4 * r.l_star);
  }
}

TEST(Audit, CsvAndSummary) {
  const TrialRecord r = audit_sandwich(Graph::cycle(5), 9, "fixed");
  const std::string header = TrialRecord::csv_header();
  const std::string row = r.to_csv();
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
  EXPECT_EQ(row.rfind("9,fixed,5,5,2,decomposition,2,2,", 0), 0u) << row;
  const std::string table = summary_table({r});
  EXPECT_NE(table.find("l*"), std::string::npos);
}
