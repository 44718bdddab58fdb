#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tia/graph.hpp"
#include "tia/tree_decomposition.hpp"
#include "tia/witness.hpp"

namespace tia {

// All functions below take the full graph G together with a root r and a
// decomposition of G - r kept in G's vertex universe (r is in no bag).

/// Ordered pairs (x, y) of distinct neighbours of r that share no bag.
std::vector<Edge> enumerate_uncobagged_pairs(const Graph& g, Vertex r, const TreeDecomposition& td);

struct PairChoice {
  Vertex x = 0;
  Vertex y = 0;
  bool bad = false;
  std::size_t distance = 0;
};

/// N(v) minus N[r].
VertexSet outer_neighborhood(const Graph& g, Vertex r, Vertex v);

/// (x, y) is bad when alpha(N_r(x) - N_r(y)) >= l.
bool is_bad_pair(const Graph& g, Vertex r, Vertex x, Vertex y, std::size_t l);

/// Bad pairs first, then largest distance between T(x) and T(y), then least (x, y).
std::optional<PairChoice> select_pair(const Graph& g, Vertex r, const TreeDecomposition& td, std::size_t l);

struct PairContext {
  Vertex r = 0;
  Vertex x = 0;
  Vertex y = 0;
  std::size_t l = 0;
  bool bad = false;
  const TreeDecomposition* td = nullptr;

  VertexSet domain;  // V(G) - r
  VertexSet nr;      // N(r)
  VertexSet nx, ny;  // outer neighbourhoods of x and y
  VertexSet m;
  VertexSet u, u0, ux, uy, uxy;
  VertexSet wx, wy, wxy;
  VertexSet movable;
  NodeId tx = 0, ty = 0;
  std::vector<NodeId> path_xy;  // tx .. ty
  std::vector<VertexSet> components;  // of G' - M, ordered by least id

  nlohmann::json to_json() const;
};

/// Builds the context for (x, y) and checks the structural claims. A failed
/// claim raises PromiseBreach with a P5 or K_{l,l} witness in G.
PairContext build_pair_context(const Graph& g, Vertex r, const TreeDecomposition& td, Vertex x, Vertex y,
                               std::size_t l);

TreeDecomposition case1_transform(const Graph& g, const PairContext& ctx);

struct Case2Plan {
  TreeDecomposition intermediate;  // master tree with bags B''
  TreeDecomposition master;        // master tree with bags B'
  VertexSet m_prime;
  std::vector<VertexSet> c_prime;   // per component of G' - M
  std::vector<NodeId> attach;       // t^M_C per component of G' - M
  std::vector<VertexSet> pieces;    // components D of G' - M'
  std::vector<std::size_t> piece_parent;  // index of the component C containing D
};

Case2Plan plan_case2(const Graph& g, const PairContext& ctx);
TreeDecomposition case2_transform(const Graph& g, const PairContext& ctx);

struct IterationRecord {
  Vertex x = 0;
  Vertex y = 0;
  bool bad = false;
  std::size_t distance = 0;
  std::size_t potential_before = 0;
  std::size_t potential_after = 0;
  std::size_t nodes_after = 0;
};

struct SaturationResult {
  TreeDecomposition td;
  std::vector<IterationRecord> iterations;
};

/// Improvement loop until every pair of N(r) shares a bag.
SaturationResult saturate_root(const Graph& g, Vertex r, const TreeDecomposition& td, std::size_t l);

struct LevelLog {
  Vertex r = 0;  // id in the input graph
  std::size_t alpha_closed = 0;
  std::size_t degree = 0;
  std::vector<IterationRecord> iterations;  // vertex ids of the input graph
};

enum class Outcome { Decomposition, Biclique, RejectedP5 };
std::string outcome_name(Outcome o);

struct DecomposeOptions {
  bool check_p5 = true;
  // exhaustive K_{l,l} search up front; off leaves only the extraction route
  bool check_biclique = true;
};

struct DecomposeResult {
  Outcome outcome = Outcome::Decomposition;
  std::optional<TreeDecomposition> td;
  std::optional<Witness> witness;
  std::size_t alpha = 0;  // td_alpha when a decomposition is returned
  std::vector<LevelLog> log;

  nlohmann::json to_json(bool with_log) const;
};

/// Either an induced K_{l,l}, or a decomposition of G with every bag of
/// independence number at most 4l. P5 in the input gives RejectedP5.
DecomposeResult decompose(const Graph& g, std::size_t l, const DecomposeOptions& opts = {});

struct TiaApproximation {
  std::size_t k_star = 0;
  std::size_t l_star = 0;
  TreeDecomposition td;
  std::vector<LevelLog> log;  // of the successful l
};

/// Smallest l for which decompose returns a decomposition. Throws
/// PromiseBreach when G contains a P5.
TiaApproximation approximate_tia(const Graph& g);

}  // namespace tia
