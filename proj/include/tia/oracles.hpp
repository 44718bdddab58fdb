#pragma once

#include <optional>
#include <vector>

#include "tia/graph.hpp"
#include "tia/witness.hpp"

namespace tia {

/// alpha(G[S]), exact.
std::size_t alpha_of_subset(const Graph& g, const VertexSet& s);
inline std::size_t alpha(const Graph& g) { return alpha_of_subset(g, g.vertices()); }

/// True iff G[S] has an independent set of size k. Stops as soon as one is seen.
bool alpha_at_least(const Graph& g, const VertexSet& s, std::size_t k);

/// Lexicographically least maximum independent set of G[S].
VertexSet max_independent_set(const Graph& g, const VertexSet& s);
inline VertexSet max_independent_set(const Graph& g) { return max_independent_set(g, g.vertices()); }

/// Lexicographically least independent k-subset of S; nullopt when alpha(G[S]) < k.
std::optional<VertexSet> independent_subset(const Graph& g, const VertexSet& s, std::size_t k);

struct MatchingResult {
  std::vector<Edge> edges;  // (x, y) with x in X, y in Y, ordered by x
  VertexSet cover;          // König minimum vertex cover, |cover| == |edges|

  /// Partner of v under the matching, if matched.
  std::optional<Vertex> partner(Vertex v) const;
};

/// Maximum matching between X and Y (edges of G with one end in each).
/// X and Y must be disjoint and independent; throws std::invalid_argument otherwise.
MatchingResult bipartite_max_matching(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Exhaustive search for an induced path on t vertices (t >= 1). Paths are
/// grown depth-first from the least start vertex with ascending neighbours.
std::optional<InducedPath> find_induced_path(const Graph& g, std::size_t t);
std::optional<InducedPath> find_induced_path(const Graph& g, const VertexSet& within, std::size_t t);

/// Induced K_{a,b}: independent left a-set (colex order over left sides)
/// complete to an independent right b-set (lexicographically least).
std::optional<InducedBiclique> find_induced_complete_bipartite(const Graph& g, std::size_t a, std::size_t b);
std::optional<InducedBiclique> find_induced_complete_bipartite(const Graph& g, const VertexSet& within, std::size_t a,
                                                               std::size_t b);
inline std::optional<InducedBiclique> find_induced_biclique(const Graph& g, std::size_t l) {
  return find_induced_complete_bipartite(g, l, l);
}

/// Largest l such that G contains an induced K_{l,l} (0 for the null graph,
/// 0 for edgeless graphs).
std::size_t induced_biclique_number(const Graph& g);

/// Induced matching with d edges inside G[S] (every edge counts, not only bipartite ones).
std::optional<InducedMatching> find_induced_matching(const Graph& g, const VertexSet& within, std::size_t d);

/// Induced S_d (subdivided star with d spokes), d >= 1.
std::optional<SubdividedStar> find_induced_subdivided_star(const Graph& g, std::size_t d);

}  // namespace tia
