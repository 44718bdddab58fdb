#pragma once

#include <optional>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tia/graph.hpp"
#include "tia/oracles.hpp"
#include "tia/witness.hpp"

namespace tia {

/// Integer power with overflow check.
std::size_t ipow(std::size_t base, std::size_t exp);
std::size_t binomial2(std::size_t d);

/// Vertices of A with fewer than p non-neighbours in B, or an induced
/// K_{l,l} when there are at least l of them. Needs |B| >= p*l.
using NokllResult = std::variant<std::vector<Vertex>, InducedBiclique>;
NokllResult nokll_filter(const Graph& g, const VertexSet& a, const VertexSet& b, std::size_t p, std::size_t l);

/// |X| <= C(d,2)(l-1) holds, nothing to extract.
struct BigdegreeBound {
  std::size_t x_size;
  std::size_t bound;
};

using BigdegreeResult = std::variant<InducedMatching, InducedBiclique, BigdegreeBound>;

/// Private neighbourhood of v with respect to A, inside Y: N(v) ∩ Y minus N(A - v).
VertexSet private_neighborhood(const Graph& g, Vertex v, const std::vector<Vertex>& a, const VertexSet& y);

/// Every x in X must have at least l^(d-1) neighbours in Y.
BigdegreeResult bigdegree_extract(const Graph& g, const VertexSet& x, const VertexSet& y, std::size_t d, std::size_t l);

/// Induced matching with d edges between X and Y. The matching must cover X,
/// every x has at most q neighbours in Y, and |X| > 2(d-1)q.
InducedMatching smalldegree_extract(const Graph& g, const VertexSet& x, const VertexSet& y,
                                    const MatchingResult& matching, std::size_t q, std::size_t d);

struct LowAlphaReport {
  Vertex vertex = 0;
  std::size_t alpha_closed = 0;
  std::size_t bound = 0;
  std::optional<Witness> witness;

  nlohmann::json to_json() const;
};

/// bound(l, 2) = 2l, otherwise d^2 l + 2 d l^(d-1).
std::size_t low_alpha_bound(std::size_t l, std::size_t d);

LowAlphaReport low_alpha_vertex(const Graph& g, std::size_t l, std::size_t d);

std::size_t alpha_degeneracy(const Graph& g);

/// The elimination order realising alpha_degeneracy, with alpha(N[v]) at each step.
std::vector<std::pair<Vertex, std::size_t>> alpha_degeneracy_order(const Graph& g);

}  // namespace tia
