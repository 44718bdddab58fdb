#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tia/graph.hpp"

namespace tia {

struct InducedPath {
  std::vector<Vertex> vertices;
};

/// Complete bipartite graph with independent sides, induced in G.
struct InducedBiclique {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

/// d pairwise non-touching edges with no edge joining two of them (dK2).
struct InducedMatching {
  std::vector<Edge> edges;
};

/// S_d: a center joined to d middles, each middle carrying one private leaf.
struct SubdividedStar {
  Vertex center = 0;
  std::vector<Edge> spokes;  // (middle, leaf)
};

/// Certificate that a graph contains a forbidden induced structure.
using Witness = std::variant<InducedPath, InducedBiclique, InducedMatching, SubdividedStar>;

std::string_view witness_kind(const Witness& w);
std::vector<Vertex> witness_vertices(const Witness& w);

/// Checks every required edge and every required non-edge of the claimed
/// induced structure. Returns false on repeated or out-of-range vertices.
bool verify_witness(const Graph& g, const Witness& w);

/// Renames vertices through `to_parent` (used when a witness was found in an
/// induced subgraph).
Witness map_witness(const Witness& w, const std::vector<Vertex>& to_parent);

nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

/// Raised when an input promise (P5-freeness, K_{l,l}-freeness, class
/// membership) is found broken. Carries the verified certificate when one
/// could be extracted.
class PromiseBreach : public std::runtime_error {
 public:
  PromiseBreach(const std::string& what, std::optional<Witness> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::optional<Witness>& witness() const noexcept { return witness_; }

 private:
  std::optional<Witness> witness_;
};

}  // namespace tia
