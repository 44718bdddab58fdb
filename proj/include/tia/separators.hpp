#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tia/graph.hpp"
#include "tia/witness.hpp"

namespace tia {

/// X dominates a balanced separator of G[domain]: every component of
/// G[domain] - N[X] has at most |domain|/2 vertices.
struct SeparatorCertificate {
  VertexSet domain;
  VertexSet x;
  std::vector<Vertex> path;  // X in growth order (an induced path for the Gyarfas provider)
  VertexSet dominated;       // N[X] ∩ domain
  std::vector<VertexSet> components;
  std::size_t bound = 0;  // floor(|domain| / 2)

  /// Empty when the certificate is sound for G and size limit d.
  std::vector<std::string> violations(const Graph& g, std::size_t d) const;
  bool validate(const Graph& g, std::size_t d) const { return violations(g, d).empty(); }
  nlohmann::json to_json() const;
};

using SeparatorOutcome = std::variant<SeparatorCertificate, InducedPath>;
using SeparatorProvider = std::function<SeparatorOutcome(const Graph&)>;

/// Grows an induced path towards the unique large component of G - N[P]
/// until G - N[P] is balanced. Returns the path as a P_t witness if it
/// reaches t vertices first. G must be connected and non-null.
SeparatorOutcome gyarfas_dominated_separator(const Graph& g, std::size_t t);

struct NamedProvider {
  std::string name;
  std::size_t d;  // size limit on X
  SeparatorProvider provide;
};

/// "pt-free:<t>" gives the Gyarfas provider with d = t-1.
NamedProvider provider_by_name(const std::string& name);
NamedProvider pt_free_provider(std::size_t t);

enum class DbsCase { Clique, HighDegree, Separator, Singleton };

struct DbsStep {
  DbsCase kind;
  VertexSet domain;  // vertex set after peeling universal vertices
  std::size_t peeled = 0;
  std::optional<Vertex> pivot;                     // HighDegree
  std::optional<SeparatorCertificate> separator;   // Separator, in ids of G
};

struct DbsResult {
  Vertex vertex = 0;
  std::size_t alpha_closed = 0;
  double bound = 0;  // d * l * log2(n)
  std::vector<DbsStep> steps;

  nlohmann::json to_json() const;
};

/// Vertex v with alpha(N[v]) <= d l log2 n for K_{2,l}-free G in the
/// provider's class. Throws PromiseBreach (with a K_{2,l} or P_t witness when
/// one exists) if the final bound check fails or the provider returns a path.
DbsResult dbs_low_alpha_vertex(const Graph& g, std::size_t l, std::size_t d, const SeparatorProvider& provider);

}  // namespace tia
