#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tia/vertex_set.hpp"

namespace tia {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range
  /// endpoints with std::invalid_argument.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  static Graph complete(std::size_t n);
  static Graph edgeless(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph complete_bipartite(std::size_t a, std::size_t b);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  bool null() const noexcept { return adjacency_.empty(); }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    return adjacency_[u].contains(v);
  }
  const VertexSet& neighbors(Vertex v) const {
    check(v);
    return adjacency_[v];
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  VertexSet open_neighborhood(Vertex v) const { return neighbors(v); }
  VertexSet closed_neighborhood(Vertex v) const { return neighbors(v).with(v); }
  /// N[X]
  VertexSet closed_neighborhood(const VertexSet& set) const;
  /// N(X) = N[X] minus X
  VertexSet open_neighborhood(const VertexSet& set) const { return closed_neighborhood(set) - set; }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check(Vertex v) const {
    if (v >= adjacency_.size())
      throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                              std::to_string(adjacency_.size()));
  }

  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

/// G[S] relabelled densely; to_parent[i] is the id of vertex i in the parent.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  VertexSet lift(const VertexSet& local, std::size_t parent_order) const;
  std::vector<Vertex> lift(const std::vector<Vertex>& local) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Components of G[S] ordered by minimum id.
std::vector<VertexSet> components(const Graph& g, const VertexSet& subset);

/// A and B must be disjoint; vacuously true when either is empty.
bool is_complete_between(const Graph& g, const VertexSet& a, const VertexSet& b);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g, const VertexSet& s);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list ("n" then "u v" per line, 0-based) or DIMACS ("p edge n m",
/// "e u v", 1-based). Lines starting with 'c' or '#' are comments.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Canonical edge-list text: "n" then sorted "u v" lines.
std::string serialize_graph(const Graph& g);

}  // namespace tia
