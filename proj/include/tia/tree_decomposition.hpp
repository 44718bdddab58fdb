#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tia/graph.hpp"

namespace tia {

using NodeId = std::size_t;

/// A tree T with a bag per node. Node ids are dense 0..k-1; node sets are
/// VertexSets over the node universe, vertex sets over the graph universe.
class TreeDecomposition {
 public:
  TreeDecomposition() = default;
  explicit TreeDecomposition(std::size_t universe) : universe_(universe) {}

  /// One node holding `bag`.
  static TreeDecomposition single_bag(const VertexSet& bag);

  NodeId add_node(VertexSet bag);
  void add_edge(NodeId a, NodeId b);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t node_count() const noexcept { return bags_.size(); }
  const VertexSet& bag(NodeId t) const { return bags_.at(t); }
  void set_bag(NodeId t, VertexSet bag);
  void add_to_bag(NodeId t, Vertex v) { bags_.at(t).insert(v); }
  const std::vector<NodeId>& adjacent(NodeId t) const { return adj_.at(t); }
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  /// T(v) as a set over node ids.
  VertexSet nodes_containing(Vertex v) const;
  VertexSet all_nodes() const { return VertexSet::full(node_count()); }

  /// Node path a..b in T (both ends included). T must be a tree.
  std::vector<NodeId> path(NodeId a, NodeId b) const;
  /// Hop distance from the nearest node of `sources` to every node.
  std::vector<std::size_t> distances(const VertexSet& sources) const;
  /// Closest pair (a in A, b in B) and the path between them; A, B nonempty.
  std::vector<NodeId> bridge(const VertexSet& a, const VertexSet& b) const;

  /// Appends a copy of `other` (same universe), returning the id offset.
  NodeId append(const TreeDecomposition& other);

  bool is_tree() const;

  bool operator==(const TreeDecomposition& other) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<VertexSet> bags_;
  std::vector<std::vector<NodeId>> adj_;
};

/// Violations of the tree-decomposition conditions for G (or for G[domain]
/// when a domain is given). Empty means valid.
std::vector<std::string> validate(const Graph& g, const TreeDecomposition& td);
std::vector<std::string> validate(const Graph& g, const TreeDecomposition& td, const VertexSet& domain);

/// Largest alpha over all bags. Throws std::invalid_argument on an invalid td.
std::size_t td_alpha(const Graph& g, const TreeDecomposition& td);
/// Same without the validity check.
std::size_t max_bag_alpha(const Graph& g, const TreeDecomposition& td);

/// Unordered pairs {v,w} of S (v < w) sharing a bag, ascending.
std::vector<Edge> cobagged_pairs(const TreeDecomposition& td, const VertexSet& s);

/// Least node whose bag contains S.
std::optional<NodeId> find_bag_containing_set(const TreeDecomposition& td, const VertexSet& s);

/// A node t and vertex v with N[v] ⊆ B_t. T is rooted at its highest node id;
/// v is the vertex whose topmost node is deepest (ties by least id).
std::pair<NodeId, Vertex> closed_neighborhood_bag(const Graph& g, const TreeDecomposition& td);

/// Every bag intersected with S (same tree).
TreeDecomposition restrict(const TreeDecomposition& td, const VertexSet& s);

/// Edges on a shortest path between T(u) and T(v); 0 iff they share a bag.
std::size_t subtree_distance(const TreeDecomposition& td, Vertex u, Vertex v);

/// Smallest subtree containing all `terminals` (nonempty node set).
VertexSet steiner_subtree(const TreeDecomposition& td, const VertexSet& terminals);

/// Contracts tree edges whose one bag is a subset of the other until none
/// remain. Keeps validity, never raises bag alpha, never separates a pair.
TreeDecomposition compress(const TreeDecomposition& td);

/// Renames bag members through `to_parent` into a universe of size parent_order.
TreeDecomposition lift(const TreeDecomposition& td, const std::vector<Vertex>& to_parent, std::size_t parent_order);

/// Text format: "td k", then "e i j" per tree edge, "b i v1 v2 ..." per node.
std::string serialize_td(const TreeDecomposition& td);
TreeDecomposition parse_td(std::string_view text, std::size_t universe);
TreeDecomposition read_td_file(const std::string& path, std::size_t universe);
nlohmann::json td_to_json(const TreeDecomposition& td);

}  // namespace tia
