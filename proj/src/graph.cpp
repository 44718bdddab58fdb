#include "tia/graph.hpp"

#include <algorithm>

namespace tia {

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g;
  g.adjacency_.assign(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " has endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (g.adjacency_[u].contains(v))
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    g.adjacency_[u].insert(v);
    g.adjacency_[v].insert(u);
    ++g.edge_count_;
  }
  return g;
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return from_edges(n, e);
}

Graph Graph::edgeless(std::size_t n) { return from_edges(n, {}); }

Graph Graph::path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return from_edges(n, e);
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  return from_edges(n, e);
}

Graph Graph::complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return from_edges(a + b, e);
}

VertexSet Graph::closed_neighborhood(const VertexSet& set) const {
  VertexSet out = set;
  for (Vertex v : set) out |= neighbors(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& local, std::size_t parent_order) const {
  VertexSet out(parent_order);
  for (Vertex v : local) out.insert(to_parent.at(v));
  return out;
}

std::vector<Vertex> InducedSubgraph::lift(const std::vector<Vertex>& local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent.at(v));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph sub;
  sub.to_parent = keep.to_vector();
  std::vector<Vertex> local(g.order(), g.order());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) local[sub.to_parent[i]] = i;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
    for (Vertex w : g.neighbors(sub.to_parent[i]) & keep)
      if (local[w] > i) edges.emplace_back(i, local[w]);
  sub.graph = Graph::from_edges(sub.to_parent.size(), edges);
  return sub;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& subset) {
  std::vector<VertexSet> out;
  VertexSet remaining = subset;
  while (!remaining.empty()) {
    VertexSet comp(g.order());
    VertexSet frontier = VertexSet::singleton(g.order(), remaining.front());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.order());
      for (Vertex v : frontier) next |= g.neighbors(v);
      next &= remaining;
      next -= comp;
      frontier = std::move(next);
    }
    remaining -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_complete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) throw std::invalid_argument("is_complete_between: sets overlap");
  for (Vertex v : a)
    if (!b.is_subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (!s.without(v).is_subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_connected(const Graph& g, const VertexSet& s) { return components(g, s).size() <= 1; }

}  // namespace tia
