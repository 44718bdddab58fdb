#include "tia/oracles.hpp"

namespace tia {
namespace {

// allowed: vertices not dominated by the path minus its last vertex.
bool grow_path(const Graph& g, std::vector<Vertex>& path, const VertexSet& allowed, std::size_t t) {
  if (path.size() == t) return true;
  const Vertex last = path.back();
  VertexSet next_allowed = allowed - g.neighbors(last);
  next_allowed.erase(last);
  for (Vertex w : g.neighbors(last) & allowed) {
    path.push_back(w);
    if (grow_path(g, path, next_allowed, t)) return true;
    path.pop_back();
  }
  return false;
}

struct BicliqueSearch {
  const Graph& g;
  std::size_t b;
  std::vector<Vertex> left;
  std::optional<VertexSet> right;

  // Picks the remaining k left vertices below `upper`, largest first (colex order).
  bool pick(std::size_t k, Vertex upper, const VertexSet& candidates, const VertexSet& common) {
    if (k == 0) {
      right = independent_subset(g, common, b);
      return right.has_value();
    }
    for (Vertex m : candidates) {
      if (m >= upper) break;
      if (m + 1 < k) continue;
      VertexSet narrowed = common & g.neighbors(m);
      if (!alpha_at_least(g, narrowed, b)) continue;
      left.push_back(m);
      VertexSet rest = candidates - g.neighbors(m);
      rest.erase(m);
      if (pick(k - 1, m, rest, narrowed)) return true;
      left.pop_back();
    }
    return false;
  }
};

bool grow_matching(const Graph& g, std::vector<Edge>& edges, const VertexSet& allowed, Vertex min_start, std::size_t d) {
  if (edges.size() == d) return true;
  for (Vertex u : allowed) {
    if (u < min_start) continue;
    for (Vertex v : g.neighbors(u) & allowed) {
      if (v < u) continue;
      edges.emplace_back(u, v);
      VertexSet rest = allowed - g.neighbors(u) - g.neighbors(v);
      rest.erase(u);
      rest.erase(v);
      if (grow_matching(g, edges, rest, u + 1, d)) return true;
      edges.pop_back();
    }
  }
  return false;
}

bool grow_star(const Graph& g, SubdividedStar& star, const VertexSet& mids, const VertexSet& leaves, std::size_t d) {
  if (star.spokes.size() == d) return true;
  for (Vertex m : mids) {
    for (Vertex l : g.neighbors(m) & leaves) {
      star.spokes.emplace_back(m, l);
      VertexSet next_mids = mids - g.neighbors(m) - g.neighbors(l);
      // later middles have larger ids
      for (Vertex v : mids) {
        if (v > m) break;
        next_mids.erase(v);
      }
      VertexSet next_leaves = leaves - g.neighbors(m) - g.neighbors(l);
      next_leaves.erase(l);
      if (grow_star(g, star, next_mids, next_leaves, d)) return true;
      star.spokes.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<InducedPath> find_induced_path(const Graph& g, const VertexSet& within, std::size_t t) {
  if (t == 0) throw std::invalid_argument("find_induced_path: t must be positive");
  for (Vertex s : within) {
    std::vector<Vertex> path{s};
    VertexSet allowed = within;
    allowed.erase(s);
    if (grow_path(g, path, allowed, t)) return InducedPath{path};
  }
  return std::nullopt;
}

std::optional<InducedPath> find_induced_path(const Graph& g, std::size_t t) {
  return find_induced_path(g, g.vertices(), t);
}

std::optional<InducedBiclique> find_induced_complete_bipartite(const Graph& g, const VertexSet& within, std::size_t a,
                                                               std::size_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("biclique sides must be nonempty");
  BicliqueSearch search{g, b, {}, std::nullopt};
  if (!search.pick(a, g.order(), within, within)) return std::nullopt;
  InducedBiclique out;
  out.left.assign(search.left.rbegin(), search.left.rend());
  out.right = search.right->to_vector();
  return out;
}

std::optional<InducedBiclique> find_induced_complete_bipartite(const Graph& g, std::size_t a, std::size_t b) {
  return find_induced_complete_bipartite(g, g.vertices(), a, b);
}

std::size_t induced_biclique_number(const Graph& g) {
  std::size_t l = 0;
  while (find_induced_biclique(g, l + 1)) ++l;
  return l;
}

std::optional<InducedMatching> find_induced_matching(const Graph& g, const VertexSet& within, std::size_t d) {
  std::vector<Edge> edges;
  if (grow_matching(g, edges, within, 0, d)) return InducedMatching{edges};
  return std::nullopt;
}

std::optional<SubdividedStar> find_induced_subdivided_star(const Graph& g, std::size_t d) {
  if (d == 0) throw std::invalid_argument("subdivided star needs at least one spoke");
  for (Vertex c = 0; c < g.order(); ++c) {
    SubdividedStar star;
    star.center = c;
    VertexSet leaves = g.vertices() - g.closed_neighborhood(c);
    if (grow_star(g, star, g.neighbors(c), leaves, d)) return star;
  }
  return std::nullopt;
}

}  // namespace tia
