#include <algorithm>

#include "tia/oracles.hpp"

namespace tia {
namespace {

constexpr Vertex kNone = static_cast<Vertex>(-1);

struct Kuhn {
  const Graph& g;
  const VertexSet& y;
  std::vector<Vertex> mate;  // indexed by vertex id, kNone if unmatched
  std::vector<char> seen;

  bool augment(Vertex x) {
    for (Vertex w : g.neighbors(x) & y) {
      if (seen[w]) continue;
      seen[w] = 1;
      if (mate[w] == kNone || augment(mate[w])) {
        mate[w] = x;
        mate[x] = w;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<Vertex> MatchingResult::partner(Vertex v) const {
  for (const auto& [a, b] : edges) {
    if (a == v) return b;
    if (b == v) return a;
  }
  return std::nullopt;
}

MatchingResult bipartite_max_matching(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.intersects(y)) throw std::invalid_argument("bipartite_max_matching: sides overlap");
  if (!is_independent(g, x) || !is_independent(g, y))
    throw std::invalid_argument("bipartite_max_matching: sides must be independent");

  Kuhn k{g, y, std::vector<Vertex>(g.order(), kNone), {}};
  for (Vertex v : x) {
    k.seen.assign(g.order(), 0);
    k.augment(v);
  }

  // König: Z = vertices reachable from unmatched X-vertices by alternating paths.
  VertexSet z(g.order());
  std::vector<Vertex> stack;
  for (Vertex v : x)
    if (k.mate[v] == kNone) {
      z.insert(v);
      stack.push_back(v);
    }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v) & y) {
      if (z.contains(w) || k.mate[v] == w) continue;
      z.insert(w);
      Vertex back = k.mate[w];
      if (back != kNone && !z.contains(back)) {
        z.insert(back);
        stack.push_back(back);
      }
    }
  }

  MatchingResult out;
  for (Vertex v : x)
    if (k.mate[v] != kNone) out.edges.emplace_back(v, k.mate[v]);
  out.cover = (x - z) | (y & z);
  if (out.cover.size() != out.edges.size()) throw std::logic_error("König cover size differs from matching size");
  return out;
}

}  // namespace tia
