#include <limits>

#include "tia/oracles.hpp"

namespace tia {
namespace {

// Upper bound on alpha(G[P]): number of cliques in a greedy clique cover.
std::size_t clique_cover_bound(const Graph& g, VertexSet rem) {
  std::size_t k = 0;
  while (!rem.empty()) {
    Vertex v = rem.front();
    rem.erase(v);
    VertexSet cand = rem & g.neighbors(v);
    while (!cand.empty()) {
      Vertex w = cand.front();
      rem.erase(w);
      cand &= g.neighbors(w);
    }
    ++k;
  }
  return k;
}

struct BranchAndBound {
  const Graph& g;
  std::size_t best;    // size of the best set seen (or target-1 in decision mode)
  std::size_t target;  // stop once best reaches this
  bool stop = false;

  void run(VertexSet p, std::size_t size) {
    if (stop) return;
    // degree <= 1 vertices are always in some maximum independent set
    for (bool changed = true; changed;) {
      changed = false;
      for (Vertex v : p) {
        if (p.intersection_size(g.neighbors(v)) <= 1) {
          p -= g.neighbors(v);
          p.erase(v);
          ++size;
          changed = true;
          break;
        }
      }
    }
    if (p.empty()) {
      if (size > best) {
        best = size;
        if (best >= target) stop = true;
      }
      return;
    }
    if (size + clique_cover_bound(g, p) <= best) return;

    Vertex pivot = p.front();
    std::size_t pivot_deg = 0;
    for (Vertex v : p) {
      std::size_t d = p.intersection_size(g.neighbors(v));
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    }
    run(p - g.neighbors(pivot) - VertexSet::singleton(g.order(), pivot), size + 1);
    p.erase(pivot);
    run(std::move(p), size);
  }
};

void check_subset(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw std::invalid_argument("vertex set does not belong to this graph");
}

}  // namespace

std::size_t alpha_of_subset(const Graph& g, const VertexSet& s) {
  check_subset(g, s);
  BranchAndBound bb{g, 0, std::numeric_limits<std::size_t>::max()};
  bb.run(s, 0);
  return bb.best;
}

bool alpha_at_least(const Graph& g, const VertexSet& s, std::size_t k) {
  check_subset(g, s);
  if (k == 0) return true;
  if (s.size() < k) return false;
  BranchAndBound bb{g, k - 1, k};
  bb.run(s, 0);
  return bb.best >= k;
}

std::optional<VertexSet> independent_subset(const Graph& g, const VertexSet& s, std::size_t k) {
  if (!alpha_at_least(g, s, k)) return std::nullopt;
  VertexSet chosen(g.order());
  VertexSet avail = s;
  std::size_t need = k;
  for (Vertex v : s) {
    if (need == 0) break;
    if (!avail.contains(v)) continue;
    VertexSet rest = avail - g.neighbors(v);
    rest.erase(v);
    if (alpha_at_least(g, rest, need - 1)) {
      chosen.insert(v);
      avail = std::move(rest);
      --need;
    } else {
      avail.erase(v);
    }
  }
  return chosen;
}

VertexSet max_independent_set(const Graph& g, const VertexSet& s) {
  return *independent_subset(g, s, alpha_of_subset(g, s));
}

}  // namespace tia
