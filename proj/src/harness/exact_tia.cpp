#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "tia/harness.hpp"

namespace tia {

namespace {

using Mask = std::uint32_t;
constexpr std::size_t kHardCap = 20;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

class MaskAlpha {
 public:
  explicit MaskAlpha(const std::vector<Mask>& adj) : adj_(adj), memo_(std::size_t{1} << adj.size(), -1) {}

  int operator()(Mask s) {
    if (s == 0) return 0;
    if (memo_[s] >= 0) return memo_[s];
    const int v = std::countr_zero(s);
    const Mask rest = s & ~(Mask{1} << v);
    // either v is left out, or it is taken and its neighbours dropped
    const int best = std::max((*this)(rest), 1 + (*this)(rest & ~adj_[v]));
    return memo_[s] = static_cast<signed char>(best);
  }

 private:
  const std::vector<Mask>& adj_;
  std::vector<signed char> memo_;
};

}  // namespace

std::size_t oracle_cap() {
  if (const char* env = std::getenv("TIA_ORACLE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("TIA_ORACLE_CAP is not a number: ") + env);
    }
  }
  return 8;
}

std::size_t exact_tia(const Graph& g, std::optional<std::size_t> cap) {
  const std::size_t n = g.order();
  const std::size_t limit = std::min(cap.value_or(oracle_cap()), kHardCap);
  if (n > limit)
    throw OracleCapExceeded("exact_tia: n = " + std::to_string(n) + " exceeds the oracle cap " + std::to_string(limit));
  if (n == 0) return 0;

  const auto adj = adjacency_masks(g);
  MaskAlpha alpha(adj);
  const Mask all = static_cast<Mask>((std::size_t{1} << n) - 1);
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> f(std::size_t{1} << n, kInf);
  f[0] = 0;
  for (Mask s = 0; s < all; ++s) {
    if (f[s] == kInf) continue;
    for (Mask rem = all & ~s; rem; rem &= rem - 1) {
      const int v = std::countr_zero(rem);
      // vertices of S reachable from v inside S + v
      Mask reach = Mask{1} << v, frontier = reach;
      while (frontier) {
        Mask next = 0;
        for (Mask f2 = frontier; f2; f2 &= f2 - 1) next |= adj[std::countr_zero(f2)];
        next &= s & ~reach;
        reach |= next;
        frontier = next;
      }
      Mask nb = 0;
      for (Mask r = reach; r; r &= r - 1) nb |= adj[std::countr_zero(r)];
      const Mask bag = (nb & ~s) | (Mask{1} << v);
      const int val = std::max(f[s], alpha(bag));
      const Mask t = s | (Mask{1} << v);
      f[t] = std::min(f[t], val);
    }
  }
  return static_cast<std::size_t>(f[all]);
}

std::size_t exact_tia_by_completions(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 6) throw OracleCapExceeded("exact_tia_by_completions: n must be at most 6");
  if (n == 0) return 0;
  const auto base = adjacency_masks(g);
  MaskAlpha alpha(base);
  std::vector<std::pair<int, int>> missing;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!(base[u] >> v & 1)) missing.emplace_back(static_cast<int>(u), static_cast<int>(v));

  std::size_t best = n;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << missing.size()); ++pick) {
    std::vector<Edge> edges = g.edges();
    for (std::size_t i = 0; i < missing.size(); ++i)
      if (pick >> i & 1) edges.emplace_back(missing[i].first, missing[i].second);
    const Graph h = Graph::from_edges(n, edges);
    if (!is_chordal(h)) continue;
    // all cliques of H; a non-maximal one never has larger alpha
    const auto hadj = adjacency_masks(h);
    std::size_t worst = 0;
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
      bool clique = true;
      for (Mask r = s; r && clique; r &= r - 1) {
        const int v = std::countr_zero(r);
        clique = (s & ~(Mask{1} << v) & ~hadj[v]) == 0;
      }
      if (clique) worst = std::max(worst, static_cast<std::size_t>(alpha(s)));
    }
    best = std::min(best, worst);
  }
  return best;
}

bool is_chordal(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  VertexSet visited(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v)
      if (!visited.contains(v) && (pick == n || weight[v] > weight[pick])) pick = v;
    // neighbours already visited must form a clique
    if (!is_clique(g, g.neighbors(pick) & visited)) return false;
    visited.insert(pick);
    for (Vertex w : g.neighbors(pick))
      if (!visited.contains(w)) ++weight[w];
  }
  return true;
}

}  // namespace tia
