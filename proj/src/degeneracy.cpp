#include "tia/degeneracy.hpp"

#include <algorithm>
#include <limits>

namespace tia {
namespace {

void require_bipartite(const Graph& g, const VertexSet& a, const VertexSet& b, const char* who) {
  if (a.intersects(b)) throw std::invalid_argument(std::string(who) + ": sides overlap");
  if (!is_independent(g, a) || !is_independent(g, b))
    throw std::invalid_argument(std::string(who) + ": sides must be independent");
}

VertexSet private_nbhd(const Graph& g, Vertex v, const std::vector<Vertex>& others, const VertexSet& y) {
  VertexSet p = g.neighbors(v) & y;
  for (Vertex a : others)
    if (a != v) p -= g.neighbors(a);
  return p;
}

std::vector<Vertex> with_vertex(std::vector<Vertex> z, Vertex x) {
  z.push_back(x);
  return z;
}

}  // namespace

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) throw std::overflow_error("ipow overflow");
    out *= base;
  }
  return out;
}

std::size_t binomial2(std::size_t d) { return d * (d - (d > 0 ? 1 : 0)) / 2; }

NokllResult nokll_filter(const Graph& g, const VertexSet& a, const VertexSet& b, std::size_t p, std::size_t l) {
  require_bipartite(g, a, b, "nokll_filter");
  if (b.size() < p * l)
    throw std::invalid_argument("nokll_filter: |B| = " + std::to_string(b.size()) + " < p*l = " + std::to_string(p * l));
  std::vector<Vertex> few;
  for (Vertex v : a)
    if (b.size() - b.intersection_size(g.neighbors(v)) < p) few.push_back(v);
  if (few.size() < l) return few;

  InducedBiclique k;
  VertexSet common = b;
  for (std::size_t i = 0; i < l; ++i) {
    k.left.push_back(few[i]);
    common &= g.neighbors(few[i]);
  }
  for (Vertex w : common) {
    if (k.right.size() == l) break;
    k.right.push_back(w);
  }
  if (k.right.size() < l) throw std::logic_error("nokll_filter: common neighbourhood smaller than the counting bound");
  return k;
}

VertexSet private_neighborhood(const Graph& g, Vertex v, const std::vector<Vertex>& a, const VertexSet& y) {
  return private_nbhd(g, v, a, y);
}

BigdegreeResult bigdegree_extract(const Graph& g, const VertexSet& x, const VertexSet& y, std::size_t d, std::size_t l) {
  if (d < 2 || l < 2) throw std::invalid_argument("bigdegree_extract: needs d >= 2 and l >= 2");
  require_bipartite(g, x, y, "bigdegree_extract");
  const std::size_t min_deg = ipow(l, d - 1);
  for (Vertex v : x)
    if (y.intersection_size(g.neighbors(v)) < min_deg)
      throw std::invalid_argument("bigdegree_extract: vertex " + std::to_string(v) + " has degree below l^(d-1)");

  const std::size_t bound = binomial2(d) * (l - 1);
  if (x.size() <= bound) return BigdegreeBound{x.size(), bound};

  std::vector<Vertex> z;
  VertexSet cand = x;  // X_{j-1}
  for (std::size_t j = 1; j + 1 <= d; ++j) {
    Vertex zj = cand.front();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v : cand) {
      std::size_t s = private_nbhd(g, v, with_vertex(z, v), y).size();
      if (s < best) {
        best = s;
        zj = v;
      }
    }
    z.push_back(zj);

    const std::size_t p = ipow(l, d - 1 - j);
    VertexSet next = cand;
    for (Vertex zz : z) {
      auto r = nokll_filter(g, cand, private_nbhd(g, zz, z, y), p, l);
      if (auto* k = std::get_if<InducedBiclique>(&r)) return *k;
      for (Vertex v : std::get<std::vector<Vertex>>(r)) next.erase(v);
    }
    cand = std::move(next);

    // invariants (1) and (3)
    const std::size_t need2 = (d * (d - 1) - j * (j + 1)) * (l - 1);
    if (2 * cand.size() <= need2) throw std::logic_error("bigdegree_extract: candidate set shrank below its bound");
    for (Vertex v : cand) {
      auto zx = with_vertex(z, v);
      for (Vertex zz : zx)
        if (private_nbhd(g, zz, zx, y).size() < p)
          throw std::logic_error("bigdegree_extract: private neighbourhood of " + std::to_string(zz) + " too small");
    }
  }

  const Vertex last = cand.front();
  auto zx = with_vertex(z, last);
  InducedMatching out;
  for (Vertex zz : zx) out.edges.emplace_back(zz, private_nbhd(g, zz, zx, y).front());
  return out;
}

InducedMatching smalldegree_extract(const Graph& g, const VertexSet& x, const VertexSet& y,
                                    const MatchingResult& matching, std::size_t q, std::size_t d) {
  if (d == 0) throw std::invalid_argument("smalldegree_extract: d must be positive");
  require_bipartite(g, x, y, "smalldegree_extract");
  std::vector<Vertex> mate(g.order(), g.order());
  for (const auto& [a, b] : matching.edges) {
    if (!g.adjacent(a, b)) throw std::invalid_argument("smalldegree_extract: matching uses a non-edge");
    mate[a] = b;
    mate[b] = a;
  }
  for (Vertex v : x) {
    if (mate[v] == g.order() || !y.contains(mate[v]))
      throw std::invalid_argument("smalldegree_extract: matching does not cover vertex " + std::to_string(v));
    if (y.intersection_size(g.neighbors(v)) > q)
      throw std::invalid_argument("smalldegree_extract: vertex " + std::to_string(v) + " has degree above q");
  }
  if (x.size() <= 2 * (d - 1) * q) throw std::invalid_argument("smalldegree_extract: |X| <= 2(d-1)q");

  InducedMatching out;
  VertexSet cx = x;
  for (std::size_t left = d; left > 0; --left) {
    if (cx.empty()) throw std::logic_error("smalldegree_extract: ran out of vertices");
    VertexSet cy(g.order());
    for (Vertex v : cx) cy.insert(mate[v]);
    if (left == 1) {
      out.edges.emplace_back(cx.front(), mate[cx.front()]);
      break;
    }
    Vertex yy = cy.front();
    bool found = false;
    for (Vertex w : cy)
      if (cx.intersection_size(g.neighbors(w)) <= q) {
        yy = w;
        found = true;
        break;
      }
    if (!found) throw std::logic_error("smalldegree_extract: no low-degree matched vertex");
    const Vertex xx = mate[yy];
    out.edges.emplace_back(xx, yy);
    VertexSet nx = cx - g.neighbors(yy);
    for (Vertex w : g.neighbors(xx) & cy) nx.erase(mate[w]);
    cx = std::move(nx);
  }
  return out;
}

nlohmann::json LowAlphaReport::to_json() const {
  nlohmann::json j;
  j["vertex"] = vertex;
  j["alpha_closed"] = alpha_closed;
  j["bound"] = bound;
  j["witness"] = witness ? witness_to_json(*witness) : nlohmann::json(nullptr);
  return j;
}

std::size_t low_alpha_bound(std::size_t l, std::size_t d) {
  if (d == 2) return 2 * l;
  return d * d * l + 2 * d * ipow(l, d - 1);
}

LowAlphaReport low_alpha_vertex(const Graph& g, std::size_t l, std::size_t d) {
  if (l < 2) throw std::invalid_argument("low_alpha_vertex: l must be at least 2");
  if (d < 2) throw std::invalid_argument("low_alpha_vertex: d must be at least 2");
  if (g.null()) throw std::invalid_argument("low_alpha_vertex: null graph");

  LowAlphaReport rep;
  const VertexSet mis = max_independent_set(g);
  rep.vertex = mis.front();
  rep.bound = low_alpha_bound(l, d);
  const Vertex v = rep.vertex;
  const VertexSet closed = g.closed_neighborhood(v);
  rep.alpha_closed = alpha_of_subset(g, closed);
  if (rep.alpha_closed < rep.bound) return rep;

  const VertexSet j = max_independent_set(g, closed);
  const VertexSet iprime = mis.without(v);
  const MatchingResult m = bipartite_max_matching(g, j, iprime);
  if (m.edges.size() + 1 < j.size()) throw std::logic_error("low_alpha_vertex: matching smaller than |J|-1");
  VertexSet jprime(g.order());
  std::vector<Vertex> mate(g.order(), g.order());
  for (const auto& [a, b] : m.edges) {
    jprime.insert(a);
    mate[a] = b;
  }
  auto hdeg = [&](Vertex u) { return iprime.intersection_size(g.neighbors(u)); };

  if (d == 2) {
    std::vector<Vertex> order = jprime.to_vector();
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return hdeg(a) < hdeg(b); });
    if (order.size() >= 2 * l - 1) {
      InducedBiclique k;
      for (std::size_t i = l - 1; i < 2 * l - 1; ++i) k.left.push_back(order[i]);
      for (std::size_t i = 0; i < l; ++i) k.right.push_back(mate[order[i]]);
      if (verify_witness(g, k)) {
        rep.witness = k;
        return rep;
      }
    }
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      const VertexSet na = g.neighbors(order[i]) & iprime;
      const VertexSet nb = g.neighbors(order[i + 1]) & iprime;
      if (na.is_subset_of(nb)) continue;
      InducedPath p{{(na - nb).front(), order[i], v, order[i + 1], (nb - na).front()}};
      if (!verify_witness(g, p)) throw std::logic_error("low_alpha_vertex: extracted path does not verify");
      rep.witness = p;
      return rep;
    }
    throw std::logic_error("low_alpha_vertex: neighbourhoods nested but no biclique found");
  }

  const std::size_t big = ipow(l, d - 1);
  VertexSet j1(g.order());
  for (Vertex u : jprime)
    if (hdeg(u) >= big) j1.insert(u);
  const VertexSet j2 = jprime - j1;

  std::optional<InducedMatching> dk2;
  if (j1.size() > binomial2(d) * (l - 1)) {
    auto r = bigdegree_extract(g, j1, iprime, d, l);
    if (auto* k = std::get_if<InducedBiclique>(&r)) {
      rep.witness = *k;
    } else if (auto* im = std::get_if<InducedMatching>(&r)) {
      dk2 = *im;
    }
  } else {
    MatchingResult sub;
    for (const auto& e : m.edges)
      if (j2.contains(e.first)) sub.edges.push_back(e);
    dk2 = smalldegree_extract(g, j2, iprime, sub, big - 1, d);
  }
  if (dk2) {
    SubdividedStar s;
    s.center = v;
    s.spokes = dk2->edges;
    rep.witness = s;
  }
  if (!rep.witness || !verify_witness(g, *rep.witness))
    throw std::logic_error("low_alpha_vertex: extraction did not produce a verified witness");
  return rep;
}

std::vector<std::pair<Vertex, std::size_t>> alpha_degeneracy_order(const Graph& g) {
  std::vector<std::pair<Vertex, std::size_t>> out;
  VertexSet rem = g.vertices();
  while (!rem.empty()) {
    Vertex best_v = rem.front();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v : rem) {
      std::size_t a = alpha_of_subset(g, (g.neighbors(v) & rem).with(v));
      if (a < best) {
        best = a;
        best_v = v;
        if (a == 1) break;
      }
    }
    out.emplace_back(best_v, best);
    rem.erase(best_v);
  }
  return out;
}

std::size_t alpha_degeneracy(const Graph& g) {
  if (g.null()) throw std::invalid_argument("alpha_degeneracy: null graph");
  std::size_t k = 0;
  for (const auto& step : alpha_degeneracy_order(g)) k = std::max(k, step.second);
  return k;
}

}  // namespace tia
