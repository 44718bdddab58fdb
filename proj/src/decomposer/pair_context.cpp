#include <algorithm>

#include "internal.hpp"
#include "tia/oracles.hpp"

namespace tia {
namespace detail {

std::optional<Witness> forbidden_witness(const Graph& g, std::size_t l) {
  if (auto p = find_induced_path(g, 5)) return *p;
  if (auto k = find_induced_biclique(g, l)) return *k;
  return std::nullopt;
}

void promise_breach(const Graph& g, std::size_t l, const std::string& what, std::optional<Witness> w) {
  if (w && verify_witness(g, *w)) throw PromiseBreach(what, w);
  if (auto found = forbidden_witness(g, l)) throw PromiseBreach(what, found);
  throw std::logic_error(what + " (and the graph has neither a P5 nor a K_{l,l})");
}

void check_transform(const Graph& g, const PairContext& ctx, const TreeDecomposition& out, const char* which) {
  auto errs = validate(g, out, ctx.domain);
  if (!errs.empty()) promise_breach(g, ctx.l, std::string(which) + " produced an invalid decomposition: " + errs.front());
  if (max_bag_alpha(g, out) > 4 * ctx.l) promise_breach(g, ctx.l, std::string(which) + " produced a bag with alpha > 4l");
  auto before = cobagged_pairs(*ctx.td, ctx.nr);
  auto after = cobagged_pairs(out, ctx.nr);
  if (!std::includes(after.begin(), after.end(), before.begin(), before.end()))
    throw std::logic_error(std::string(which) + " separated a previously co-bagged pair");
  const Edge xy{std::min(ctx.x, ctx.y), std::max(ctx.x, ctx.y)};
  if (!std::binary_search(after.begin(), after.end(), xy))
    throw std::logic_error(std::string(which) + " did not bring x and y together");
}

}  // namespace detail

namespace {

using detail::promise_breach;

InducedPath p5(Vertex a, Vertex b, Vertex c, Vertex d, Vertex e) { return InducedPath{{a, b, c, d, e}}; }

// adjacent c, c2 in C with c ~ w and c2 !~ w
std::optional<std::pair<Vertex, Vertex>> split_edge(const Graph& g, const VertexSet& comp, Vertex w) {
  for (Vertex c : comp & g.neighbors(w)) {
    VertexSet far = (g.neighbors(c) & comp) - g.neighbors(w);
    far.erase(w);
    if (!far.empty()) return std::make_pair(c, far.front());
  }
  return std::nullopt;
}

std::optional<Witness> biclique_from(const Graph& g, const VertexSet& a, const VertexSet& b, std::size_t l) {
  auto left = independent_subset(g, a, l);
  auto right = independent_subset(g, b, l);
  if (!left || !right) return std::nullopt;
  return InducedBiclique{left->to_vector(), right->to_vector()};
}

void check_components(const Graph& g, const PairContext& c) {
  for (const auto& comp : c.components) {
    const VertexSet nc = g.open_neighborhood(comp);
    for (Vertex w : nc - (c.u | c.wxy)) {
      const Vertex cv = (comp & g.neighbors(w)).front();
      if (c.wx.contains(w)) promise_breach(g, c.l, "component touches W_x", p5(cv, w, c.x, c.r, c.y));
      if (c.wy.contains(w)) promise_breach(g, c.l, "component touches W_y", p5(cv, w, c.y, c.r, c.x));
      throw std::logic_error("component neighbour outside U and the W sets");
    }
    for (Vertex w : nc & (c.u0 | c.ux | c.uy)) {
      if (auto e = split_edge(g, comp, w)) {
        const Vertex other = g.adjacent(w, c.y) ? c.x : c.y;
        promise_breach(g, c.l, "component not complete to its neighbour in U",
                       p5(e->second, e->first, w, c.r, other));
      }
    }
    if (!c.bad) continue;
    for (Vertex w : nc & c.wxy)
      if (auto e = split_edge(g, comp, w))
        promise_breach(g, c.l, "component not complete to its neighbour in W_xy", p5(e->second, e->first, w, c.x, c.r));
  }
}

Vertex outside_neighbor(const Graph& g, const PairContext& c, Vertex u) {
  return (outer_neighborhood(g, c.r, u) - c.nx - c.ny).front();
}

void check_bad_pair_structure(const Graph& g, const PairContext& c) {
  const std::size_t l = c.l;
  for (Vertex a : c.wx)
    for (Vertex b : c.wy - g.neighbors(a)) promise_breach(g, l, "W_x not complete to W_y", p5(a, c.x, c.r, c.y, b));
  if (alpha_at_least(g, c.wy, l)) promise_breach(g, l, "both W_x and W_y contain l independent vertices", biclique_from(g, c.wx, c.wy, l));

  for (Vertex a : c.ux)
    for (Vertex b : c.uy - g.neighbors(a)) {
      VertexSet common = (g.neighbors(a) & g.neighbors(b)) - c.m;
      common.erase(c.r);
      if (!common.empty()) promise_breach(g, l, "U_x not complete to U_y", p5(c.x, a, common.front(), b, c.y));
      const Vertex wa = outside_neighbor(g, c, a), wb = outside_neighbor(g, c, b);
      if (!g.adjacent(wa, wb)) promise_breach(g, l, "U_x not complete to U_y", p5(wa, a, c.r, b, wb));
      promise_breach(g, l, "U_x not complete to U_y", p5(c.x, a, wa, wb, b));
    }

  for (Vertex u : c.u0) {
    for (Vertex w : c.wx - g.neighbors(u))
      promise_breach(g, l, "U_0 not complete to W_x", p5(w, c.x, c.r, u, outside_neighbor(g, c, u)));
    for (Vertex w : c.wy - g.neighbors(u))
      promise_breach(g, l, "U_0 not complete to W_y", p5(w, c.y, c.r, u, outside_neighbor(g, c, u)));
  }
  for (Vertex u : c.ux)
    for (Vertex w : c.wy - g.neighbors(u))
      promise_breach(g, l, "U_x not complete to W_y", p5(w, c.y, c.r, u, outside_neighbor(g, c, u)));
  for (Vertex u : c.uy)
    for (Vertex w : c.wx - g.neighbors(u))
      promise_breach(g, l, "U_y not complete to W_x", p5(w, c.x, c.r, u, outside_neighbor(g, c, u)));

  for (Vertex u : c.u0 - c.movable) {
    const VertexSet s = c.nx - outer_neighborhood(g, c.r, u);
    if (!s.is_subset_of(c.ny)) throw std::logic_error("U_0 vertex misses part of W_x");
    for (Vertex a : c.wx)
      for (Vertex b : s - g.neighbors(a)) promise_breach(g, l, "U_0 vertex is not movable", p5(u, a, c.x, b, c.y));
    promise_breach(g, l, "U_0 vertex is not movable", biclique_from(g, c.wx, s, l));
  }

  const VertexSet& bty = c.td->bag(c.ty);
  for (Vertex u : c.uy)
    if (!c.movable.contains(u) && !bty.contains(u))
      throw std::logic_error("U_y vertex " + std::to_string(u) + " neither movable nor in the bag of t_y");
}

}  // namespace

VertexSet outer_neighborhood(const Graph& g, Vertex r, Vertex v) { return g.neighbors(v) - g.closed_neighborhood(r); }

bool is_bad_pair(const Graph& g, Vertex r, Vertex x, Vertex y, std::size_t l) {
  return alpha_at_least(g, outer_neighborhood(g, r, x) - outer_neighborhood(g, r, y), l);
}

std::vector<Edge> enumerate_uncobagged_pairs(const Graph& g, Vertex r, const TreeDecomposition& td) {
  std::vector<Edge> out;
  const auto nr = g.neighbors(r).to_vector();
  std::vector<VertexSet> nodes;
  for (Vertex v : nr) nodes.push_back(td.nodes_containing(v));
  for (std::size_t i = 0; i < nr.size(); ++i)
    for (std::size_t j = 0; j < nr.size(); ++j)
      if (i != j && !nodes[i].intersects(nodes[j])) out.emplace_back(nr[i], nr[j]);
  return out;
}

std::optional<PairChoice> select_pair(const Graph& g, Vertex r, const TreeDecomposition& td, std::size_t l) {
  std::optional<PairChoice> best;
  for (const auto& [x, y] : enumerate_uncobagged_pairs(g, r, td)) {
    PairChoice c{x, y, is_bad_pair(g, r, x, y, l), subtree_distance(td, x, y)};
    if (!best || (c.bad && !best->bad) || (c.bad == best->bad && c.distance > best->distance)) best = c;
  }
  return best;
}

PairContext build_pair_context(const Graph& g, Vertex r, const TreeDecomposition& td, Vertex x, Vertex y,
                               std::size_t l) {
  if (x == y || !g.adjacent(r, x) || !g.adjacent(r, y))
    throw std::invalid_argument("build_pair_context: x and y must be distinct neighbours of r");
  const VertexSet tx = td.nodes_containing(x), ty = td.nodes_containing(y);
  if (tx.empty() || ty.empty() || tx.intersects(ty))
    throw std::invalid_argument("build_pair_context: x and y must lie in disjoint nonempty subtrees");
  if (alpha_at_least(g, g.closed_neighborhood(r), 2 * l))
    throw std::invalid_argument("build_pair_context: alpha(N[r]) must be below 2l");

  PairContext c;
  c.r = r;
  c.x = x;
  c.y = y;
  c.l = l;
  c.td = &td;
  c.domain = g.vertices().without(r);
  c.nr = g.neighbors(r);
  c.nx = outer_neighborhood(g, r, x);
  c.ny = outer_neighborhood(g, r, y);
  c.m = c.nr | c.nx | c.ny;
  c.u = VertexSet(g.order());
  for (Vertex v : c.nr)
    if (!(outer_neighborhood(g, r, v) - c.nx - c.ny).empty()) c.u.insert(v);
  const VertexSet& nx_full = g.neighbors(x);
  const VertexSet& ny_full = g.neighbors(y);
  c.u0 = c.u - nx_full - ny_full;
  c.ux = (c.u & nx_full) - ny_full;
  c.uy = (c.u & ny_full) - nx_full;
  c.uxy = c.u & nx_full & ny_full;
  c.wx = c.nx - c.ny;
  c.wy = c.ny - c.nx;
  c.wxy = c.nx & c.ny;
  c.bad = alpha_at_least(g, c.wx, l);
  c.movable = VertexSet(g.order());
  for (Vertex u : c.u) {
    const VertexSet s = c.nx - outer_neighborhood(g, r, u);
    if (s.is_subset_of(c.ny) && !alpha_at_least(g, s, l)) c.movable.insert(u);
  }
  c.path_xy = td.bridge(tx, ty);
  c.tx = c.path_xy.front();
  c.ty = c.path_xy.back();
  c.components = components(g, c.domain - c.m);

  check_components(g, c);
  if (c.bad) check_bad_pair_structure(g, c);
  return c;
}

nlohmann::json PairContext::to_json() const {
  auto v = [](const VertexSet& s) { return s.to_vector(); };
  nlohmann::json j;
  j["r"] = r;
  j["x"] = x;
  j["y"] = y;
  j["bad"] = bad;
  j["M"] = v(m);
  j["U"] = v(u);
  j["U0"] = v(u0);
  j["Ux"] = v(ux);
  j["Uy"] = v(uy);
  j["Uxy"] = v(uxy);
  j["Wx"] = v(wx);
  j["Wy"] = v(wy);
  j["Wxy"] = v(wxy);
  j["movable"] = v(movable);
  j["t_x"] = tx;
  j["t_y"] = ty;
  j["components"] = nlohmann::json::array();
  for (const auto& comp : components) j["components"].push_back(v(comp));
  return j;
}

}  // namespace tia
