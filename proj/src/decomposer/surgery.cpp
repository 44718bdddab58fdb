#include <algorithm>
#include <limits>

#include "internal.hpp"
#include "tia/oracles.hpp"

namespace tia {

namespace {

TreeDecomposition restricted_copy(const TreeDecomposition& td, const VertexSet& keep, const VertexSet& extra) {
  TreeDecomposition out(td.universe());
  for (NodeId t = 0; t < td.node_count(); ++t) out.add_node((td.bag(t) & keep) | extra);
  for (const auto& [a, b] : td.edges()) out.add_edge(a, b);
  return out;
}

VertexSet node_set(std::size_t k, std::initializer_list<NodeId> ids) {
  VertexSet s(k);
  for (NodeId t : ids) s.insert(t);
  return s;
}

// Minimal subtree meeting every given node set, by repeatedly dropping leaves.
VertexSet pruned_cover(const TreeDecomposition& td, const std::vector<VertexSet>& targets) {
  VertexSet keep = td.all_nodes();
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId t : keep) {
      std::size_t deg = 0;
      for (NodeId s : td.adjacent(t)) deg += keep.contains(s);
      if (deg > 1) continue;
      const VertexSet rest = keep.without(t);
      if (rest.empty()) continue;
      if (std::all_of(targets.begin(), targets.end(), [&](const VertexSet& x) { return x.intersects(rest); })) {
        keep = rest;
        changed = true;
        break;
      }
    }
  }
  return keep;
}

}  // namespace

TreeDecomposition case1_transform(const Graph& g, const PairContext& ctx) {
  if (ctx.bad) throw std::invalid_argument("case1_transform: pair is bad");
  const TreeDecomposition& td = *ctx.td;
  TreeDecomposition out = restricted_copy(td, ctx.m, VertexSet(g.order()));
  const VertexSet ends = node_set(td.node_count(), {ctx.tx, ctx.ty});
  for (Vertex u : ctx.u)
    for (NodeId t : steiner_subtree(td, td.nodes_containing(u) | ends)) out.add_to_bag(t, u);
  for (NodeId t : ctx.path_xy) out.add_to_bag(t, ctx.x);

  const VertexSet keep_u = ctx.u - ctx.uxy;
  for (const auto& comp : ctx.components) {
    const NodeId off = out.append(restricted_copy(td, g.closed_neighborhood(comp), g.open_neighborhood(comp) & keep_u));
    out.add_edge(ctx.ty, off + ctx.ty);
  }
  detail::check_transform(g, ctx, out, "case 1");
  return out;
}

Case2Plan plan_case2(const Graph& g, const PairContext& ctx) {
  if (!ctx.bad) throw std::invalid_argument("plan_case2: pair is not bad");
  const TreeDecomposition& td = *ctx.td;
  Case2Plan plan;

  plan.intermediate = restricted_copy(td, ctx.m, ctx.movable);
  for (NodeId t : ctx.path_xy) {
    plan.intermediate.add_to_bag(t, ctx.x);
    for (Vertex u : ctx.uy - ctx.movable) plan.intermediate.add_to_bag(t, u);
  }

  plan.master = plan.intermediate;
  VertexSet added(g.order());
  for (Vertex c : ctx.domain - ctx.m) {
    const VertexSet a = g.neighbors(c) & ctx.m;
    if (find_bag_containing_set(plan.intermediate, a)) continue;
    std::vector<VertexSet> targets;
    for (Vertex v : a) targets.push_back(plan.intermediate.nodes_containing(v));
    for (NodeId t : pruned_cover(plan.intermediate, targets)) plan.master.add_to_bag(t, c);
    added.insert(c);
  }
  plan.m_prime = ctx.m | added;

  const std::vector<std::size_t> from_tx = plan.master.distances(node_set(plan.master.node_count(), {ctx.tx}));
  for (const auto& comp : ctx.components) {
    plan.c_prime.push_back(comp & added);
    const VertexSet need = g.open_neighborhood(comp) - ctx.uxy;
    std::optional<NodeId> best;
    for (NodeId t = 0; t < plan.master.node_count(); ++t)
      if (need.is_subset_of(plan.master.bag(t)) && (!best || from_tx[t] < from_tx[*best])) best = t;
    if (!best) {
      const auto nv = need.to_vector();
      for (std::size_t i = 0; i < nv.size() && !best; ++i)
        for (std::size_t j = i + 1; j < nv.size() && !best; ++j) {
          const VertexSet ta = plan.master.nodes_containing(nv[i]);
          const VertexSet tb = plan.master.nodes_containing(nv[j]);
          if (!ta.intersects(tb)) best = plan.master.bridge(ta, tb).front();
        }
    }
    if (!best) throw std::logic_error("plan_case2: no attachment node for a component");
    const VertexSet& bag = plan.master.bag(*best);
    const VertexSet rest = comp - added;
    const VertexSet touch = g.open_neighborhood(rest) & ctx.m;
    if (!plan.c_prime.back().is_subset_of(bag) || !touch.is_subset_of(bag))
      detail::promise_breach(g, ctx.l, "attachment bag misses part of a component's boundary");
    plan.attach.push_back(*best);
  }

  plan.pieces = components(g, ctx.domain - plan.m_prime);
  for (const auto& d : plan.pieces) {
    const Vertex v = d.front();
    auto it = std::find_if(ctx.components.begin(), ctx.components.end(),
                           [&](const VertexSet& c) { return c.contains(v); });
    if (it == ctx.components.end()) throw std::logic_error("plan_case2: piece outside every component");
    plan.piece_parent.push_back(static_cast<std::size_t>(it - ctx.components.begin()));
  }
  return plan;
}

TreeDecomposition case2_transform(const Graph& g, const PairContext& ctx) {
  Case2Plan plan = plan_case2(g, ctx);
  const TreeDecomposition& td = *ctx.td;
  TreeDecomposition out = std::move(plan.master);
  for (std::size_t j = 0; j < plan.pieces.size(); ++j) {
    const VertexSet& d = plan.pieces[j];
    const NodeId off = out.append(restricted_copy(td, g.closed_neighborhood(d), g.open_neighborhood(d) - ctx.uxy));
    out.add_edge(off + ctx.tx, plan.attach[plan.piece_parent[j]]);
  }
  detail::check_transform(g, ctx, out, "case 2");
  return out;
}

SaturationResult saturate_root(const Graph& g, Vertex r, const TreeDecomposition& td, std::size_t l) {
  const VertexSet domain = g.vertices().without(r);
  if (td.universe() != g.order()) throw std::invalid_argument("saturate_root: universe mismatch");
  auto errs = validate(g, td, domain);
  if (!errs.empty()) throw std::invalid_argument("saturate_root: input is not a decomposition of G - r: " + errs.front());
  for (NodeId t = 0; t < td.node_count(); ++t)
    if (td.bag(t).contains(r)) throw std::invalid_argument("saturate_root: r appears in a bag");
  if (max_bag_alpha(g, td) > 4 * l) throw std::invalid_argument("saturate_root: input has a bag with alpha > 4l");
  if (alpha_at_least(g, g.closed_neighborhood(r), 2 * l))
    throw std::invalid_argument("saturate_root: alpha(N[r]) must be below 2l");

  const auto nr = g.neighbors(r).to_vector();
  const std::size_t cap = nr.size() * (nr.size() - (nr.empty() ? 0 : 1)) / 2;
  // badness depends on G and r only
  std::vector<signed char> bad(g.order() * g.order(), -1);
  auto is_bad = [&](Vertex x, Vertex y) {
    auto& b = bad[x * g.order() + y];
    if (b < 0) b = is_bad_pair(g, r, x, y, l) ? 1 : 0;
    return b == 1;
  };

  SaturationResult res{td, {}};
  for (;;) {
    std::optional<PairChoice> best;
    for (const auto& [x, y] : enumerate_uncobagged_pairs(g, r, res.td)) {
      PairChoice c{x, y, is_bad(x, y), subtree_distance(res.td, x, y)};
      if (!best || (c.bad && !best->bad) || (c.bad == best->bad && c.distance > best->distance)) best = c;
    }
    if (!best) break;
    if (res.iterations.size() >= cap) throw std::logic_error("saturate_root: iteration cap exceeded");
    IterationRecord rec{best->x, best->y, best->bad, best->distance, cobagged_pairs(res.td, g.neighbors(r)).size(), 0, 0};
    const PairContext ctx = build_pair_context(g, r, res.td, best->x, best->y, l);
    TreeDecomposition out = ctx.bad ? case2_transform(g, ctx) : case1_transform(g, ctx);
    res.td = compress(out);
    rec.potential_after = cobagged_pairs(res.td, g.neighbors(r)).size();
    rec.nodes_after = res.td.node_count();
    res.iterations.push_back(rec);
  }
  return res;
}

}  // namespace tia
