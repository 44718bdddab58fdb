#include <numeric>

#include "tia/decomposer.hpp"
#include "tia/degeneracy.hpp"
#include "tia/oracles.hpp"

namespace tia {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Decomposition: return "decomposition";
    case Outcome::Biclique: return "biclique";
    case Outcome::RejectedP5: return "rejected-p5";
  }
  return "?";
}

nlohmann::json DecomposeResult::to_json(bool with_log) const {
  nlohmann::json j;
  j["outcome"] = outcome_name(outcome);
  if (td) {
    j["td"] = td_to_json(*td);
    j["alpha"] = alpha;
  }
  if (witness) j["witness"] = witness_to_json(*witness);
  if (with_log) {
    j["levels"] = nlohmann::json::array();
    for (const auto& lv : log) {
      nlohmann::json it = nlohmann::json::array();
      for (const auto& rec : lv.iterations)
        it.push_back({{"x", rec.x}, {"y", rec.y}, {"bad", rec.bad}, {"distance", rec.distance},
                      {"potential_before", rec.potential_before}, {"potential_after", rec.potential_after},
                      {"nodes_after", rec.nodes_after}});
      j["levels"].push_back({{"r", lv.r}, {"alpha_closed", lv.alpha_closed}, {"degree", lv.degree}, {"iterations", it}});
    }
  }
  return j;
}

namespace {

DecomposeResult from_witness(const Witness& w) {
  DecomposeResult res;
  res.outcome = std::holds_alternative<InducedBiclique>(w) ? Outcome::Biclique : Outcome::RejectedP5;
  res.witness = w;
  return res;
}

struct Level {
  Graph g;
  std::vector<Vertex> to_root;
  Vertex r = 0;
  std::vector<Vertex> child_to_parent;  // G_{i+1} -> G_i
};

}  // namespace

DecomposeResult decompose(const Graph& g, std::size_t l, const DecomposeOptions& opts) {
  if (l < 2) throw std::invalid_argument("decompose: l must be at least 2");
  if (opts.check_p5)
    if (auto p = find_induced_path(g, 5)) return from_witness(*p);
  if (opts.check_biclique)
    if (auto k = find_induced_biclique(g, l)) return from_witness(*k);

  std::vector<Level> levels;
  std::vector<LevelLog> log;
  Graph cur = g;
  std::vector<Vertex> to_root(g.order());
  std::iota(to_root.begin(), to_root.end(), Vertex{0});

  while (cur.order() > 1) {
    LowAlphaReport rep = low_alpha_vertex(cur, l, 2);
    if (rep.witness) return from_witness(map_witness(*rep.witness, to_root));
    const Vertex r = rep.vertex;
    log.push_back(LevelLog{to_root[r], rep.alpha_closed, cur.degree(r), {}});
    InducedSubgraph sub = induced_subgraph(cur, cur.vertices().without(r));
    std::vector<Vertex> next(sub.to_parent.size());
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = to_root[sub.to_parent[i]];
    levels.push_back(Level{std::move(cur), std::move(to_root), r, std::move(sub.to_parent)});
    cur = std::move(sub.graph);
    to_root = std::move(next);
  }

  TreeDecomposition td = TreeDecomposition::single_bag(cur.vertices());
  for (std::size_t i = levels.size(); i-- > 0;) {
    const Level& lv = levels[i];
    const TreeDecomposition lifted = lift(td, lv.child_to_parent, lv.g.order());
    SaturationResult sat;
    try {
      sat = saturate_root(lv.g, lv.r, lifted, l);
    } catch (const PromiseBreach& e) {
      if (!e.witness()) throw;
      return from_witness(map_witness(*e.witness(), lv.to_root));
    }
    for (auto rec : sat.iterations) {
      rec.x = lv.to_root[rec.x];
      rec.y = lv.to_root[rec.y];
      log[i].iterations.push_back(rec);
    }
    auto node = find_bag_containing_set(sat.td, lv.g.neighbors(lv.r));
    if (!node) throw std::logic_error("decompose: N(r) not in a single bag after saturation");
    const NodeId leaf = sat.td.add_node(lv.g.closed_neighborhood(lv.r));
    sat.td.add_edge(*node, leaf);
    td = compress(sat.td);
  }

  auto errs = validate(g, td);
  if (!errs.empty()) throw std::logic_error("decompose: result invalid: " + errs.front());
  DecomposeResult res;
  res.alpha = td_alpha(g, td);
  if (res.alpha > 4 * l) throw std::logic_error("decompose: result has a bag with alpha > 4l");
  res.td = std::move(td);
  res.log = std::move(log);
  return res;
}

TiaApproximation approximate_tia(const Graph& g) {
  if (auto p = find_induced_path(g, 5)) throw PromiseBreach("approximate_tia: graph contains a P5", *p);
  TiaApproximation out;
  if (g.size() == 0) {
    out.l_star = 1;
    if (g.order() == 0) {
      out.td = TreeDecomposition::single_bag(g.vertices());
      return out;
    }
    out.k_star = 1;
    out.td = TreeDecomposition(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      out.td.add_node(VertexSet::singleton(g.order(), v));
      if (v > 0) out.td.add_edge(v - 1, v);
    }
    return out;
  }
  for (std::size_t l = 2; l <= g.order() + 1; ++l) {
    DecomposeResult r = decompose(g, l, DecomposeOptions{false, true});
    if (r.outcome == Outcome::RejectedP5) throw PromiseBreach("approximate_tia: graph contains a P5", r.witness);
    if (r.outcome == Outcome::Decomposition) {
      out.l_star = l;
      out.k_star = r.alpha;
      out.td = std::move(*r.td);
      out.log = std::move(r.log);
      return out;
    }
  }
  throw std::logic_error("approximate_tia: no l produced a decomposition");
}

}  // namespace tia
