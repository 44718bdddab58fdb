#include "tia/separators.hpp"

#include <cmath>
#include <limits>

#include "tia/oracles.hpp"

namespace tia {
namespace {

std::size_t largest_component(const Graph& g, const VertexSet& s) {
  std::size_t best = 0;
  for (const auto& c : components(g, s)) best = std::max(best, c.size());
  return best;
}

// Largest component, ties by least minimum id (components come ordered by min id).
const VertexSet* pick_largest(const std::vector<VertexSet>& comps) {
  const VertexSet* best = nullptr;
  for (const auto& c : comps)
    if (!best || c.size() > best->size()) best = &c;
  return best;
}

SeparatorCertificate make_certificate(const Graph& g, const VertexSet& domain, const std::vector<Vertex>& path) {
  SeparatorCertificate cert;
  cert.domain = domain;
  cert.path = path;
  cert.x = VertexSet::from_range(g.order(), path);
  cert.dominated = g.closed_neighborhood(cert.x) & domain;
  cert.components = components(g, domain - cert.dominated);
  cert.bound = domain.size() / 2;
  return cert;
}

SeparatorCertificate lift(const SeparatorCertificate& c, const InducedSubgraph& sub, std::size_t parent_order) {
  SeparatorCertificate out;
  out.domain = sub.lift(c.domain, parent_order);
  out.x = sub.lift(c.x, parent_order);
  out.path = sub.lift(c.path);
  out.dominated = sub.lift(c.dominated, parent_order);
  for (const auto& comp : c.components) out.components.push_back(sub.lift(comp, parent_order));
  out.bound = c.bound;
  return out;
}

}  // namespace

std::vector<std::string> SeparatorCertificate::violations(const Graph& g, std::size_t d) const {
  std::vector<std::string> out;
  if (!x.is_subset_of(domain)) out.push_back("X " + x.to_string() + " leaves the domain");
  if (x.size() > d) out.push_back("|X| = " + std::to_string(x.size()) + " exceeds " + std::to_string(d));
  if (dominated != (g.closed_neighborhood(x) & domain)) out.push_back("dominated set is not N[X]");
  if (components != tia::components(g, domain - (g.closed_neighborhood(x) & domain)))
    out.push_back("component list does not match G - N[X]");
  if (bound != domain.size() / 2) out.push_back("bound is not floor(n/2)");
  for (const auto& c : components)
    if (2 * c.size() > domain.size())
      out.push_back("component " + c.to_string() + " has more than n/2 vertices");
  return out;
}

nlohmann::json SeparatorCertificate::to_json() const {
  nlohmann::json j;
  j["x"] = x.to_vector();
  j["path"] = path;
  j["dominated"] = dominated.to_vector();
  j["bound"] = bound;
  j["components"] = nlohmann::json::array();
  for (const auto& c : components) j["components"].push_back(c.to_vector());
  return j;
}

SeparatorOutcome gyarfas_dominated_separator(const Graph& g, std::size_t t) {
  if (t < 2) throw std::invalid_argument("gyarfas_dominated_separator: t must be at least 2");
  if (g.null()) throw std::invalid_argument("gyarfas_dominated_separator: null graph");
  if (!is_connected(g, g.vertices()))
    throw std::invalid_argument("gyarfas_dominated_separator: graph is disconnected");
  const std::size_t n = g.order();
  const VertexSet all = g.vertices();

  std::vector<Vertex> path;
  VertexSet dom(n);  // N[P]
  {
    Vertex best_v = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v : all) {
      std::size_t s = largest_component(g, all - g.closed_neighborhood(v));
      if (s < best) {
        best = s;
        best_v = v;
      }
    }
    path.push_back(best_v);
    dom = g.closed_neighborhood(best_v);
  }

  while (true) {
    auto comps = components(g, all - dom);
    const VertexSet* big = pick_largest(comps);
    if (!big || 2 * big->size() <= n) return make_certificate(g, all, path);

    // next vertex: adjacent to the last one only, and touching the large component
    VertexSet earlier(n);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) earlier |= g.closed_neighborhood(path[i]);
    VertexSet cand = g.neighbors(path.back()) - earlier;
    cand.erase(path.back());
    Vertex best_u = n;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex u : cand) {
      if (!g.neighbors(u).intersects(*big)) continue;
      std::size_t s = largest_component(g, all - dom - g.neighbors(u));
      if (s < best) {
        best = s;
        best_u = u;
      }
    }
    if (best_u == n) throw std::logic_error("gyarfas_dominated_separator: path cannot be extended");
    path.push_back(best_u);
    dom |= g.closed_neighborhood(best_u);
    if (path.size() == t) return InducedPath{path};
  }
}

NamedProvider pt_free_provider(std::size_t t) {
  if (t < 3) throw std::invalid_argument("pt-free provider needs t >= 3");
  return NamedProvider{"pt-free:" + std::to_string(t), t - 1,
                       [t](const Graph& g) { return gyarfas_dominated_separator(g, t); }};
}

NamedProvider provider_by_name(const std::string& name) {
  const std::string prefix = "pt-free:";
  if (name.rfind(prefix, 0) == 0) {
    std::size_t t = 0;
    try {
      t = std::stoul(name.substr(prefix.size()));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad provider name '" + name + "'");
    }
    return pt_free_provider(t);
  }
  throw std::invalid_argument("unknown separator provider '" + name + "'");
}

nlohmann::json DbsResult::to_json() const {
  nlohmann::json j;
  j["vertex"] = vertex;
  j["alpha_closed"] = alpha_closed;
  j["bound"] = bound;
  j["steps"] = nlohmann::json::array();
  for (const auto& s : steps) {
    nlohmann::json js;
    switch (s.kind) {
      case DbsCase::Clique: js["case"] = "clique"; break;
      case DbsCase::HighDegree: js["case"] = "high-degree"; break;
      case DbsCase::Separator: js["case"] = "separator"; break;
      case DbsCase::Singleton: js["case"] = "singleton"; break;
    }
    js["size"] = s.domain.size();
    js["peeled"] = s.peeled;
    if (s.pivot) js["pivot"] = *s.pivot;
    if (s.separator) js["separator"] = s.separator->to_json();
    j["steps"].push_back(js);
  }
  return j;
}

DbsResult dbs_low_alpha_vertex(const Graph& g, std::size_t l, std::size_t d, const SeparatorProvider& provider) {
  if (l < 2) throw std::invalid_argument("dbs_low_alpha_vertex: l must be at least 2");
  if (d < 2) throw std::invalid_argument("dbs_low_alpha_vertex: d must be at least 2");
  if (g.order() < 2) throw std::invalid_argument("dbs_low_alpha_vertex: needs at least two vertices");

  DbsResult res;
  VertexSet s = g.vertices();
  while (true) {
    DbsStep step;
    if (s.size() == 1) {
      step.kind = DbsCase::Singleton;
      step.domain = s;
      res.steps.push_back(step);
      res.vertex = s.front();
      break;
    }
    VertexSet rest = s;
    for (bool peeled = true; peeled;) {
      peeled = false;
      for (Vertex v : rest)
        if (rest.without(v).is_subset_of(g.neighbors(v))) {
          rest.erase(v);
          ++step.peeled;
          peeled = true;
          break;
        }
    }
    step.domain = rest;
    if (rest.size() <= 1) {
      step.kind = DbsCase::Clique;
      res.steps.push_back(step);
      res.vertex = rest.empty() ? s.front() : rest.front();
      break;
    }
    const std::size_t np = rest.size();

    std::optional<Vertex> pivot;
    for (Vertex v : rest)
      if (d * (rest.intersection_size(g.neighbors(v)) + 1) >= np) {
        pivot = v;
        break;
      }

    VertexSet removed(g.order());
    if (pivot) {
      step.kind = DbsCase::HighDegree;
      step.pivot = pivot;
      removed = g.closed_neighborhood(*pivot);
    } else {
      step.kind = DbsCase::Separator;
      auto comps = components(g, rest);
      const VertexSet* big = pick_largest(comps);
      if (2 * big->size() > np) {
        auto sub = induced_subgraph(g, *big);
        auto out = provider(sub.graph);
        if (auto* p = std::get_if<InducedPath>(&out))
          throw PromiseBreach("separator provider found a forbidden induced path", map_witness(*p, sub.to_parent));
        auto cert = lift(std::get<SeparatorCertificate>(out), sub, g.order());
        if (cert.x.size() > d) throw std::logic_error("separator provider returned more than d vertices");
        removed = g.closed_neighborhood(cert.x);
        step.separator = std::move(cert);
      }
    }
    auto comps = components(g, rest - removed);
    const VertexSet* next = pick_largest(comps);
    if (!next) throw std::logic_error("dbs_low_alpha_vertex: nothing left to recurse into");
    res.steps.push_back(std::move(step));
    s = *next;
  }

  res.alpha_closed = alpha_of_subset(g, g.closed_neighborhood(res.vertex));
  res.bound = static_cast<double>(d * l) * std::log2(static_cast<double>(g.order()));
  if (static_cast<double>(res.alpha_closed) > res.bound + 1e-9) {
    std::optional<Witness> w;
    if (auto k = find_induced_complete_bipartite(g, 2, l)) w = *k;
    throw PromiseBreach("alpha(N[" + std::to_string(res.vertex) + "]) = " + std::to_string(res.alpha_closed) +
                            " exceeds d*l*log2(n)",
                        w);
  }
  return res;
}

}  // namespace tia
