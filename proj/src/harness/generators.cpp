#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "tia/harness.hpp"
#include "tia/oracles.hpp"

namespace tia {

namespace {

using Rng = std::mt19937_64;

class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), bits_(n * n, 0) {}
  bool get(Vertex u, Vertex v) const { return bits_[u * n_ + v]; }
  void set(Vertex u, Vertex v, bool on) { bits_[u * n_ + v] = bits_[v * n_ + u] = on; }
  Graph graph() const {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (get(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n_, edges);
  }
  std::size_t order() const { return n_; }

 private:
  std::size_t n_;
  std::vector<char> bits_;
};

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// small P5-free graph on k vertices used as a substitution frame
Matrix random_frame(Rng& rng, std::size_t k) {
  for (;;) {
    Matrix h(k);
    for (Vertex u = 0; u < k; ++u)
      for (Vertex v = u + 1; v < k; ++v) h.set(u, v, coin(rng, 0.5));
    if (!find_induced_path(h.graph(), 5)) return h;
  }
}

// Substitution keeps P5-freeness since P5 is prime; union and join are the two-part frames.
void compose(Rng& rng, Matrix& m, std::vector<Vertex> ids) {
  if (ids.size() <= 1) return;
  std::shuffle(ids.begin(), ids.end(), rng);
  const std::size_t k = ids.size() >= 5 && coin(rng, 0.25) ? uniform(rng, 3, std::min<std::size_t>(6, ids.size())) : 2;
  std::vector<std::size_t> cuts;
  for (std::size_t i = 1; i < ids.size(); ++i) cuts.push_back(i);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(k - 1);
  cuts.push_back(0);
  cuts.push_back(ids.size());
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::vector<Vertex>> parts;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) parts.emplace_back(ids.begin() + cuts[i], ids.begin() + cuts[i + 1]);

  Matrix frame(k);
  if (k == 2)
    frame.set(0, 1, coin(rng, 0.5));
  else
    frame = random_frame(rng, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (frame.get(i, j))
        for (Vertex a : parts[i])
          for (Vertex b : parts[j]) m.set(a, b, true);
  for (auto& p : parts) compose(rng, m, p);
}

Matrix union_join(Rng& rng, std::size_t n) {
  Matrix m(n);
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  compose(rng, m, ids);
  return m;
}

VertexSet ball(const Graph& g, VertexSet seeds, std::size_t radius) {
  VertexSet frontier = seeds;
  for (std::size_t i = 0; i < radius && !frontier.empty(); ++i) {
    VertexSet next = g.closed_neighborhood(frontier) - seeds;
    seeds |= next;
    frontier = next;
  }
  return seeds;
}

std::size_t pattern_radius(const Pattern& p) {
  switch (p.kind) {
    case Pattern::P5: return 4;
    case Pattern::Path: return p.param > 0 ? p.param - 1 : 0;
    case Pattern::Kll:
    case Pattern::K2l: return 2;
    case Pattern::Sd: return 4;
  }
  return 0;
}

std::optional<Witness> find_pattern_within(const Graph& g, const VertexSet& within, const Pattern& p) {
  switch (p.kind) {
    case Pattern::P5:
      if (auto w = find_induced_path(g, within, 5)) return *w;
      return std::nullopt;
    case Pattern::Path:
      if (auto w = find_induced_path(g, within, p.param)) return *w;
      return std::nullopt;
    case Pattern::Kll:
      if (auto w = find_induced_complete_bipartite(g, within, p.param, p.param)) return *w;
      return std::nullopt;
    case Pattern::K2l:
      if (auto w = find_induced_complete_bipartite(g, within, 2, p.param)) return *w;
      return std::nullopt;
    case Pattern::Sd: {
      const InducedSubgraph sub = induced_subgraph(g, within);
      if (auto w = find_induced_subdivided_star(sub.graph, p.param)) return map_witness(*w, sub.to_parent);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// a new copy after flipping uv contains u and v, and patterns are connected
bool flip_keeps_class(const Graph& g, Vertex u, Vertex v, const std::vector<Pattern>& forbidden) {
  for (const auto& p : forbidden) {
    const VertexSet near = ball(g, VertexSet::singleton(g.order(), u), pattern_radius(p));
    if (near.contains(v) && find_pattern_within(g, near, p)) return false;
  }
  return true;
}

bool vertex_keeps_class(const Graph& g, Vertex v, const std::vector<Pattern>& forbidden) {
  for (const auto& p : forbidden)
    if (find_pattern_within(g, ball(g, VertexSet::singleton(g.order(), v), pattern_radius(p)), p)) return false;
  return true;
}

// Adds vertices in id order; each tries a few neighbourhoods (twins, part of a
// neighbourhood, random) and stays isolated if none keeps the class.
void grow(Rng& rng, Matrix& m, const std::vector<Pattern>& forbidden, double density) {
  const std::size_t n = m.order();
  for (Vertex v = 1; v < n; ++v) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      const Vertex x = uniform(rng, 0, v - 1);
      const std::size_t kind = uniform(rng, 0, 3);
      std::vector<Vertex> nb;
      for (Vertex w = 0; w < v; ++w) {
        bool on = false;
        switch (kind) {
          case 0: on = w == x || m.get(x, w); break;
          case 1: on = m.get(x, w); break;
          case 2: on = (w == x || m.get(x, w)) && coin(rng, 0.7); break;
          default: on = coin(rng, density); break;
        }
        if (on) nb.push_back(w);
      }
      for (Vertex w : nb) m.set(v, w, true);
      if (vertex_keeps_class(m.graph(), v, forbidden)) break;
      for (Vertex w : nb) m.set(v, w, false);
    }
  }
}

void require_verified(const Graph& g, const Witness& w) {
  if (!verify_witness(g, w)) throw std::logic_error("certifier produced an unverifiable witness");
}

}  // namespace

GenMethod gen_method_from_name(const std::string& name) {
  if (name == "union-join") return GenMethod::UnionJoin;
  if (name == "perturb-filter") return GenMethod::PerturbFilter;
  throw std::invalid_argument("unknown generator method '" + name + "'");
}

std::string gen_method_name(GenMethod m) { return m == GenMethod::UnionJoin ? "union-join" : "perturb-filter"; }

Graph gen_p5_free(std::size_t n, std::uint64_t seed, GenMethod method) {
  Rng rng(seed);
  Matrix m = union_join(rng, n);
  Graph g = m.graph();
  if (method == GenMethod::PerturbFilter && n >= 2) {
    const std::vector<Pattern> p5{Pattern{Pattern::P5, 5}};
    const std::size_t budget = 8 * n, want = std::max<std::size_t>(1, n / 8);
    std::size_t kept = 0;
    for (std::size_t i = 0; i < budget && kept < want; ++i) {
      const Vertex u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
      if (u == v) continue;
      m.set(u, v, !m.get(u, v));
      Graph h = m.graph();
      if (flip_keeps_class(h, u, v, p5)) {
        g = std::move(h);
        ++kept;
      } else {
        m.set(u, v, !m.get(u, v));
      }
    }
    if (kept == 0) throw GeneratorExhausted("gen_p5_free: no perturbation survived the P5 filter");
  }
  if (auto w = find_induced_path(g, 5)) {
    require_verified(g, *w);
    throw std::logic_error("gen_p5_free: generated graph contains a P5");
  }
  return g;
}

std::string Pattern::name() const {
  switch (kind) {
    case P5: return "p5";
    case Path: return "path:" + std::to_string(param);
    case Kll: return "kll:" + std::to_string(param);
    case K2l: return "k2l:" + std::to_string(param);
    case Sd: return "sd:" + std::to_string(param);
  }
  return "?";
}

Pattern parse_pattern(const std::string& text) {
  if (text == "p5") return Pattern{Pattern::P5, 5};
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("unknown pattern '" + text + "'");
  const std::string kind = text.substr(0, colon);
  std::size_t param = 0;
  try {
    std::size_t used = 0;
    param = std::stoul(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad pattern parameter in '" + text + "'");
  }
  if (param == 0) throw std::invalid_argument("pattern parameter must be positive in '" + text + "'");
  if (kind == "path") return Pattern{Pattern::Path, param};
  if (kind == "kll") return Pattern{Pattern::Kll, param};
  if (kind == "k2l") return Pattern{Pattern::K2l, param};
  if (kind == "sd") return Pattern{Pattern::Sd, param};
  throw std::invalid_argument("unknown pattern '" + text + "'");
}

std::vector<Pattern> parse_patterns(const std::string& comma_separated) {
  std::vector<Pattern> out;
  std::stringstream ss(comma_separated);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_pattern(item));
  return out;
}

std::optional<Witness> find_pattern(const Graph& g, const Pattern& p) {
  return find_pattern_within(g, g.vertices(), p);
}

std::optional<Witness> first_forbidden(const Graph& g, const std::vector<Pattern>& forbidden) {
  for (const auto& p : forbidden)
    if (auto w = find_pattern(g, p)) return w;
  return std::nullopt;
}

Graph gen_class_free(std::size_t n, std::uint64_t seed, const std::vector<Pattern>& forbidden, std::size_t budget,
                     const Graph* start) {
  if (start) {
    if (auto w = first_forbidden(*start, forbidden)) {
      require_verified(*start, *w);
      throw std::invalid_argument("gen_class_free: the start graph contains a forbidden pattern");
    }
    n = start->order();
  }
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Matrix m(n);
    if (start)
      for (const auto& [u, v] : start->edges()) m.set(u, v, true);
    const double density = std::uniform_real_distribution<double>(0.15, 0.65)(rng);
    if (!start) grow(rng, m, forbidden, density);
    Graph g = m.graph();
    for (std::size_t i = 0; n >= 2 && i < 2 * n; ++i) {
      const Vertex u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
      const bool want = coin(rng, density);
      if (u == v || m.get(u, v) == want) continue;
      m.set(u, v, want);
      Graph h = m.graph();
      if (flip_keeps_class(h, u, v, forbidden))
        g = std::move(h);
      else
        m.set(u, v, !want);
    }
    if (n >= 2 && g.size() == 0) continue;
    if (auto w = first_forbidden(g, forbidden)) {
      require_verified(g, *w);
      continue;
    }
    return g;
  }
  throw GeneratorExhausted("gen_class_free: budget of " + std::to_string(budget) + " candidates exhausted");
}

}  // namespace tia
