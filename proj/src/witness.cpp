#include "tia/witness.hpp"

#include <algorithm>
#include <set>

namespace tia {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::set<Edge> required_edges(const Witness& w) {
  std::set<Edge> req;
  auto add = [&](Vertex a, Vertex b) { req.emplace(std::min(a, b), std::max(a, b)); };
  std::visit(overloaded{
                 [&](const InducedPath& p) {
                   for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) add(p.vertices[i], p.vertices[i + 1]);
                 },
                 [&](const InducedBiclique& b) {
                   for (Vertex l : b.left)
                     for (Vertex r : b.right) add(l, r);
                 },
                 [&](const InducedMatching& m) {
                   for (const auto& [a, b] : m.edges) add(a, b);
                 },
                 [&](const SubdividedStar& s) {
                   for (const auto& [mid, leaf] : s.spokes) {
                     add(s.center, mid);
                     add(mid, leaf);
                   }
                 },
             },
             w);
  return req;
}

}  // namespace

std::string_view witness_kind(const Witness& w) {
  return std::visit(overloaded{
                        [](const InducedPath&) { return std::string_view("path"); },
                        [](const InducedBiclique&) { return std::string_view("biclique"); },
                        [](const InducedMatching&) { return std::string_view("induced-matching"); },
                        [](const SubdividedStar&) { return std::string_view("subdivided-star"); },
                    },
                    w);
}

std::vector<Vertex> witness_vertices(const Witness& w) {
  std::vector<Vertex> out;
  std::visit(overloaded{
                 [&](const InducedPath& p) { out = p.vertices; },
                 [&](const InducedBiclique& b) {
                   out = b.left;
                   out.insert(out.end(), b.right.begin(), b.right.end());
                 },
                 [&](const InducedMatching& m) {
                   for (const auto& [a, b] : m.edges) {
                     out.push_back(a);
                     out.push_back(b);
                   }
                 },
                 [&](const SubdividedStar& s) {
                   out.push_back(s.center);
                   for (const auto& [mid, leaf] : s.spokes) {
                     out.push_back(mid);
                     out.push_back(leaf);
                   }
                 },
             },
             w);
  return out;
}

bool verify_witness(const Graph& g, const Witness& w) {
  const auto verts = witness_vertices(w);
  if (verts.empty()) return false;
  if (const auto* b = std::get_if<InducedBiclique>(&w); b && (b->left.empty() || b->right.empty())) return false;
  std::set<Vertex> distinct(verts.begin(), verts.end());
  if (distinct.size() != verts.size()) return false;
  for (Vertex v : verts)
    if (v >= g.order()) return false;
  const auto req = required_edges(w);
  for (auto a = distinct.begin(); a != distinct.end(); ++a)
    for (auto b = std::next(a); b != distinct.end(); ++b)
      if (g.adjacent(*a, *b) != (req.count({*a, *b}) > 0)) return false;
  return true;
}

Witness map_witness(const Witness& w, const std::vector<Vertex>& to_parent) {
  auto m = [&](Vertex v) { return to_parent.at(v); };
  return std::visit(overloaded{
                        [&](const InducedPath& p) -> Witness {
                          InducedPath out;
                          for (Vertex v : p.vertices) out.vertices.push_back(m(v));
                          return out;
                        },
                        [&](const InducedBiclique& b) -> Witness {
                          InducedBiclique out;
                          for (Vertex v : b.left) out.left.push_back(m(v));
                          for (Vertex v : b.right) out.right.push_back(m(v));
                          return out;
                        },
                        [&](const InducedMatching& im) -> Witness {
                          InducedMatching out;
                          for (const auto& [a, b] : im.edges) out.edges.emplace_back(m(a), m(b));
                          return out;
                        },
                        [&](const SubdividedStar& s) -> Witness {
                          SubdividedStar out;
                          out.center = m(s.center);
                          for (const auto& [mid, leaf] : s.spokes) out.spokes.emplace_back(m(mid), m(leaf));
                          return out;
                        },
                    },
                    w);
}

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["kind"] = witness_kind(w);
  std::visit(overloaded{
                 [&](const InducedPath& p) { j["vertices"] = p.vertices; },
                 [&](const InducedBiclique& b) {
                   j["left"] = b.left;
                   j["right"] = b.right;
                 },
                 [&](const InducedMatching& m) { j["edges"] = m.edges; },
                 [&](const SubdividedStar& s) {
                   j["center"] = s.center;
                   j["spokes"] = s.spokes;
                 },
             },
             w);
  return nlohmann::json::parse(j.dump());
}

Witness witness_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "path") return InducedPath{j.at("vertices").get<std::vector<Vertex>>()};
  if (kind == "biclique")
    return InducedBiclique{j.at("left").get<std::vector<Vertex>>(), j.at("right").get<std::vector<Vertex>>()};
  if (kind == "induced-matching") return InducedMatching{j.at("edges").get<std::vector<Edge>>()};
  if (kind == "subdivided-star")
    return SubdividedStar{j.at("center").get<Vertex>(), j.at("spokes").get<std::vector<Edge>>()};
  throw std::invalid_argument("unknown witness kind '" + kind + "'");
}

}  // namespace tia
