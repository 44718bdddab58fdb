#include "tia/tree_decomposition.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

#include "tia/oracles.hpp"

namespace tia {

constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

TreeDecomposition TreeDecomposition::single_bag(const VertexSet& bag) {
  TreeDecomposition td(bag.universe());
  td.add_node(bag);
  return td;
}

NodeId TreeDecomposition::add_node(VertexSet bag) {
  if (bag.universe() != universe_) throw std::invalid_argument("bag universe differs from decomposition universe");
  bags_.push_back(std::move(bag));
  adj_.emplace_back();
  return bags_.size() - 1;
}

void TreeDecomposition::add_edge(NodeId a, NodeId b) {
  if (a >= node_count() || b >= node_count() || a == b) throw std::invalid_argument("bad tree edge");
  if (std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end()) throw std::invalid_argument("duplicate tree edge");
  adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
  adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
}

void TreeDecomposition::set_bag(NodeId t, VertexSet bag) {
  if (bag.universe() != universe_) throw std::invalid_argument("bag universe differs from decomposition universe");
  bags_.at(t) = std::move(bag);
}

std::vector<std::pair<NodeId, NodeId>> TreeDecomposition::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId a = 0; a < node_count(); ++a)
    for (NodeId b : adj_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

VertexSet TreeDecomposition::nodes_containing(Vertex v) const {
  VertexSet out(node_count());
  for (NodeId t = 0; t < node_count(); ++t)
    if (bags_[t].contains(v)) out.insert(t);
  return out;
}

std::vector<std::size_t> TreeDecomposition::distances(const VertexSet& sources) const {
  std::vector<std::size_t> dist(node_count(), kFar);
  std::deque<NodeId> queue;
  for (NodeId s : sources) {
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    NodeId t = queue.front();
    queue.pop_front();
    for (NodeId u : adj_[t])
      if (dist[u] == kFar) {
        dist[u] = dist[t] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

std::vector<NodeId> TreeDecomposition::path(NodeId a, NodeId b) const {
  std::vector<NodeId> parent(node_count(), kFar);
  std::deque<NodeId> queue{b};
  parent[b] = b;
  while (!queue.empty()) {
    NodeId t = queue.front();
    queue.pop_front();
    for (NodeId u : adj_[t])
      if (parent[u] == kFar) {
        parent[u] = t;
        queue.push_back(u);
      }
  }
  if (parent[a] == kFar) throw std::logic_error("tree path: nodes not connected");
  std::vector<NodeId> out{a};
  while (out.back() != b) out.push_back(parent[out.back()]);
  return out;
}

std::vector<NodeId> TreeDecomposition::bridge(const VertexSet& a, const VertexSet& b) const {
  if (a.empty() || b.empty()) throw std::invalid_argument("bridge: empty node set");
  auto dist = distances(a);
  NodeId end = b.front();
  for (NodeId t : b)
    if (dist[t] < dist[end]) end = t;
  if (dist[end] == kFar) throw std::logic_error("bridge: node sets not connected");
  // walk back towards A along decreasing distance, least id first
  std::vector<NodeId> out{end};
  while (dist[out.back()] > 0) {
    NodeId cur = out.back();
    for (NodeId u : adj_[cur])
      if (dist[u] + 1 == dist[cur]) {
        out.push_back(u);
        break;
      }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

NodeId TreeDecomposition::append(const TreeDecomposition& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("append: universes differ");
  const NodeId offset = node_count();
  for (const auto& b : other.bags_) add_node(b);
  for (const auto& [a, b] : other.edges()) add_edge(a + offset, b + offset);
  return offset;
}

bool TreeDecomposition::is_tree() const {
  if (node_count() == 0) return false;
  if (edges().size() + 1 != node_count()) return false;
  auto dist = distances(VertexSet::singleton(node_count(), 0));
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kFar; });
}

std::vector<std::string> validate(const Graph& g, const TreeDecomposition& td, const VertexSet& domain) {
  std::vector<std::string> out;
  if (td.universe() != g.order()) {
    out.push_back("decomposition universe " + std::to_string(td.universe()) + " differs from graph order " +
                  std::to_string(g.order()));
    return out;
  }
  if (!td.is_tree()) out.push_back("underlying graph is not a tree");
  for (NodeId t = 0; t < td.node_count(); ++t)
    if (!td.bag(t).is_subset_of(domain)) out.push_back("node " + std::to_string(t) + " holds vertices outside the graph");
  for (Vertex v : domain) {
    VertexSet tv = td.nodes_containing(v);
    if (tv.empty()) {
      out.push_back("vertex " + std::to_string(v) + " is in no bag");
      continue;
    }
    // connectivity of T(v) inside T
    VertexSet seen = VertexSet::singleton(td.node_count(), tv.front());
    std::vector<NodeId> stack{tv.front()};
    while (!stack.empty()) {
      NodeId t = stack.back();
      stack.pop_back();
      for (NodeId u : td.adjacent(t))
        if (tv.contains(u) && !seen.contains(u)) {
          seen.insert(u);
          stack.push_back(u);
        }
    }
    if (seen != tv) out.push_back("nodes containing vertex " + std::to_string(v) + " are not connected");
  }
  for (const auto& [u, v] : g.edges()) {
    if (!domain.contains(u) || !domain.contains(v)) continue;
    bool covered = false;
    for (NodeId t = 0; t < td.node_count() && !covered; ++t) covered = td.bag(t).contains(u) && td.bag(t).contains(v);
    if (!covered) out.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }
  return out;
}

std::vector<std::string> validate(const Graph& g, const TreeDecomposition& td) {
  return validate(g, td, g.vertices());
}

std::size_t max_bag_alpha(const Graph& g, const TreeDecomposition& td) {
  std::size_t k = 0;
  for (NodeId t = 0; t < td.node_count(); ++t) k = std::max(k, alpha_of_subset(g, td.bag(t)));
  return k;
}

std::size_t td_alpha(const Graph& g, const TreeDecomposition& td) {
  auto errs = validate(g, td);
  if (!errs.empty()) throw std::invalid_argument("td_alpha: invalid decomposition: " + errs.front());
  return max_bag_alpha(g, td);
}

std::vector<Edge> cobagged_pairs(const TreeDecomposition& td, const VertexSet& s) {
  std::vector<Edge> out;
  const auto members = s.to_vector();
  std::vector<VertexSet> nodes;
  for (Vertex v : members) nodes.push_back(td.nodes_containing(v));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (nodes[i].intersects(nodes[j])) out.emplace_back(members[i], members[j]);
  return out;
}

std::optional<NodeId> find_bag_containing_set(const TreeDecomposition& td, const VertexSet& s) {
  for (NodeId t = 0; t < td.node_count(); ++t)
    if (s.is_subset_of(td.bag(t))) return t;
  return std::nullopt;
}

std::pair<NodeId, Vertex> closed_neighborhood_bag(const Graph& g, const TreeDecomposition& td) {
  if (g.null()) throw std::invalid_argument("closed_neighborhood_bag: null graph");
  if (td.node_count() == 0) throw std::invalid_argument("closed_neighborhood_bag: empty decomposition");
  const NodeId root = td.node_count() - 1;
  auto depth = td.distances(VertexSet::singleton(td.node_count(), root));
  std::optional<std::pair<NodeId, Vertex>> best;
  std::size_t best_depth = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet tv = td.nodes_containing(v);
    if (tv.empty()) throw std::invalid_argument("closed_neighborhood_bag: vertex " + std::to_string(v) + " in no bag");
    NodeId top = tv.front();
    for (NodeId t : tv)
      if (depth[t] < depth[top]) top = t;
    if (!best || depth[top] > best_depth) {
      best = {top, v};
      best_depth = depth[top];
    }
  }
  if (!g.closed_neighborhood(best->second).is_subset_of(td.bag(best->first)))
    throw std::invalid_argument("closed_neighborhood_bag: decomposition is invalid");
  return *best;
}

TreeDecomposition restrict(const TreeDecomposition& td, const VertexSet& s) {
  TreeDecomposition out = td;
  for (NodeId t = 0; t < td.node_count(); ++t) out.set_bag(t, td.bag(t) & s);
  return out;
}

std::size_t subtree_distance(const TreeDecomposition& td, Vertex u, Vertex v) {
  VertexSet tu = td.nodes_containing(u);
  VertexSet tv = td.nodes_containing(v);
  if (tu.empty() || tv.empty()) throw std::invalid_argument("subtree_distance: vertex in no bag");
  return td.bridge(tu, tv).size() - 1;
}

VertexSet steiner_subtree(const TreeDecomposition& td, const VertexSet& terminals) {
  if (terminals.empty()) throw std::invalid_argument("steiner_subtree: no terminals");
  VertexSet keep = td.all_nodes();
  for (bool changed = true; changed;) {
    changed = false;
    for (NodeId t : keep) {
      if (terminals.contains(t)) continue;
      std::size_t deg = 0;
      for (NodeId u : td.adjacent(t)) deg += keep.contains(u) ? 1 : 0;
      if (deg <= 1) {
        keep.erase(t);
        changed = true;
      }
    }
  }
  return keep;
}

TreeDecomposition compress(const TreeDecomposition& td) {
  const std::size_t k = td.node_count();
  std::vector<VertexSet> bags;
  std::vector<std::vector<NodeId>> adj(k);
  for (NodeId t = 0; t < k; ++t) bags.push_back(td.bag(t));
  for (const auto& [a, b] : td.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> alive(k, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (NodeId a = 0; a < k && !changed; ++a) {
      if (!alive[a]) continue;
      std::sort(adj[a].begin(), adj[a].end());
      for (NodeId b : adj[a]) {
        if (!bags[a].is_subset_of(bags[b])) continue;
        // merge a into b
        for (NodeId c : adj[a]) {
          if (c == b) continue;
          std::replace(adj[c].begin(), adj[c].end(), a, b);
          adj[b].push_back(c);
        }
        adj[b].erase(std::remove(adj[b].begin(), adj[b].end(), a), adj[b].end());
        adj[a].clear();
        alive[a] = 0;
        changed = true;
        break;
      }
    }
  }
  std::vector<NodeId> rename(k, kFar);
  TreeDecomposition out(td.universe());
  for (NodeId t = 0; t < k; ++t)
    if (alive[t]) rename[t] = out.add_node(bags[t]);
  for (NodeId a = 0; a < k; ++a)
    if (alive[a])
      for (NodeId b : adj[a])
        if (a < b) out.add_edge(rename[a], rename[b]);
  return out;
}

TreeDecomposition lift(const TreeDecomposition& td, const std::vector<Vertex>& to_parent, std::size_t parent_order) {
  TreeDecomposition out(parent_order);
  for (NodeId t = 0; t < td.node_count(); ++t) {
    VertexSet b(parent_order);
    for (Vertex v : td.bag(t)) b.insert(to_parent.at(v));
    out.add_node(std::move(b));
  }
  for (const auto& [a, b] : td.edges()) out.add_edge(a, b);
  return out;
}

std::string serialize_td(const TreeDecomposition& td) {
  std::ostringstream out;
  out << "td " << td.node_count() << "\n";
  for (const auto& [a, b] : td.edges()) out << "e " << a << " " << b << "\n";
  for (NodeId t = 0; t < td.node_count(); ++t) {
    out << "b " << t;
    for (Vertex v : td.bag(t)) out << " " << v;
    out << "\n";
  }
  return out.str();
}

TreeDecomposition parse_td(std::string_view text, std::size_t universe) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> k;
  TreeDecomposition td(universe);
  auto number = [&](const std::string& tok) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(line_no, "expected a non-negative integer, got '" + tok + "'");
    return value;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty() || tok[0][0] == '#' || tok[0] == "c") continue;
    if (!k) {
      if (tok.size() != 2 || tok[0] != "td") throw ParseError(line_no, "expected header 'td k'");
      k = number(tok[1]);
      for (std::size_t i = 0; i < *k; ++i) td.add_node(VertexSet(universe));
      continue;
    }
    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'e i j'");
      std::size_t a = number(tok[1]), b = number(tok[2]);
      if (a >= *k || b >= *k) throw ParseError(line_no, "node id out of range");
      try {
        td.add_edge(a, b);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (tok[0] == "b") {
      if (tok.size() < 2) throw ParseError(line_no, "expected 'b i v1 ...'");
      std::size_t t = number(tok[1]);
      if (t >= *k) throw ParseError(line_no, "node id out of range");
      VertexSet bag(universe);
      for (std::size_t i = 2; i < tok.size(); ++i) {
        std::size_t v = number(tok[i]);
        if (v >= universe) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
        bag.insert(v);
      }
      td.set_bag(t, std::move(bag));
    } else {
      throw ParseError(line_no, "unknown record '" + tok[0] + "'");
    }
  }
  if (!k) throw ParseError(line_no, "missing header");
  if (!td.is_tree()) throw ParseError(line_no, "nodes do not form a tree");
  return td;
}

TreeDecomposition read_td_file(const std::string& path, std::size_t universe) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open decomposition file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_td(buffer.str(), universe);
}

nlohmann::json td_to_json(const TreeDecomposition& td) {
  nlohmann::json j;
  j["nodes"] = td.node_count();
  j["edges"] = td.edges();
  j["bags"] = nlohmann::json::array();
  for (NodeId t = 0; t < td.node_count(); ++t) j["bags"].push_back(td.bag(t).to_vector());
  return j;
}

}  // namespace tia
