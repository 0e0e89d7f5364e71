#include "rankdual/structures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace rankdual {

namespace {

struct Resolved {
  std::vector<std::pair<std::size_t, std::size_t>> ends;
};

Resolved resolve_edges(const std::vector<std::string>& vertices, const std::vector<LabeledEdge>& edges,
                       bool forbid_parallel) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) throw InputError("empty vertex name");
    if (!index.emplace(vertices[i], i).second) throw InputError("duplicate vertex '" + vertices[i] + "'");
  }
  if (edges.size() > kMaxStructureEdges) {
    throw InputError(std::to_string(edges.size()) + " edges exceeds the table limit of " +
                     std::to_string(kMaxStructureEdges));
  }
  Resolved out;
  std::set<std::string> labels;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : edges) {
    if (!labels.insert(e.label).second) throw InputError("duplicate edge label '" + e.label + "'");
    auto u = index.find(e.u);
    auto v = index.find(e.v);
    if (u == index.end()) throw InputError("edge '" + e.label + "' has unknown endpoint '" + e.u + "'");
    if (v == index.end()) throw InputError("edge '" + e.label + "' has unknown endpoint '" + e.v + "'");
    if (u->second == v->second) throw InputError("edge '" + e.label + "' is a self-loop");
    auto key = std::minmax(u->second, v->second);
    if (!pairs.insert(key).second && forbid_parallel) {
      throw InputError("edge '" + e.label + "' is parallel to another edge");
    }
    out.ends.emplace_back(u->second, v->second);
  }
  return out;
}

// Vertices reachable from `start` using only edges in `a`.
std::vector<bool> reach(std::size_t vertex_count,
                        const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adjacency,
                        std::size_t start, Mask a) {
  std::vector<bool> seen(vertex_count, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (auto [edge, y] : adjacency[x]) {
      if (((a >> edge) & 1U) && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_of(
    std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& ends) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vertex_count);
  for (std::size_t e = 0; e < ends.size(); ++e) {
    adj[ends[e].first].emplace_back(e, ends[e].second);
    adj[ends[e].second].emplace_back(e, ends[e].first);
  }
  return adj;
}

GroundSet labels_of(const std::vector<LabeledEdge>& edges) {
  std::vector<std::string> labels;
  for (const auto& e : edges) labels.push_back(e.label);
  return GroundSet(std::move(labels));
}

}  // namespace

RootedGraph::RootedGraph(std::vector<std::string> vertices, std::string root, std::vector<LabeledEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  ends_ = resolve_edges(vertices_, edges_, true).ends;
  auto it = std::find(vertices_.begin(), vertices_.end(), root);
  if (it == vertices_.end()) throw InputError("root '" + root + "' is not a vertex");
  root_ = static_cast<std::size_t>(it - vertices_.begin());
  const auto seen = reach(vertices_.size(), adjacency_of(vertices_.size(), ends_), root_,
                          GroundSet::full_mask(edges_.size()));
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!seen[v]) throw InputError("rooted graph is disconnected: '" + vertices_[v] + "' is unreachable");
  }
}

GroundSet RootedGraph::edge_ground() const { return labels_of(edges_); }

Tree::Tree(std::vector<std::string> vertices, std::vector<LabeledEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw InputError("tree needs at least one vertex");
  ends_ = resolve_edges(vertices_, edges_, true).ends;
  if (edges_.size() + 1 != vertices_.size()) {
    throw InputError("tree with " + std::to_string(vertices_.size()) + " vertices needs " +
                     std::to_string(vertices_.size() - 1) + " edges, got " + std::to_string(edges_.size()));
  }
  const auto seen =
      reach(vertices_.size(), adjacency_of(vertices_.size(), ends_), 0, GroundSet::full_mask(edges_.size()));
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw InputError("tree edges are disconnected");
}

GroundSet Tree::edge_ground() const { return labels_of(edges_); }

bool Tree::is_subtree(Subset a) const {
  if (a.empty()) return true;
  // A subgraph of a tree is a forest, so it is connected iff it touches
  // exactly |a| + 1 vertices.
  std::vector<bool> touched(vertices_.size(), false);
  std::size_t count = 0;
  for (std::size_t e : a.elements()) {
    for (std::size_t v : {ends_[e].first, ends_[e].second}) {
      if (!touched[v]) {
        touched[v] = true;
        ++count;
      }
    }
  }
  return count == a.size() + 1;
}

RankTable branching_greedoid(const RootedGraph& graph) {
  const auto adj = adjacency_of(graph.vertices().size(), [&] {
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (std::size_t i = 0; i < graph.edges().size(); ++i) ends.push_back(graph.ends(i));
    return ends;
  }());
  const std::size_t vertex_count = graph.vertices().size();
  return RankTable::from_function(graph.edge_ground(), [&](Subset a) {
    const auto seen = reach(vertex_count, adj, graph.root_index(), a.bits());
    return static_cast<Rank>(std::count(seen.begin(), seen.end(), true)) - 1;
  });
}

bool root_adjacency_test(const RootedGraph& graph) {
  std::vector<bool> adjacent(graph.vertices().size(), false);
  adjacent[graph.root_index()] = true;
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    auto [u, v] = graph.ends(i);
    if (u == graph.root_index()) adjacent[v] = true;
    if (v == graph.root_index()) adjacent[u] = true;
  }
  return std::find(adjacent.begin(), adjacent.end(), false) == adjacent.end();
}

RankTable pruning_antimatroid(const Tree& tree) {
  const GroundSet ground = tree.edge_ground();
  std::vector<Subset> feasible;
  for (std::size_t m = 0; m < ground.subset_count(); ++m) {
    const Subset f(static_cast<Mask>(m));
    if (tree.is_subtree(ground.complement(f))) feasible.push_back(f);
  }
  return FeasibleFamily(ground, std::move(feasible)).induced_rank();
}

RankTable uniform_matroid(std::vector<std::string> labels, std::size_t k) {
  GroundSet ground(std::move(labels));
  if (k > ground.size()) {
    throw InputError("uniform matroid rank " + std::to_string(k) + " exceeds " + std::to_string(ground.size()) +
                     " elements");
  }
  return RankTable::from_function(std::move(ground),
                                  [k](Subset a) { return static_cast<Rank>(std::min(a.size(), k)); });
}

ConvexClosure::ConvexClosure(const RankTable& g) : g_(g) {
  const auto report = check_antimatroid(g_);
  if (!report.passed()) throw InputError("convex closure needs an antimatroid; table fails the antimatroid axioms");
  if (g_.rank_of_ground() != static_cast<Rank>(g_.size())) {
    throw InputError("convex closure needs a full antimatroid (r(S) = |S|)");
  }
}

bool ConvexClosure::is_convex(Subset c) const {
  const Subset rest = g_.ground().complement(c);
  return g_[rest] == static_cast<Rank>(rest.size());
}

Subset ConvexClosure::closure(Subset a) const {
  const Subset full = g_.ground().full();
  if (!g_.ground().owns(a)) throw InputError("subset is not over the ground set");
  // Walk the supersets of a: a | x for every x inside the complement.
  const Mask free = (full - a).bits();
  Subset meet = full;
  for (Mask x = free;; x = (x - 1) & free) {
    const Subset c = a | Subset(x);
    if (is_convex(c)) meet = meet & c;
    if (x == 0) break;
  }
  if (!is_convex(meet)) {
    throw std::logic_error("intersection of convex supersets of " + g_.ground().format(a) + " is not convex");
  }
  return meet;
}

Subset convex_closure(const RankTable& g, Subset a) { return ConvexClosure(g).closure(a); }

FeasibleFamily greedoid_minor_feasible(const RankTable& g, std::size_t p, MinorKind kind) {
  const auto& ground = g.ground();
  if (p >= ground.size()) throw InputError("element index out of range");
  if (!check_greedoid(g).passed()) throw InputError("feasible-set minors need a greedoid");

  const FeasibleFamily family = FeasibleFamily::of(g);
  const Subset pset = Subset::singleton(p);
  const bool is_loop = std::none_of(family.members().begin(), family.members().end(),
                                    [&](Subset f) { return f.contains(p); });
  if (kind == MinorKind::contraction && !is_loop && !family.contains(pset)) {
    for (Subset f : family.members()) {
      if (f.contains(p)) {
        throw NotAGreedoidError("contraction at '" + ground.label(p) + "' is not a greedoid: it lies in feasible set " +
                                ground.format(f) + " but {" + ground.label(p) +
                                "} is infeasible, so the contracted rank of " + ground.format(f - pset) + " is " +
                                std::to_string(f.size()) + " > " + std::to_string(f.size() - 1) + " (subcardinality)");
      }
    }
  }

  const bool contract_through = kind == MinorKind::contraction && !is_loop;
  const auto kept = [&] {
    std::vector<std::size_t> k;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if (i != p) k.push_back(i);
    }
    return k;
  }();
  // Map parent masks avoiding p onto the minor's bit positions.
  auto squeeze = [&](Subset parent) {
    Mask local = 0;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (parent.contains(kept[k])) local |= Mask{1} << k;
    }
    return Subset(local);
  };

  std::vector<Subset> members;
  for (Subset f : family.members()) {
    if (contract_through) {
      if (f.contains(p)) members.push_back(squeeze(f - pset));
    } else if (!f.contains(p)) {
      members.push_back(squeeze(f));
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i : kept) labels.push_back(ground.label(i));
  return FeasibleFamily(GroundSet(std::move(labels)), std::move(members));
}

RootedGraph sample_rooted_tree() {
  return RootedGraph({"root", "v1", "v2", "v3"}, "root",
                     {{"a", "root", "v1"}, {"b", "v1", "v2"}, {"c", "root", "v3"}});
}

Tree bundled_pruning_tree() {
  return Tree({"u1", "u2", "u3", "u4", "u5", "u6", "w1", "w2", "u9", "u10", "u11"},
              {{"a", "u1", "u2"},
               {"b", "u2", "u3"},
               {"c", "u3", "u4"},
               {"d", "u4", "u5"},
               {"e", "u5", "u6"},
               {"f", "w1", "w2"},
               {"g", "u4", "w1"},
               {"h", "u4", "u9"},
               {"i", "u4", "u10"},
               {"j", "u10", "u11"}});
}

}  // namespace rankdual
