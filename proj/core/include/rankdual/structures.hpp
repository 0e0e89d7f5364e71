#pragma once

// Rank tables realized from combinatorial structures, plus antimatroid
// convexity and feasible-set greedoid minors.

#include <string>
#include <vector>

#include "rankdual/axioms.hpp"
#include "rankdual/ground.hpp"

namespace rankdual {

struct LabeledEdge {
  std::string label;
  std::string u;
  std::string v;
};

/// Full tables from structures are materialized only up to this many edges.
inline constexpr std::size_t kMaxStructureEdges = 20;

/// Simple connected graph with a distinguished root vertex. Edge labels
/// form the ground set, in the order given.
class RootedGraph {
 public:
  /// Throws InputError on duplicate names, self-loops, parallel edges,
  /// unknown endpoints, a missing root, or a disconnected graph.
  RootedGraph(std::vector<std::string> vertices, std::string root, std::vector<LabeledEdge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& root() const { return vertices_[root_]; }
  std::size_t root_index() const { return root_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  /// Endpoint vertex indices of edge i.
  std::pair<std::size_t, std::size_t> ends(std::size_t i) const { return ends_[i]; }
  GroundSet edge_ground() const;

 private:
  std::vector<std::string> vertices_;
  std::size_t root_ = 0;
  std::vector<LabeledEdge> edges_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
};

/// Connected acyclic graph; edge labels form the ground set.
class Tree {
 public:
  /// Throws InputError unless the edges form a spanning tree of the vertices.
  Tree(std::vector<std::string> vertices, std::vector<LabeledEdge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  std::pair<std::size_t, std::size_t> ends(std::size_t i) const { return ends_[i]; }
  GroundSet edge_ground() const;

  /// True when the edges in `a` form a connected subgraph; the empty set counts.
  bool is_subtree(Subset a) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<LabeledEdge> edges_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
};

/// r(A) = number of edges in the largest subtree of A containing the root.
RankTable branching_greedoid(const RootedGraph& graph);

/// True iff every non-root vertex shares an edge with the root.
bool root_adjacency_test(const RootedGraph& graph);

/// Feasible sets are the F whose complement S - F is a subtree;
/// r(A) = largest feasible subset of A.
RankTable pruning_antimatroid(const Tree& tree);

/// r(A) = min(|A|, k).
RankTable uniform_matroid(std::vector<std::string> labels, std::size_t k);

/// Convex closure in a full antimatroid. C is convex when S - C is feasible.
class ConvexClosure {
 public:
  /// Throws InputError unless g passes check_antimatroid and r(S) = |S|.
  explicit ConvexClosure(const RankTable& g);

  bool is_convex(Subset c) const;
  /// Intersection of all convex supersets of `a`; throws std::logic_error if
  /// that intersection is not itself convex.
  Subset closure(Subset a) const;

 private:
  RankTable g_;
};

Subset convex_closure(const RankTable& g, Subset a);

enum class MinorKind { deletion, contraction };

/// Thrown when a feasible-set contraction would not be a greedoid.
class NotAGreedoidError : public InputError {
 public:
  using InputError::InputError;
};

/// Feasible family of G - p or G / p from feasible sets: F is feasible in
/// G - p iff F is feasible in G, and in G / p iff F + p is feasible in G.
/// Contracting a greedoid loop yields G - p. Contracting an element that lies
/// in some feasible set while {p} is infeasible throws NotAGreedoidError.
FeasibleFamily greedoid_minor_feasible(const RankTable& g, std::size_t p, MinorKind kind);

// Fixture structures.

/// Root with a two-edge path a, b and a separate edge c.
RootedGraph sample_rooted_tree();

/// Ten-edge tree with edges a..j whose pruning antimatroid reproduces the
/// worked convex-closure values (closure of {b,e,h} is {b,c,d,e,h}, etc.).
Tree bundled_pruning_tree();

}  // namespace rankdual
