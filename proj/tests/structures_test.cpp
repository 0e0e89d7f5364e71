#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rankdual/duality.hpp"
#include "rankdual/structures.hpp"
#include "rankdual/verify.hpp"

using namespace rankdual;

namespace {

Subset labels(const GroundSet& g, const std::string& letters) {
  std::vector<std::string> v;
  for (char c : letters) v.emplace_back(1, c);
  return g.subset_of(v);
}

}  // namespace

TEST(BranchingGreedoid, RootedTreeRanks) {
  const RankTable r = branching_greedoid(sample_rooted_tree());
  EXPECT_EQ(oracle::ranks(r), (std::vector<Rank>{0, 1, 0, 2, 1, 2, 1, 3}));
  EXPECT_EQ(r[labels(r.ground(), "bc")], 1);
}

TEST(BranchingGreedoid, SmallGraphs) {
  const RankTable single = branching_greedoid(RootedGraph({"r", "x"}, "r", {{"e", "r", "x"}}));
  EXPECT_EQ(oracle::ranks(single), (std::vector<Rank>{0, 1}));

  const RootedGraph star({"r", "x", "y", "z"}, "r", {{"a", "r", "x"}, {"b", "r", "y"}, {"c", "r", "z"}});
  const RankTable s = branching_greedoid(star);
  for (std::size_t m = 0; m < s.ground().subset_count(); ++m) {
    const Subset a(static_cast<Mask>(m));
    EXPECT_EQ(s[a], static_cast<Rank>(a.size()));
  }
  EXPECT_TRUE(root_adjacency_test(star));
  const RankTable d = dual(s);
  EXPECT_TRUE(std::all_of(d.values().begin(), d.values().end(), [](Rank v) { return v >= 0; }));
}

TEST(BranchingGreedoid, RootAdjacency) {
  const RootedGraph tree = sample_rooted_tree();
  EXPECT_FALSE(root_adjacency_test(tree));
  EXPECT_EQ(dual(branching_greedoid(tree))[Subset(0b001)], -1);
  const RootedGraph triangle({"root", "u", "v"}, "root",
                             {{"a", "root", "u"}, {"b", "root", "v"}, {"c", "u", "v"}});
  EXPECT_TRUE(root_adjacency_test(triangle));
}

TEST(RootedGraph, RejectsMalformedInput) {
  EXPECT_THROW(RootedGraph({"r", "x"}, "q", {{"e", "r", "x"}}), InputError);
  EXPECT_THROW(RootedGraph({"r", "x"}, "r", {{"e", "r", "r"}}), InputError);
  EXPECT_THROW(RootedGraph({"r", "x"}, "r", {{"e", "r", "x"}, {"f", "x", "r"}}), InputError);
  EXPECT_THROW(RootedGraph({"r", "x"}, "r", {{"e", "r", "y"}}), InputError);
  EXPECT_THROW(RootedGraph({"r", "x", "y"}, "r", {{"e", "r", "x"}}), InputError);
  EXPECT_THROW(RootedGraph({"r", "x"}, "r", {{"e", "r", "x"}, {"e", "x", "r"}}), InputError);
  EXPECT_THROW(RootedGraph({"r", "r"}, "r", {}), InputError);
}

TEST(Tree, Invariants) {
  EXPECT_THROW(Tree({"a", "b", "c"}, {{"e", "a", "b"}}), InputError);
  EXPECT_THROW(Tree({"a", "b", "c", "d"}, {{"e", "a", "b"}, {"f", "b", "a"}, {"g", "c", "d"}}), InputError);
  EXPECT_THROW(Tree({}, {}), InputError);
  const Tree single({"u", "v"}, {{"e", "u", "v"}});
  EXPECT_EQ(oracle::ranks(pruning_antimatroid(single)), (std::vector<Rank>{0, 1}));
}

TEST(PruningAntimatroid, BundledTreeWorkedValues) {
  const Tree tree = bundled_pruning_tree();
  const RankTable r = pruning_antimatroid(tree);
  const GroundSet& s = r.ground();
  ASSERT_EQ(s.size(), 10u);
  EXPECT_EQ(r[labels(s, "adef")], 4);
  EXPECT_TRUE(tree.is_subtree(labels(s, "bcghij")));
  EXPECT_EQ(dual(r)[labels(s, "bcghij")], 0);
  EXPECT_EQ(r[labels(s, "beh")], 2);
  EXPECT_EQ(r[labels(s, "eh")], 2);
  EXPECT_EQ(r[labels(s, "bceghij")], 4);
  EXPECT_EQ(r[labels(s, "ehij")], 4);
  EXPECT_EQ(dual(r)[labels(s, "adf")], -3);
  EXPECT_EQ(r.rank_of_ground(), 10);
}

TEST(ConvexClosure, BundledTree) {
  const RankTable r = pruning_antimatroid(bundled_pruning_tree());
  const GroundSet& s = r.ground();
  const ConvexClosure closure(r);
  EXPECT_EQ(closure.closure(labels(s, "beh")), labels(s, "bcdeh"));
  EXPECT_FALSE(closure.is_convex(labels(s, "beh")));
  EXPECT_EQ(closure.closure(labels(s, "adf")), labels(s, "abcdfg"));
  EXPECT_EQ(convex_closure(r, Subset{}), Subset{});
}

TEST(ConvexClosure, IdempotentOnConvexSets) {
  const Tree tree = bundled_pruning_tree();
  const RankTable r = pruning_antimatroid(tree);
  const ConvexClosure closure(r);
  for (std::size_t m = 0; m < r.ground().subset_count(); ++m) {
    const Subset a(static_cast<Mask>(m));
    EXPECT_EQ(closure.is_convex(a), tree.is_subtree(a));
    const Subset bar = closure.closure(a);
    EXPECT_TRUE(a.is_subset_of(bar));
    EXPECT_EQ(closure.closure(bar), bar);
    if (closure.is_convex(a)) EXPECT_EQ(bar, a);
  }
}

TEST(ConvexClosure, RequiresFullAntimatroid) {
  EXPECT_THROW(ConvexClosure(uniform_matroid({"a", "b"}, 1)), InputError);
  // Antimatroid that is not full: p is a loop.
  EXPECT_THROW(ConvexClosure(oracle::table({"p"}, {0, 0})), InputError);
}

TEST(UniformMatroid, Values) {
  const RankTable u02 = uniform_matroid({"a", "b"}, 0);
  EXPECT_EQ(oracle::ranks(u02), (std::vector<Rank>{0, 0, 0, 0}));
  EXPECT_EQ(uniform_matroid({"a", "b", "c"}, 2).rank_of_ground(), 2);
  EXPECT_THROW(uniform_matroid({"a"}, 2), InputError);
}

TEST(GreedoidMinors, ContractA) {
  const RankTable r = branching_greedoid(sample_rooted_tree());
  const FeasibleFamily f = greedoid_minor_feasible(r, 0, MinorKind::contraction);
  EXPECT_EQ(f.ground().labels(), (std::vector<std::string>{"b", "c"}));
  EXPECT_EQ(f.members(), (std::vector<Subset>{Subset(0b00), Subset(0b01), Subset(0b10), Subset(0b11)}));
  EXPECT_EQ(f.induced_rank(), contract(r, "a"));
}

TEST(GreedoidMinors, ContractBIsRefused) {
  const RankTable r = branching_greedoid(sample_rooted_tree());
  try {
    greedoid_minor_feasible(r, 1, MinorKind::contraction);
    FAIL() << "expected NotAGreedoidError";
  } catch (const NotAGreedoidError& e) {
    EXPECT_NE(std::string(e.what()).find("{a,b}"), std::string::npos) << e.what();
  }
  // The rank-based contraction exists but breaks subcardinality at {a}.
  EXPECT_EQ(contract(r, "b")[Subset(0b01)], 2);
}

TEST(GreedoidMinors, LoopContractionEqualsDeletion) {
  const RankTable g = oracle::table({"p", "q"}, {0, 0, 1, 1});
  EXPECT_EQ(greedoid_minor_feasible(g, 0, MinorKind::contraction),
            greedoid_minor_feasible(g, 0, MinorKind::deletion));
}

TEST(GreedoidMinors, DeletionsStayGreedoids) {
  for (std::size_t n = 1; n <= 3; ++n) {
    enumerate_tables({n, TableConstraint::greedoid}, [](const RankTable& g) {
      for (std::size_t p = 0; p < g.size(); ++p) {
        const RankTable minor = greedoid_minor_feasible(g, p, MinorKind::deletion).induced_rank();
        EXPECT_TRUE(check_greedoid(minor).passed());
        EXPECT_EQ(minor, delete_element(g, p));
      }
    });
  }
}
