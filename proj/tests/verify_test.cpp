#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "rankdual/duality.hpp"
#include "rankdual/verify.hpp"

using namespace rankdual;

namespace {

// Brute-force census: every table with 0 <= r(A) <= |A| and r(empty) = 0,
// filtered with the set-based definitions.
struct OracleCensus {
  std::uint64_t monotone = 0;
  std::uint64_t greedoid = 0;
  std::uint64_t matroid = 0;
};

OracleCensus oracle_census(std::size_t n) {
  OracleCensus out;
  const std::size_t count = std::size_t{1} << n;
  std::vector<Rank> values(count, 0);
  const GroundSet ground = letter_ground(n);
  auto bump = [&]() {
    for (std::size_t m = 1; m < count; ++m) {
      if (values[m] < static_cast<Rank>(std::popcount(m))) {
        ++values[m];
        return true;
      }
      values[m] = 0;
    }
    return false;
  };
  do {
    const RankTable g(ground, values);
    const auto ref = oracle::from_table(g);
    bool monotone = true;
    for (const auto& [a, ra] : ref.rank) {
      for (const auto& p : ref.ground) monotone = monotone && ra <= ref.rank.at(oracle::with(a, p));
    }
    out.monotone += monotone;
    out.greedoid += oracle::is_greedoid(ref);
    out.matroid += oracle::is_matroid(ref);
  } while (bump());
  return out;
}

}  // namespace

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(count_tables({0, TableConstraint::greedoid}), 1u);
  EXPECT_EQ(count_tables({1, TableConstraint::greedoid}), 2u);
  std::vector<std::string> seen;
  enumerate_tables({1, TableConstraint::greedoid}, [&](const RankTable& g) { seen.push_back(describe_table(g)); });
  EXPECT_EQ(seen, (std::vector<std::string>{"a:0,0", "a:0,1"}));
}

TEST(Enumerate, RecordedCensus) {
  const std::vector<std::uint64_t> monotone{1, 2, 9, 209, 134602};
  const std::vector<std::uint64_t> greedoids{1, 2, 7, 64, 3012};
  const std::vector<std::uint64_t> matroids{1, 2, 5, 16, 68};
  const std::vector<std::uint64_t> antimatroids{1, 1, 3, 22, 485};
  for (std::size_t n = 0; n <= 4; ++n) {
    EXPECT_EQ(count_tables({n, TableConstraint::normalized_subcardinal_monotone}), monotone[n]) << n;
    EXPECT_EQ(count_tables({n, TableConstraint::greedoid}), greedoids[n]) << n;
    EXPECT_EQ(count_tables({n, TableConstraint::matroid}), matroids[n]) << n;
    EXPECT_EQ(count_tables({n, TableConstraint::full_antimatroid}), antimatroids[n]) << n;
  }
}

TEST(Enumerate, AgreesWithFilterCensus) {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (auto c : {TableConstraint::normalized_subcardinal_monotone, TableConstraint::greedoid,
                   TableConstraint::matroid, TableConstraint::full_antimatroid}) {
      EXPECT_EQ(count_tables({n, c}), count_tables_by_filter({n, c})) << n << " " << to_string(c);
    }
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto ref = oracle_census(n);
    EXPECT_EQ(count_tables({n, TableConstraint::normalized_subcardinal_monotone}), ref.monotone) << n;
    EXPECT_EQ(count_tables({n, TableConstraint::greedoid}), ref.greedoid) << n;
    EXPECT_EQ(count_tables({n, TableConstraint::matroid}), ref.matroid) << n;
  }
}

TEST(Enumerate, EachTableOnceInOrder) {
  for (auto c : {TableConstraint::greedoid, TableConstraint::full_antimatroid}) {
    std::vector<std::vector<Rank>> tables;
    enumerate_tables({3, c}, [&](const RankTable& g) { tables.push_back(oracle::ranks(g)); });
    EXPECT_TRUE(std::is_sorted(tables.begin(), tables.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }));
    EXPECT_EQ(std::set<std::vector<Rank>>(tables.begin(), tables.end()).size(), tables.size());
  }
}

TEST(Enumerate, Window) {
  EXPECT_EQ(count_tables({2, TableConstraint::window, -1, 1}), 81u);
  EXPECT_EQ(count_tables_by_filter({2, TableConstraint::window, -1, 1}), 81u);
}

TEST(Enumerate, LimitsAndNames) {
  EXPECT_THROW(count_tables({5, TableConstraint::greedoid}), InputError);
  EXPECT_THROW(parse_constraint("lattice"), InputError);
  EXPECT_EQ(parse_constraint("full-antimatroid"), TableConstraint::full_antimatroid);
  EXPECT_EQ(to_string(TableConstraint::normalized_subcardinal_monotone), "all-normalized-subcardinal-monotone");
}

TEST(Census, TreesUpToIsomorphism) {
  // Unlabeled trees with k edges: 1, 1, 1, 2, 3, 6, 11, 23, 47.
  std::vector<std::size_t> by_edges(9, 0);
  for_each_tree(8, [&](const Tree& t) { ++by_edges[t.edges().size()]; });
  EXPECT_EQ(by_edges, (std::vector<std::size_t>{1, 1, 1, 2, 3, 6, 11, 23, 47}));
}

TEST(Census, ConnectedLabeledGraphs) {
  // Connected labeled graphs on 4 vertices: 38 in total.
  std::size_t four = 0;
  std::size_t total = 0;
  for_each_rooted_graph(6, [&](const RootedGraph& g) {
    ++total;
    if (g.vertices().size() == 4) ++four;
  });
  EXPECT_EQ(four, 38u);
  EXPECT_EQ(total, 22359u);
}

TEST(Sampling, Generators) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const RankTable g = random_monotone_subcardinal(rng, 5);
    const auto v = validate(g);
    EXPECT_TRUE(v.normalized && v.monotone.holds && v.subcardinal.holds && v.nonnegative.holds);
    const RankTable h = random_normalized_table(rng, 4, -3, 8);
    EXPECT_EQ(h[Subset{}], 0);
    EXPECT_TRUE(std::all_of(h.values().begin(), h.values().end(), [](Rank r) { return r >= -3 && r <= 8; }));
  }
}

TEST(SuiteParams, Parsing) {
  const auto p = SuiteParams::parse("n=3,count=50,seed=9,fail_fast=true");
  EXPECT_EQ(p.size("n", 0), 3u);
  EXPECT_EQ(p.integer("count", 0), 50);
  EXPECT_TRUE(p.flag("fail_fast", false));
  EXPECT_EQ(p.seed, 9u);
  EXPECT_THROW(SuiteParams::parse("n"), InputError);
  EXPECT_THROW(SuiteParams::parse("n=x").size("n", 0), InputError);
}

TEST(Suites, CatalogAndErrors) {
  EXPECT_EQ(suite_catalog().size(), 19u);
  EXPECT_THROW(run_suite("no_such_suite", {}), InputError);
  EXPECT_THROW(run_suite("involution", {}), InputError);  // seed missing
  auto p = SuiteParams::parse("bogus=1");
  p.seed = 1;
  EXPECT_THROW(run_suite("involution", p), InputError);
}

TEST(Suites, DeterministicAndThreadIndependent) {
  auto p = SuiteParams::parse("count=200,max_n=5");
  p.seed = 42;
  const SuiteResult one = run_suite("recursion_oracle", p);
  const SuiteResult again = run_suite("recursion_oracle", p);
  EXPECT_EQ(one.to_text(), again.to_text());
  p.set("threads", "4");
  const SuiteResult threaded = run_suite("recursion_oracle", p);
  EXPECT_EQ(one.to_text(), threaded.to_text());
  EXPECT_EQ(one.instances_checked, 200u);
  EXPECT_TRUE(one.passed());
}

TEST(Suites, EveryNamedSuitePassesAtSmallScale) {
  for (const auto& info : suite_catalog()) {
    SuiteParams p;
    p.seed = 2024;
    auto has = [&](const char* key) {
      return std::find(info.params.begin(), info.params.end(), key) != info.params.end();
    };
    if (has("count")) p.set("count", "100");
    if (has("n")) p.set("n", "3");
    if (has("max_edges")) p.set("max_edges", "5");
    const SuiteResult r = run_suite(info.name, p);
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_GT(r.instances_checked, 0u) << info.name;
  }
}

TEST(SuiteResult, TextReport) {
  SuiteResult r;
  r.suite = "demo";
  r.instances_checked = 3;
  r.failure_count = 1;
  r.failures.push_back({"a:0,2", "subcardinal", "A={a}"});
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.to_text(),
            "suite: demo\ninstances: 3\nfailures: 1\nfailure: subcardinal | a:0,2 | A={a}\nstatus: FAIL\n");
}
