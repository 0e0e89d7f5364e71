// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rankdual/axioms.hpp"
#include "rankdual/duality.hpp"
#include "rankdual/structures.hpp"
#include "rankdual/tutte.hpp"
#include "rankdual/verify.hpp"

using namespace rankdual;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& text) {
    if (ok) detail += (detail.empty() ? "" : "; ") + text;
  }
};

std::vector<Rank> ranks(const RankTable& g) { return {g.values().begin(), g.values().end()}; }

RankTable rooted_tree_table() { return branching_greedoid(sample_rooted_tree()); }

Subset letters(const GroundSet& g, const std::string& text) {
  std::vector<std::string> v;
  for (char c : text) v.emplace_back(1, c);
  return g.subset_of(v);
}

SuiteParams params(const std::string& text, bool seeded) {
  SuiteParams p = SuiteParams::parse(text);
  if (seeded) p.seed = kSeed;
  return p;
}

// Runs a suite and folds its result into the outcome.
void suite(Outcome& o, const std::string& name, const std::string& text, bool seeded) {
  const SuiteResult r = run_suite(name, params(text, seeded));
  const auto ms = std::chrono::duration<double, std::milli>(r.elapsed).count();
  std::ostringstream line;
  line << name << " " << r.instances_checked << " instances " << r.failure_count << " failures " << ms << " ms";
  o.require(r.passed(), line.str() + (r.failures.empty() ? "" : " first: " + r.failures.front().assertion + " at " +
                                                                    r.failures.front().instance));
  o.note(line.str());
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Outcome golden_dual_row() {
  Outcome o;
  const RankTable r = rooted_tree_table();
  const auto start = Clock::now();
  const RankTable d = dual(r);
  const double ms = elapsed_ms(start);
  o.require(ranks(d) == std::vector<Rank>{0, -1, 0, 0, 0, -1, 0, 0}, "r* row differs");
  o.require(ms < 1.0, "dual took " + std::to_string(ms) + " ms");
  o.note("dual in " + std::to_string(ms) + " ms");
  return o;
}

Outcome golden_minor_rows() {
  Outcome o;
  const RankTable r = rooted_tree_table();
  const RankTable del = delete_element(r, "a");
  const RankTable con = contract(r, "a");
  o.require(del.ground().labels() == std::vector<std::string>{"b", "c"}, "G-a ground");
  o.require(ranks(del) == std::vector<Rank>{0, 0, 1, 1}, "G-a row differs");
  o.require(ranks(con) == std::vector<Rank>{0, 1, 1, 2}, "G/a row differs");
  return o;
}

Outcome worked_polynomials() {
  Outcome o;
  const RankTable g = rooted_tree_table();
  const std::vector<std::pair<RankTable, std::string>> cases{
      {g, "t^3*z + t^3 + t^2*z + 2*t^2 + 2*t + 1"},
      {delete_element(g, "a"), "t*z + t + z + 1"},
      {contract(g, "a"), "t^2 + 2*t + 1"},
      {delete_element(g, "b"), "t^2 + 2*t + 1"},
      {contract(g, "b"), "t^3 + t^2 + t*z^-1 + z^-1"},
  };
  for (const auto& [table, expected] : cases) {
    o.require(tutte_subset(table).to_string() == expected, "subset form of " + expected);
    for (PivotRule rule : {PivotRule::lowest, PivotRule::highest, PivotRule::middle}) {
      o.require(tutte_recursive(table, rule).to_string() == expected,
                "recursive(" + std::string(to_string(rule)) + ") form of " + expected);
    }
  }
  const LaurentPoly2 f = tutte_subset(g);
  o.require(f == tutte_subset(contract(g, "a")) + tutte_subset(delete_element(g, "a")).scaled({2, 0}),
            "pivot on a");
  o.require(f == tutte_subset(delete_element(g, "b")).scaled({1, 0}) + tutte_subset(contract(g, "b")).scaled({0, 1}),
            "pivot on b");
  return o;
}

Outcome duality_swap() {
  Outcome o;
  const auto start = Clock::now();
  suite(o, "duality_swap", "count=1000,max_n=6,low=-3,high=8", true);
  const double ms = elapsed_ms(start);
  o.require(ms < 10000.0, "over 10 s");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  suite(o, "recursion_oracle", "count=1000,max_n=6,low=-3,high=8", true);
  const double ms = elapsed_ms(start);
  o.require(ms < 30000.0, "over 30 s");
  return o;
}

Outcome involution_and_exchange() {
  Outcome o;
  suite(o, "involution", "count=1000,max_n=6,low=-3,high=8", true);
  suite(o, "exchange", "count=1000,max_n=6,low=-3,high=8", true);
  return o;
}

Outcome class_identity() {
  Outcome o;
  suite(o, "greedoid_dual_intersection", "n=4", false);
  return o;
}

Outcome dual_greedoid_axioms() {
  Outcome o;
  suite(o, "dual_greedoid_axioms", "n=4", false);
  return o;
}

Outcome convex_closure_gap() {
  Outcome o;
  suite(o, "antimatroid_dual_closure", "n=4,max_edges=8", false);
  suite(o, "convex_dual_zero", "n=4,max_edges=8", false);
  const RankTable r = pruning_antimatroid(bundled_pruning_tree());
  const Rank spot = dual(r)[letters(r.ground(), "adf")];
  o.require(spot == -3, "r*({a,d,f}) = " + std::to_string(spot));
  return o;
}

Outcome demimatroid_characterization() {
  Outcome o;
  suite(o, "demimatroid_characterization", "n=3,count=1000,max_n=6", true);
  suite(o, "monotone_nullity", "n=3,count=1000,max_n=6", true);
  const RankTable g = rooted_tree_table();
  const auto report = check_demimatroid_characterization(g);
  o.require(!report.passed(), "rooted tree passes the characterization");
  const auto& c = report.verdict("(c)");
  o.require(!c.holds && !c.witnesses.empty() && c.witnesses.front().describe(g.ground()) == "A={b} p=a",
            "first witness is not A={b} p=a");
  return o;
}

Outcome branching_and_full_greedoids() {
  Outcome o;
  suite(o, "branching_dual_nonneg", "max_edges=6", false);
  suite(o, "full_greedoid_dual", "n=4", false);
  return o;
}

Outcome laurent_regression() {
  Outcome o;
  const RankTable g(GroundSet({"a", "b"}), {3, -1, 7, 2});
  LaurentPoly2 expected;
  expected.add_term({-5, -6}, 1);
  expected.add_term({-1, -3}, 1);
  expected.add_term({3, 2}, 1);
  expected.add_term({0, 0}, 1);
  const LaurentPoly2 f = tutte_subset(g);
  o.require(f == expected, "got " + f.to_string());
  std::ifstream readme(std::string(RANKDUAL_SOURCE_DIR) + "/README.md");
  std::stringstream text;
  text << readme.rdbuf();
  o.require(text.str().find("t^3*z^2 + 1 + t^-1*z^-3 + t^-5*z^-6") != std::string::npos,
            "README lacks the corrected polynomial note");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden dual row of the rooted tree", golden_dual_row},
      {"golden deletion and contraction rows", golden_minor_rows},
      {"worked polynomials and pivot identities", worked_polynomials},
      {"duality swaps t and z on 1000 random tables", duality_swap},
      {"recursive and subset evaluators agree on 1000 random tables", oracle_equivalence},
      {"involution and deletion/contraction exchange", involution_and_exchange},
      {"greedoid and dual greedoid iff matroid, exhaustive n<=4", class_identity},
      {"every greedoid dual satisfies Gr0*-Gr3*, exhaustive n<=4", dual_greedoid_axioms},
      {"antimatroid dual rank is minus the closure gap", convex_closure_gap},
      {"demi-matroid characterization and monotone nullity", demimatroid_characterization},
      {"branching greedoid dual sign and full greedoid duals", branching_and_full_greedoids},
      {"non-normalized Laurent example", laurent_regression},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = elapsed_ms(start);
    std::printf("%s %2zu %s (%.1f ms)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), ms,
                o.detail.empty() ? "" : " | ", o.detail.c_str());
    if (!o.ok) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
