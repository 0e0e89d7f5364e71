#include <algorithm>
#include <charconv>
#include <mutex>
#include <thread>

#include "rankdual/axioms.hpp"
#include "rankdual/duality.hpp"
#include "rankdual/structures.hpp"
#include "rankdual/tutte.hpp"
#include "rankdual/verify.hpp"

namespace rankdual {

SuiteParams SuiteParams::parse(std::string_view text) {
  SuiteParams params;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw InputError("suite parameter '" + std::string(item) + "' is not key=value");
    }
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    if (key == "seed") {
      params.seed = static_cast<std::uint64_t>(params.integer_from(value, key));
    } else {
      params.set(key, value);
    }
  }
  return params;
}

std::int64_t SuiteParams::integer_from(std::string_view text, std::string_view key) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("suite parameter '" + std::string(key) + "' expects an integer, got '" + std::string(text) + "'");
  }
  return out;
}

void SuiteParams::set(std::string key, std::string value) { values_[std::move(key)] = std::move(value); }

bool SuiteParams::has(std::string_view key) const { return values_.find(key) != values_.end(); }

std::int64_t SuiteParams::integer(std::string_view key, std::int64_t fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : integer_from(it->second, key);
}

std::size_t SuiteParams::size(std::string_view key, std::size_t fallback) const {
  const std::int64_t v = integer(key, static_cast<std::int64_t>(fallback));
  if (v < 0) throw InputError("suite parameter '" + std::string(key) + "' must be non-negative");
  return static_cast<std::size_t>(v);
}

bool SuiteParams::flag(std::string_view key, bool fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (it->second == "1" || it->second == "true" || it->second == "yes") return true;
  if (it->second == "0" || it->second == "false" || it->second == "no") return false;
  throw InputError("suite parameter '" + std::string(key) + "' expects a boolean");
}

std::string SuiteResult::to_text(bool include_timing) const {
  std::string out = "suite: " + suite + "\n";
  out += "instances: " + std::to_string(instances_checked) + "\n";
  out += "failures: " + std::to_string(failure_count) + "\n";
  for (const auto& f : failures) {
    out += "failure: " + f.assertion + " | " + f.instance + " | " + f.witness + "\n";
  }
  if (include_timing) {
    out += "elapsed_ms: " +
           std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()) + "\n";
  }
  out += passed() ? "status: PASS\n" : "status: FAIL\n";
  return out;
}

namespace {

using Failures = std::vector<SuiteFailure>;
using TableCheck = std::function<void(const RankTable&, Failures&)>;

std::string first_difference(const RankTable& a, const RankTable& b) {
  if (!(a.ground() == b.ground())) return "ground sets differ";
  for (std::size_t m = 0; m < a.ground().subset_count(); ++m) {
    const Subset s(static_cast<Mask>(m));
    if (a[s] != b[s]) {
      return "A=" + a.ground().format(s) + " " + std::to_string(a[s]) + " vs " + std::to_string(b[s]);
    }
  }
  return "equal";
}

void expect_equal_tables(const RankTable& lhs, const RankTable& rhs, const std::string& assertion,
                         const RankTable& instance, Failures& out) {
  if (!(lhs == rhs)) out.push_back({describe_table(instance), assertion, first_difference(lhs, rhs)});
}

void expect_equal_polys(const LaurentPoly2& lhs, const LaurentPoly2& rhs, const std::string& assertion,
                        const RankTable& instance, Failures& out) {
  if (!(lhs == rhs)) out.push_back({describe_table(instance), assertion, lhs.to_string() + " vs " + rhs.to_string()});
}

std::string failed_axiom(const AxiomReport& report, const GroundSet& ground) {
  for (const auto& v : report.verdicts) {
    if (!v.holds) return v.axiom + (v.witnesses.empty() ? "" : " " + v.witnesses.front().describe(ground));
  }
  return "all axioms hold";
}

class Runner {
 public:
  Runner(std::string_view name, const SuiteParams& params)
      : params_(params),
        fail_fast_(params.flag("fail_fast", false)),
        max_failures_(params.size("max_failures", 100)),
        threads_(fail_fast_ ? 1 : std::max<std::size_t>(1, params.size("threads", 1))) {
    result_.suite = std::string(name);
  }

  bool stopped() const { return fail_fast_ && result_.failure_count > 0; }

  void record(Failures&& failures) {
    for (auto& f : failures) {
      ++result_.failure_count;
      if (result_.failures.size() < max_failures_) result_.failures.push_back(std::move(f));
    }
  }

  /// Checks one instance inline.
  void one(const RankTable& g, const TableCheck& check) {
    if (stopped()) return;
    Failures f;
    check(g, f);
    ++result_.instances_checked;
    record(std::move(f));
  }

  /// A named assertion with no table attached.
  void assertion(bool ok, std::string name, std::string detail) {
    if (stopped()) return;
    ++result_.instances_checked;
    if (!ok) record({{"-", std::move(name), std::move(detail)}});
  }

  /// Checks a corpus, split across worker threads; failures are merged in
  /// corpus order so the result does not depend on scheduling.
  void corpus(const std::vector<RankTable>& tables, const TableCheck& check) {
    if (threads_ <= 1 || tables.size() < 2) {
      for (const auto& g : tables) one(g, check);
      return;
    }
    std::vector<Failures> per_instance(tables.size());
    std::vector<std::jthread> workers;
    const std::size_t chunk = (tables.size() + threads_ - 1) / threads_;
    for (std::size_t begin = 0; begin < tables.size(); begin += chunk) {
      const std::size_t end = std::min(tables.size(), begin + chunk);
      workers.emplace_back([&, begin, end] {
        for (std::size_t i = begin; i < end; ++i) check(tables[i], per_instance[i]);
      });
    }
    workers.clear();
    for (auto& f : per_instance) {
      ++result_.instances_checked;
      record(std::move(f));
    }
  }

  const SuiteParams& params() const { return params_; }
  SuiteResult finish() && { return std::move(result_); }

 private:
  const SuiteParams& params_;
  bool fail_fast_;
  std::size_t max_failures_;
  std::size_t threads_;
  SuiteResult result_;
};

std::uint64_t require_seed(const SuiteParams& params, std::string_view suite) {
  if (!params.seed) throw InputError("suite '" + std::string(suite) + "' is randomized and needs a seed");
  return *params.seed;
}

// count random normalized tables with n uniform in [0, max_n].
std::vector<RankTable> random_corpus(const SuiteParams& params, std::string_view suite) {
  std::mt19937_64 rng(require_seed(params, suite));
  const std::size_t count = params.size("count", 1000);
  const std::size_t max_n = params.size("max_n", 6);
  if (max_n > 12) throw InputError("random corpus limited to max_n <= 12");
  const Rank low = params.integer("low", -3);
  const Rank high = params.integer("high", 8);
  std::uniform_int_distribution<std::size_t> size_dist(0, max_n);
  std::vector<RankTable> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = size_dist(rng);
    out.push_back(random_normalized_table(rng, n, low, high));
  }
  return out;
}

std::vector<RankTable> monotone_corpus(const SuiteParams& params, std::string_view suite) {
  std::mt19937_64 rng(require_seed(params, suite));
  const std::size_t count = params.size("count", 1000);
  const std::size_t max_n = params.size("max_n", 6);
  if (max_n > 12) throw InputError("random corpus limited to max_n <= 12");
  std::uniform_int_distribution<std::size_t> size_dist(0, max_n);
  std::vector<RankTable> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = size_dist(rng);
    out.push_back(random_monotone_subcardinal(rng, n));
  }
  return out;
}

// Enumerates every table of the constraint for n = 0..max_n.
void enumerated(Runner& run, TableConstraint constraint, std::size_t default_n, const TableCheck& check) {
  const std::size_t max_n = run.params().size("n", default_n);
  for (std::size_t n = 0; n <= max_n && !run.stopped(); ++n) {
    EnumSpec spec{n, constraint};
    if (constraint == TableConstraint::window) {
      spec.low = run.params().integer("low", -1);
      spec.high = run.params().integer("high", 3);
    }
    enumerate_tables(spec, [&](const RankTable& g) { run.one(g, check); });
  }
}

// --- per-instance checks --------------------------------------------------

void check_involution(const RankTable& g, Failures& out) {
  expect_equal_tables(dual(dual(g)), g, "dual(dual(g)) = g", g, out);
}

void check_exchange(const RankTable& g, Failures& out) {
  const RankTable d = dual(g);
  for (std::size_t p = 0; p < g.size(); ++p) {
    const std::string at = " at p=" + g.ground().label(p);
    expect_equal_tables(dual(delete_element(g, p)), contract(d, p), "(G-p)* = G*/p" + at, g, out);
    expect_equal_tables(dual(contract(g, p)), delete_element(d, p), "(G/p)* = G*-p" + at, g, out);
  }
}

void check_contract_formula(const RankTable& g, Failures& out) {
  for (std::size_t p = 0; p < g.size(); ++p) {
    const RankTable formula = minor(g, MinorSpec{Subset::singleton(p), Subset{}});
    const RankTable composed = dual(delete_element(dual(g), p));
    expect_equal_tables(formula, composed, "r(A+p) - r(p) = (G*-p)* at p=" + g.ground().label(p), g, out);
  }
}

void check_recursion(const RankTable& g, Failures& out) {
  const LaurentPoly2 expected = tutte_subset(g);
  for (PivotRule rule : {PivotRule::lowest, PivotRule::highest, PivotRule::middle}) {
    expect_equal_polys(tutte_recursive(g, rule), expected,
                       "recursive(" + std::string(to_string(rule)) + ") = subset expansion", g, out);
  }
}

void check_duality_swap(const RankTable& g, Failures& out) {
  expect_equal_polys(tutte_subset(dual(g)), swap_vars(tutte_subset(g)), "f(G*; t, z) = f(G; z, t)", g, out);
}

void check_polynomiality(const RankTable& g, Failures& out) {
  const auto report = validate(g);
  const bool expected = report.rank_s_maximum.holds && report.subcardinal.holds;
  const LaurentPoly2 f = tutte_subset(g);
  if (f.is_polynomial() != expected) {
    out.push_back({describe_table(g), "polynomial iff rank-S-maximum and subcardinal", f.to_string()});
  }
}

void check_greedoid_contraction(const RankTable& g, Failures& out) {
  const auto family = FeasibleFamily::of(g);
  for (std::size_t p = 0; p < g.size(); ++p) {
    const bool in_some = std::any_of(family.members().begin(), family.members().end(),
                                     [&](Subset f) { return f.contains(p); });
    if (!in_some) continue;
    const bool singleton_feasible = family.contains(Subset::singleton(p));
    const bool contraction_is_greedoid = check_greedoid(contract(g, p)).passed();
    if (contraction_is_greedoid != singleton_feasible) {
      out.push_back({describe_table(g), "G/p greedoid iff {p} feasible", "p=" + g.ground().label(p)});
    }
  }
}

void check_greedoid_minors(const RankTable& g, Failures& out) {
  const auto family = FeasibleFamily::of(g);
  for (std::size_t p = 0; p < g.size(); ++p) {
    const std::string at = " at p=" + g.ground().label(p);
    expect_equal_tables(greedoid_minor_feasible(g, p, MinorKind::deletion).induced_rank(), delete_element(g, p),
                        "feasible deletion = rank deletion" + at, g, out);
    const bool in_some = std::any_of(family.members().begin(), family.members().end(),
                                     [&](Subset f) { return f.contains(p); });
    const bool allowed = !in_some || family.contains(Subset::singleton(p));
    try {
      const auto minor_family = greedoid_minor_feasible(g, p, MinorKind::contraction);
      if (!allowed) {
        out.push_back({describe_table(g), "contraction refused when {p} infeasible" + at, "no error raised"});
        continue;
      }
      expect_equal_tables(minor_family.induced_rank(), contract(g, p), "feasible contraction = rank contraction" + at,
                          g, out);
    } catch (const NotAGreedoidError& e) {
      if (allowed) out.push_back({describe_table(g), "contraction allowed when {p} feasible or loop" + at, e.what()});
    }
  }
}

void check_dual_greedoid_axioms(const RankTable& g, Failures& out) {
  const auto report = check_dual_greedoid(dual(g));
  if (!report.passed()) {
    out.push_back({describe_table(g), "dual of a greedoid satisfies Gr0*-Gr3*", failed_axiom(report, g.ground())});
  }
}

void check_intersection(const RankTable& g, Failures& out) {
  const bool matroid = check_matroid(g).passed();
  const bool greedoid = check_greedoid(g).passed();
  const bool dual_is_greedoid = greedoid && check_greedoid(dual(g)).passed();
  const bool starred = greedoid && check_dual_greedoid(g).passed();
  if (matroid && !dual_is_greedoid) {
    out.push_back({describe_table(g), "matroid implies greedoid(r) and greedoid(r*)", "-"});
  }
  if (!matroid && dual_is_greedoid) {
    out.push_back({describe_table(g), "greedoid(r) and greedoid(r*) imply matroid", "-"});
  }
  if (matroid != starred) {
    out.push_back({describe_table(g), "matroid iff greedoid and Gr0*-Gr3*", matroid ? "matroid" : "not matroid"});
  }
}

void check_full_greedoid_dual(const RankTable& g, Failures& out) {
  if (g.rank_of_ground() != static_cast<Rank>(g.size())) return;
  const RankTable d = dual(g);
  for (std::size_t m = 0; m < g.ground().subset_count(); ++m) {
    const Subset a(static_cast<Mask>(m));
    if (d[a] > 0) {
      out.push_back({describe_table(g), "full greedoid has r* <= 0", "A=" + g.ground().format(a)});
      return;
    }
  }
}

void check_closure_gap(const RankTable& g, Failures& out) {
  const ConvexClosure closure(g);
  const RankTable d = dual(g);
  for (std::size_t m = 0; m < g.ground().subset_count(); ++m) {
    const Subset a(static_cast<Mask>(m));
    const Subset bar = closure.closure(a);
    if (d[a] != -static_cast<Rank>((bar - a).size())) {
      out.push_back({describe_table(g), "r*(A) = -|closure(A) - A|",
                     "A=" + g.ground().format(a) + " closure=" + g.ground().format(bar)});
      return;
    }
  }
}

void check_convex_zero(const RankTable& g, Failures& out) {
  const ConvexClosure closure(g);
  const RankTable d = dual(g);
  for (std::size_t m = 0; m < g.ground().subset_count(); ++m) {
    const Subset c(static_cast<Mask>(m));
    if (closure.is_convex(c) != (d[c] == 0)) {
      out.push_back({describe_table(g), "C convex iff r*(C) = 0", "C=" + g.ground().format(c)});
      return;
    }
  }
}

void check_monotone_nullity(const RankTable& g, Failures& out) {
  const bool r1 = check_matroid(g).verdict("R1").holds;
  const bool mn = check_demimatroid_characterization(g).verdict("MN").holds;
  // Alternative form: A <= B implies r(B) - r(A) <= |B - A|.
  bool alt = true;
  for (std::size_t mb = 0; mb < g.ground().subset_count() && alt; ++mb) {
    const Subset b(static_cast<Mask>(mb));
    for (std::size_t ma = 0; ma < g.ground().subset_count(); ++ma) {
      const Subset a(static_cast<Mask>(ma));
      if (a.is_subset_of(b) && g[b] - g[a] > static_cast<Rank>((b - a).size())) {
        alt = false;
        break;
      }
    }
  }
  if (r1 != mn) out.push_back({describe_table(g), "(R1) iff (MN)", r1 ? "R1 holds" : "MN holds"});
  if (mn != alt) out.push_back({describe_table(g), "(MN) iff r(B) - r(A) <= |B - A|", mn ? "MN holds" : "alt holds"});
}

void check_demimatroid(const RankTable& g, Failures& out) {
  const auto characterization = check_demimatroid_characterization(g);
  const auto triple = check_demimatroid_triple(g, dual(g));
  if (characterization.passed() != triple.passed()) {
    out.push_back({describe_table(g), "(a),(b),(c) iff (S, r, r*) is a demi-matroid",
                   characterization.passed() ? failed_axiom(triple, g.ground()) : failed_axiom(characterization, g.ground())});
  }
  if (characterization.verdict("(a)").holds && characterization.verdict("(b)").holds &&
      characterization.verdict("(c)").holds != characterization.verdict("MN").holds) {
    out.push_back({describe_table(g), "(c) iff (MN) under (a) and (b)", "-"});
  }
}

void check_direct_sums(const std::vector<RankTable>& corpus, Runner& run) {
  // Consecutive pairs whose sizes fit; the right operand is relabeled.
  for (std::size_t i = 0; i + 1 < corpus.size() && !run.stopped(); i += 2) {
    const RankTable& g1 = corpus[i];
    const RankTable& raw = corpus[i + 1];
    if (g1.size() + raw.size() > kMaxGroundSize) continue;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < raw.size(); ++k) labels.push_back("y" + std::to_string(k));
    const RankTable g2(GroundSet(std::move(labels)), std::vector<Rank>(raw.values().begin(), raw.values().end()));
    run.one(g1, [&](const RankTable&, Failures& out) {
      const RankTable sum = direct_sum(g1, g2);
      expect_equal_tables(dual(sum), direct_sum(dual(g1), dual(g2)), "(G1+G2)* = G1* + G2*", sum, out);
      expect_equal_polys(tutte_subset(sum), tutte_subset(g1) * tutte_subset(g2), "f(G1+G2) = f(G1) f(G2)", sum, out);
    });
  }
}

// --- goldens ---------------------------------------------------------------

RankTable table_from(const GroundSet& ground, std::initializer_list<std::pair<const char*, Rank>> entries) {
  std::vector<LabeledEntry> list;
  for (const auto& [set, rank] : entries) {
    LabeledEntry e;
    for (const char* c = set; *c != '\0'; ++c) e.subset.emplace_back(1, *c);
    e.rank = rank;
    list.push_back(std::move(e));
  }
  return build_rank_table(ground, list);
}

LaurentPoly2 poly(std::initializer_list<std::tuple<std::int64_t, std::int64_t, std::int64_t>> terms) {
  LaurentPoly2 p;
  for (auto [t, z, c] : terms) p.add_term({t, z}, c);
  return p;
}

void rooted_tree_goldens(Runner& run) {
  const RankTable r = branching_greedoid(sample_rooted_tree());
  const GroundSet& s = r.ground();
  const RankTable rooted_tree_ranks = table_from(
      s, {{"", 0}, {"a", 1}, {"b", 0}, {"c", 1}, {"ab", 2}, {"ac", 2}, {"bc", 1}, {"abc", 3}});
  const RankTable dual_row = table_from(
      s, {{"", 0}, {"a", -1}, {"b", 0}, {"c", 0}, {"ab", 0}, {"ac", -1}, {"bc", 0}, {"abc", 0}});
  run.assertion(r == rooted_tree_ranks, "branching greedoid of the rooted tree", first_difference(r, rooted_tree_ranks));
  run.assertion(dual(r) == dual_row, "dual rank row", first_difference(dual(r), dual_row));

  const GroundSet bc({"b", "c"});
  const RankTable minus_a = table_from(bc, {{"", 0}, {"b", 0}, {"c", 1}, {"bc", 1}});
  const RankTable over_a = table_from(bc, {{"", 0}, {"b", 1}, {"c", 1}, {"bc", 2}});
  run.assertion(delete_element(r, "a") == minus_a, "rank in G-a", first_difference(delete_element(r, "a"), minus_a));
  run.assertion(contract(r, "a") == over_a, "rank in G/a", first_difference(contract(r, "a"), over_a));

  const LaurentPoly2 f = poly({{3, 1, 1}, {3, 0, 1}, {2, 1, 1}, {2, 0, 2}, {1, 0, 2}, {0, 0, 1}});
  const LaurentPoly2 f_minus_a = poly({{1, 1, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}});
  const LaurentPoly2 square = poly({{2, 0, 1}, {1, 0, 2}, {0, 0, 1}});
  const LaurentPoly2 f_over_b = poly({{3, 0, 1}, {2, 0, 1}, {1, -1, 1}, {0, -1, 1}});
  run.assertion(tutte_subset(r) == f, "f(G)", tutte_subset(r).to_string());
  run.assertion(tutte_recursive(r) == f, "f(G) recursive", tutte_recursive(r).to_string());
  run.assertion(tutte_subset(delete_element(r, "a")) == f_minus_a, "f(G-a)", "");
  run.assertion(tutte_subset(contract(r, "a")) == square, "f(G/a)", "");
  run.assertion(tutte_subset(delete_element(r, "b")) == square, "f(G-b)", "");
  run.assertion(tutte_subset(contract(r, "b")) == f_over_b, "f(G/b)", tutte_subset(contract(r, "b")).to_string());
  run.assertion(f == square + f_minus_a.scaled({2, 0}), "f(G) = f(G/a) + t^2 f(G-a)", "");
  run.assertion(f == square.scaled({1, 0}) + f_over_b.scaled({0, 1}), "f(G) = t f(G-b) + z f(G/b)", "");
  run.assertion(tutte_subset(dual(r)) == swap_vars(f), "f(G*) = f(G; z, t)", tutte_subset(dual(r)).to_string());

  const auto matroid = check_matroid(r);
  run.assertion(!matroid.verdict("R1").holds, "rooted tree violates R1", "");
  run.assertion(check_greedoid(r).passed(), "rooted tree is a greedoid", "");
  run.assertion(!check_greedoid(dual(r)).verdict("nonnegative").holds, "dual rank is negative somewhere", "");
  const auto characterization = check_demimatroid_characterization(r);
  const auto& c = characterization.verdict("(c)");
  run.assertion(!c.holds && c.witnesses.front().get("A") == s.subset_of(std::vector<std::string>{"b"}) &&
                    c.witnesses.front().get("p") == Subset::singleton(0),
                "unit rank increase fails at A={b}, p=a", failed_axiom(characterization, s));
}

void pruning_tree_goldens(Runner& run) {
  const Tree tree = bundled_pruning_tree();
  const RankTable r = pruning_antimatroid(tree);
  const GroundSet& s = r.ground();
  auto set = [&](const char* labels) {
    std::vector<std::string> v;
    for (const char* c = labels; *c != '\0'; ++c) v.emplace_back(1, *c);
    return s.subset_of(v);
  };
  const RankTable d = dual(r);
  const ConvexClosure closure(r);
  run.assertion(r[set("adef")] == 4, "r({a,d,e,f}) = 4", std::to_string(r[set("adef")]));
  run.assertion(tree.is_subtree(set("bcghij")), "{b,c,g,h,i,j} is a subtree", "");
  run.assertion(d[set("bcghij")] == 0, "r*(S - {a,d,e,f}) = 0", std::to_string(d[set("bcghij")]));
  run.assertion(r[set("beh")] == 2, "r({b,e,h}) = 2", std::to_string(r[set("beh")]));
  run.assertion(r[set("eh")] == 2, "{e,h} is feasible", std::to_string(r[set("eh")]));
  run.assertion(closure.closure(set("beh")) == set("bcdeh"), "closure({b,e,h}) = {b,c,d,e,h}",
                s.format(closure.closure(set("beh"))));
  run.assertion(closure.closure(set("adf")) == set("abcdfg"), "closure({a,d,f}) = {a,b,c,d,f,g}",
                s.format(closure.closure(set("adf"))));
  run.assertion(r[set("bceghij")] == 4, "r(S - {a,d,f}) = 4", std::to_string(r[set("bceghij")]));
  run.assertion(d[set("adf")] == -3, "r*({a,d,f}) = -3", std::to_string(d[set("adf")]));
  run.assertion(check_antimatroid(r).passed(), "pruning antimatroid passes the antimatroid axioms", "");
}

void tree_census(Runner& run, bool closure_gap) {
  const std::size_t max_edges = run.params().size("max_edges", 8);
  for_each_tree(max_edges, [&](const Tree& tree) {
    const RankTable r = pruning_antimatroid(tree);
    run.one(r, [&](const RankTable& g, Failures& out) {
      if (!check_antimatroid(g).passed() || g.rank_of_ground() != static_cast<Rank>(g.size())) {
        out.push_back({describe_table(g), "pruning antimatroid is a full antimatroid", "-"});
        return;
      }
      const ConvexClosure cc(g);
      for (std::size_t m = 0; m < g.ground().subset_count(); ++m) {
        const Subset c(static_cast<Mask>(m));
        if (cc.is_convex(c) != tree.is_subtree(c)) {
          out.push_back({describe_table(g), "C convex iff C is a subtree", "C=" + g.ground().format(c)});
          return;
        }
      }
      if (closure_gap) {
        check_closure_gap(g, out);
      } else {
        check_convex_zero(g, out);
      }
    });
  });
}

void rooted_graph_census(Runner& run) {
  const std::size_t max_edges = run.params().size("max_edges", 6);
  for_each_rooted_graph(max_edges, [&](const RootedGraph& graph) {
    const RankTable r = branching_greedoid(graph);
    run.one(r, [&](const RankTable& g, Failures& out) {
      if (!check_greedoid(g).passed()) out.push_back({describe_table(g), "branching greedoid passes Gr axioms", "-"});
      const RankTable d = dual(g);
      const bool nonnegative = *std::min_element(d.values().begin(), d.values().end()) >= 0;
      if (nonnegative != root_adjacency_test(graph)) {
        out.push_back({describe_table(g), "r* >= 0 iff every vertex is adjacent to the root",
                       nonnegative ? "r* >= 0 but a vertex is not adjacent" : "all adjacent but r* < 0"});
      }
      if (graph.edges().size() + 1 == graph.vertices().size() && g.rank_of_ground() != static_cast<Rank>(g.size())) {
        out.push_back({describe_table(g), "rooted trees are full greedoids", "-"});
      }
    });
  });
}

// --- catalog ---------------------------------------------------------------

struct SuiteDef {
  SuiteInfo info;
  std::function<void(Runner&)> body;
};

const std::vector<std::string> kRandomKeys{"count", "max_n", "low", "high"};

const std::vector<SuiteDef>& definitions() {
  static const std::vector<SuiteDef> defs = [] {
    std::vector<SuiteDef> d;
    auto random_suite = [&](std::string name, std::string summary, TableCheck check) {
      d.push_back({{name, std::move(summary), true, kRandomKeys}, [name, check](Runner& run) {
                     run.corpus(random_corpus(run.params(), name), check);
                   }});
    };
    random_suite("involution", "dual(dual(g)) = g on random normalized tables", check_involution);
    random_suite("exchange", "(G-p)* = G*/p and (G/p)* = G*-p for every p", check_exchange);
    random_suite("contract_formula", "r(A+p) - r(p) equals the dual-delete-dual contraction", check_contract_formula);
    d.push_back({{"direct_sum_dual", "(G1+G2)* = G1* + G2* and f(G1+G2) = f(G1) f(G2)", true, kRandomKeys},
                 [](Runner& run) { check_direct_sums(random_corpus(run.params(), "direct_sum_dual"), run); }});
    random_suite("recursion_oracle", "deletion-contraction equals subset expansion for every pivot rule",
                 check_recursion);
    random_suite("duality_swap", "f(G*; t, z) = f(G; z, t)", check_duality_swap);
    random_suite("polynomiality", "f is a polynomial iff r is rank-S-maximum and subcardinal", check_polynomiality);

    d.push_back({{"greedoid_contraction", "G/p is a greedoid iff {p} is feasible (p in some feasible set)", false,
                  {"n"}},
                 [](Runner& run) { enumerated(run, TableConstraint::greedoid, 4, check_greedoid_contraction); }});
    d.push_back({{"greedoid_minors", "feasible-set minors agree with rank-table minors", false, {"n"}},
                 [](Runner& run) { enumerated(run, TableConstraint::greedoid, 4, check_greedoid_minors); }});
    d.push_back({{"dual_greedoid_axioms", "every greedoid's dual satisfies Gr0*-Gr3*", false, {"n"}},
                 [](Runner& run) { enumerated(run, TableConstraint::greedoid, 4, check_dual_greedoid_axioms); }});
    d.push_back({{"greedoid_dual_intersection", "greedoid(r) and greedoid(r*) iff matroid(r)", false, {"n"}},
                 [](Runner& run) {
                   enumerated(run, TableConstraint::normalized_subcardinal_monotone, 4, check_intersection);
                 }});
    d.push_back({{"branching_dual_nonneg", "branching greedoid has r* >= 0 iff every vertex is adjacent to the root",
                  false, {"max_edges"}},
                 rooted_graph_census});
    d.push_back({{"full_greedoid_dual", "full greedoids have r* <= 0", false, {"n"}},
                 [](Runner& run) { enumerated(run, TableConstraint::greedoid, 4, check_full_greedoid_dual); }});
    d.push_back({{"antimatroid_dual_closure", "full antimatroids have r*(A) = -|closure(A) - A|", false,
                  {"n", "max_edges"}},
                 [](Runner& run) {
                   enumerated(run, TableConstraint::full_antimatroid, 4, check_closure_gap);
                   tree_census(run, true);
                 }});
    d.push_back({{"convex_dual_zero", "in a full antimatroid C is convex iff r*(C) = 0", false, {"n", "max_edges"}},
                 [](Runner& run) {
                   enumerated(run, TableConstraint::full_antimatroid, 4, check_convex_zero);
                   tree_census(run, false);
                 }});
    d.push_back({{"monotone_nullity", "(R1) iff (MN) on monotone subcardinal tables", true,
                  {"n", "count", "max_n"}},
                 [](Runner& run) {
                   enumerated(run, TableConstraint::normalized_subcardinal_monotone, 3, check_monotone_nullity);
                   run.corpus(monotone_corpus(run.params(), "monotone_nullity"), check_monotone_nullity);
                 }});
    d.push_back({{"demimatroid_characterization", "(a),(b),(c) iff (S, r, r*) is a demi-matroid", true,
                  {"n", "low", "high", "count", "max_n"}},
                 [](Runner& run) {
                   enumerated(run, TableConstraint::window, 3, check_demimatroid);
                   run.corpus(monotone_corpus(run.params(), "demimatroid_characterization"), check_demimatroid);
                 }});
    d.push_back({{"rooted_tree_goldens", "worked values for the three-edge rooted tree", false, {}},
                 rooted_tree_goldens});
    d.push_back({{"pruning_tree_goldens", "worked values for the bundled ten-edge pruning tree", false, {}},
                 pruning_tree_goldens});
    return d;
  }();
  return defs;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& d : definitions()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

SuiteResult run_suite(std::string_view name, const SuiteParams& params) {
  const auto& defs = definitions();
  auto it = std::find_if(defs.begin(), defs.end(), [&](const SuiteDef& d) { return d.info.name == name; });
  if (it == defs.end()) throw InputError("unknown suite '" + std::string(name) + "'");
  for (const auto& [key, value] : params.values()) {
    const bool common = key == "fail_fast" || key == "max_failures" || key == "threads";
    if (!common && std::find(it->info.params.begin(), it->info.params.end(), key) == it->info.params.end()) {
      throw InputError("suite '" + std::string(name) + "' does not take parameter '" + key + "'");
    }
  }
  if (it->info.randomized) require_seed(params, name);

  const auto start = std::chrono::steady_clock::now();
  Runner run(name, params);
  it->body(run);
  SuiteResult result = std::move(run).finish();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace rankdual
