#include "rankdual/axioms.hpp"

#include <algorithm>
#include <stdexcept>

#include "rankdual/duality.hpp"

namespace rankdual {

std::string_view to_string(AxiomSystem system) {
  switch (system) {
    case AxiomSystem::matroid: return "matroid";
    case AxiomSystem::greedoid: return "greedoid";
    case AxiomSystem::dual_greedoid: return "dual-greedoid";
    case AxiomSystem::antimatroid: return "antimatroid";
    case AxiomSystem::demimatroid_triple: return "demi-matroid-triple";
    case AxiomSystem::demimatroid_characterization: return "demi-matroid-characterization";
  }
  return "?";
}

Subset Witness::get(std::string_view role) const {
  for (const auto& part : parts) {
    if (part.role == role) return part.value;
  }
  throw std::out_of_range("witness has no part '" + std::string(role) + "'");
}

std::string Witness::describe(const GroundSet& ground) const {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += ' ';
    out += part.role;
    out += '=';
    if (part.element) {
      out += ground.label(part.value.elements().front());
    } else {
      out += ground.format(part.value);
    }
  }
  return out;
}

bool witness_before(const Witness& a, const Witness& b) {
  return std::lexicographical_compare(
      a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(),
      [](const WitnessPart& x, const WitnessPart& y) { return witness_less(x.value, y.value); });
}

bool AxiomReport::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const AxiomVerdict& v) { return v.holds; });
}

const AxiomVerdict& AxiomReport::verdict(std::string_view axiom) const {
  for (const auto* list : {&verdicts, &diagnostics}) {
    for (const auto& v : *list) {
      if (v.axiom == axiom) return v;
    }
  }
  throw std::out_of_range("no verdict named '" + std::string(axiom) + "'");
}

namespace {

void append_verdict_lines(std::string& out, const AxiomVerdict& v, const GroundSet& ground, const char* prefix) {
  out += prefix;
  out += v.axiom;
  if (!v.evaluated) {
    out += " SKIPPED\n";
    return;
  }
  if (v.holds) {
    out += " PASS\n";
    return;
  }
  out += " FAIL violations=" + std::to_string(v.violations) + "\n";
  for (const auto& w : v.witnesses) out += "  witness " + w.describe(ground) + "\n";
}

}  // namespace

std::string AxiomReport::to_text(const GroundSet& ground) const {
  std::string out = "system: ";
  out += to_string(system);
  out += '\n';
  for (const auto& v : verdicts) append_verdict_lines(out, v, ground, "");
  for (const auto& v : diagnostics) append_verdict_lines(out, v, ground, "diagnostic ");
  for (const auto& [name, value] : facts) out += "fact " + name + (value ? " yes\n" : " no\n");
  for (const auto& note : notes) out += "note " + note + "\n";
  out += passed() ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

namespace {

// Collects violations for one verdict, keeping the smallest few witnesses.
class Scan {
 public:
  Scan(std::string axiom, const CheckOptions& options) : cap_(options.max_witnesses) {
    verdict_.axiom = std::move(axiom);
  }

  void violation(Witness w) {
    verdict_.holds = false;
    ++verdict_.violations;
    if (cap_ == 0) return;
    auto& ws = verdict_.witnesses;
    if (ws.size() == cap_ && !witness_before(w, ws.back())) return;
    ws.insert(std::upper_bound(ws.begin(), ws.end(), w, witness_before), std::move(w));
    if (ws.size() > cap_) ws.pop_back();
  }

  AxiomVerdict finish() && { return std::move(verdict_); }

 private:
  AxiomVerdict verdict_;
  std::size_t cap_;
};

WitnessPart set_part(const char* role, Subset value) { return {role, value, false}; }
WitnessPart elem_part(const char* role, std::size_t index) { return {role, Subset::singleton(index), true}; }

// Orders an unordered pair of subsets so the first is smaller.
Witness set_pair(const char* first_role, const char* second_role, Subset a, Subset b) {
  if (witness_less(b, a)) std::swap(a, b);
  return {{set_part(first_role, a), set_part(second_role, b)}};
}

std::size_t subsets(const RankTable& g) { return g.ground().subset_count(); }

AxiomVerdict scan_equals_zero_at_empty(const RankTable& g, const char* name, const CheckOptions& opt) {
  Scan scan(name, opt);
  if (g[Subset{}] != 0) scan.violation({{set_part("A", Subset{})}});
  return std::move(scan).finish();
}

AxiomVerdict scan_nonnegative(const RankTable& g, const char* name, const CheckOptions& opt) {
  Scan scan(name, opt);
  for (std::size_t m = 0; m < subsets(g); ++m) {
    const Subset a(static_cast<Mask>(m));
    if (g[a] < 0) scan.violation({{set_part("A", a)}});
  }
  return std::move(scan).finish();
}

AxiomVerdict scan_subcardinal(const RankTable& g, const char* name, const CheckOptions& opt) {
  Scan scan(name, opt);
  for (std::size_t m = 0; m < subsets(g); ++m) {
    const Subset a(static_cast<Mask>(m));
    if (g[a] > static_cast<Rank>(a.size())) scan.violation({{set_part("A", a)}});
  }
  return std::move(scan).finish();
}

// For each A and p outside A, flags the cover when `bad(r(A), r(A+p))`.
template <class Bad>
AxiomVerdict scan_covers(const RankTable& g, const char* name, const char* set_role, const CheckOptions& opt,
                         Bad bad) {
  Scan scan(name, opt);
  const std::size_t n = g.size();
  for (std::size_t m = 0; m < subsets(g); ++m) {
    const Subset a(static_cast<Mask>(m));
    for (std::size_t p = 0; p < n; ++p) {
      if (a.contains(p)) continue;
      if (bad(g[a], g[a.with(p)])) scan.violation({{set_part(set_role, a), elem_part("p", p)}});
    }
  }
  return std::move(scan).finish();
}

// Monotonicity over covers, witness as the pair (A, B = A+p).
AxiomVerdict scan_monotone(const RankTable& g, const char* name, const CheckOptions& opt) {
  Scan scan(name, opt);
  const std::size_t n = g.size();
  for (std::size_t m = 0; m < subsets(g); ++m) {
    const Subset a(static_cast<Mask>(m));
    for (std::size_t p = 0; p < n; ++p) {
      if (!a.contains(p) && g[a] > g[a.with(p)]) {
        scan.violation({{set_part("A", a), set_part("B", a.with(p))}});
      }
    }
  }
  return std::move(scan).finish();
}

// If r(A) = r(A+p1) = r(A+p2) then r(A+p1+p2) = r(A).
AxiomVerdict scan_local_semimodular(const RankTable& g, const char* name, const CheckOptions& opt) {
  Scan scan(name, opt);
  const std::size_t n = g.size();
  for (std::size_t m = 0; m < subsets(g); ++m) {
    const Subset a(static_cast<Mask>(m));
    const Rank r = g[a];
    for (std::size_t p1 = 0; p1 < n; ++p1) {
      if (a.contains(p1) || g[a.with(p1)] != r) continue;
      for (std::size_t p2 = p1 + 1; p2 < n; ++p2) {
        if (a.contains(p2) || g[a.with(p2)] != r) continue;
        if (g[a.with(p1).with(p2)] != r) {
          scan.violation({{set_part("A", a), elem_part("p1", p1), elem_part("p2", p2)}});
        }
      }
    }
  }
  return std::move(scan).finish();
}

// r(A & B) + r(A | B) <= r(A) + r(B) over all unordered pairs.
AxiomVerdict scan_semimodular(const RankTable& g, const char* name, const CheckOptions& opt) {
  Scan scan(name, opt);
  const std::size_t count = subsets(g);
  for (std::size_t ma = 0; ma < count; ++ma) {
    const Subset a(static_cast<Mask>(ma));
    for (std::size_t mb = ma + 1; mb < count; ++mb) {
      const Subset b(static_cast<Mask>(mb));
      if (checked_add(g[a & b], g[a | b]) > checked_add(g[a], g[b])) scan.violation(set_pair("A", "B", a, b));
    }
  }
  return std::move(scan).finish();
}

AxiomVerdict scan_rank_s_maximum(const RankTable& g, const char* name, const CheckOptions& opt) {
  Scan scan(name, opt);
  const Rank top = g.rank_of_ground();
  for (std::size_t m = 0; m < subsets(g); ++m) {
    const Subset b(static_cast<Mask>(m));
    if (g[b] > top) scan.violation({{set_part("B", b)}});
  }
  return std::move(scan).finish();
}

// If r(B-p) = r(B-q) = r(B) - 1 then r(B-p-q) = r(B) - 2.
AxiomVerdict scan_local_rank_decrease(const RankTable& g, const char* name, const CheckOptions& opt) {
  Scan scan(name, opt);
  for (std::size_t m = 0; m < subsets(g); ++m) {
    const Subset b(static_cast<Mask>(m));
    const Rank r = g[b];
    const Rank one_less = checked_sub(r, 1);
    const Rank two_less = checked_sub(r, 2);
    const auto elems = b.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const std::size_t p = elems[i];
      if (g[b.without(p)] != one_less) continue;
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        const std::size_t q = elems[j];
        if (g[b.without(q)] != one_less) continue;
        if (g[b.without(p).without(q)] != two_less) {
          scan.violation({{set_part("B", b), elem_part("p", p), elem_part("q", q)}});
        }
      }
    }
  }
  return std::move(scan).finish();
}

AxiomVerdict scan_union_closed(const RankTable& g, const char* name, const CheckOptions& opt) {
  Scan scan(name, opt);
  const auto family = FeasibleFamily::of(g);
  const auto& f = family.members();
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!family.contains(f[i] | f[j])) scan.violation(set_pair("F1", "F2", f[i], f[j]));
    }
  }
  return std::move(scan).finish();
}

// |A| - r(A) <= |B| - r(B) for every A contained in B, by direct pair scan.
AxiomVerdict scan_monotone_nullity(const RankTable& g, const char* name, const CheckOptions& opt) {
  Scan scan(name, opt);
  for (std::size_t mb = 0; mb < subsets(g); ++mb) {
    const Subset b(static_cast<Mask>(mb));
    const Rank nb = static_cast<Rank>(b.size()) - g[b];
    for (Mask sub = b.bits();; sub = (sub - 1) & b.bits()) {
      const Subset a(sub);
      if (static_cast<Rank>(a.size()) - g[a] > nb) scan.violation({{set_part("A", a), set_part("B", b)}});
      if (sub == 0) break;
    }
  }
  return std::move(scan).finish();
}

void add_greedoid_verdicts(AxiomReport& report, const RankTable& g, const CheckOptions& opt) {
  report.verdicts.push_back(scan_nonnegative(g, "nonnegative", opt));
  report.verdicts.push_back(scan_equals_zero_at_empty(g, "Gr0", opt));
  report.verdicts.push_back(scan_covers(g, "Gr1", "A", opt, [](Rank ra, Rank rap) { return ra > rap; }));
  report.verdicts.push_back(scan_subcardinal(g, "Gr2", opt));
  report.verdicts.push_back(scan_local_semimodular(g, "Gr3", opt));
}

}  // namespace

AxiomReport check_matroid(const RankTable& g, const CheckOptions& opt) {
  AxiomReport report;
  report.system = AxiomSystem::matroid;
  report.verdicts.push_back(scan_equals_zero_at_empty(g, "R0", opt));
  report.verdicts.push_back(
      scan_covers(g, "R1", "A", opt, [](Rank ra, Rank rap) { return rap < ra || rap > checked_add(ra, 1); }));

  AxiomVerdict local = scan_local_semimodular(g, "R2'", opt);
  AxiomVerdict full;
  if (g.size() <= opt.exact_semimodular_limit) {
    full = scan_semimodular(g, "R2", opt);
  } else {
    full.axiom = "R2";
    full.evaluated = false;
    report.notes.push_back("R2 not scanned above " + std::to_string(opt.exact_semimodular_limit) +
                           " elements; R2' decides semimodularity");
  }
  const bool r0_r1 = report.verdicts[0].holds && report.verdicts[1].holds;
  report.verdicts.push_back(full);
  report.verdicts.push_back(local);

  Scan agree("R2==R2'", opt);
  if (full.evaluated && r0_r1 && full.holds != local.holds) {
    const auto& source = full.holds ? local : full;
    agree.violation(source.witnesses.empty() ? Witness{} : source.witnesses.front());
  }
  report.diagnostics.push_back(std::move(agree).finish());
  return report;
}

AxiomReport check_greedoid(const RankTable& g, const CheckOptions& opt) {
  AxiomReport report;
  report.system = AxiomSystem::greedoid;
  add_greedoid_verdicts(report, g, opt);
  return report;
}

AxiomReport check_dual_greedoid(const RankTable& g, const CheckOptions& opt) {
  AxiomReport report;
  report.system = AxiomSystem::dual_greedoid;
  report.verdicts.push_back(scan_equals_zero_at_empty(g, "Gr0*", opt));
  report.verdicts.push_back(scan_covers(g, "Gr1*", "B", opt, [](Rank rb, Rank rbp) { return rbp > checked_add(rb, 1); }));
  report.verdicts.push_back(scan_rank_s_maximum(g, "Gr2*", opt));
  report.verdicts.push_back(scan_local_rank_decrease(g, "Gr3*", opt));
  return report;
}

AxiomReport check_antimatroid(const RankTable& g, const CheckOptions& opt) {
  AxiomReport report;
  report.system = AxiomSystem::antimatroid;
  add_greedoid_verdicts(report, g, opt);
  report.verdicts.push_back(scan_union_closed(g, "union-closed", opt));
  return report;
}

AxiomReport check_demimatroid_triple(const RankTable& r, const RankTable& s, const CheckOptions& opt) {
  if (!(r.ground() == s.ground())) throw InputError("demi-matroid tables have different ground sets");
  AxiomReport report;
  report.system = AxiomSystem::demimatroid_triple;
  report.verdicts.push_back(scan_nonnegative(r, "nonnegative(r)", opt));
  report.verdicts.push_back(scan_nonnegative(s, "nonnegative(s)", opt));
  report.verdicts.push_back(scan_subcardinal(r, "(1) subcardinal(r)", opt));
  report.verdicts.push_back(scan_subcardinal(s, "(1) subcardinal(s)", opt));
  report.verdicts.push_back(scan_monotone(r, "(2) monotone(r)", opt));
  report.verdicts.push_back(scan_monotone(s, "(2) monotone(s)", opt));

  const auto& ground = r.ground();
  const Rank n = static_cast<Rank>(ground.size());
  // |S-A| - r(S-A) = s(S) - s(A), and the same with r and s exchanged.
  auto identity = [&](const RankTable& x, const RankTable& y, const char* name) {
    Scan scan(name, opt);
    for (std::size_t m = 0; m < ground.subset_count(); ++m) {
      const Subset a(static_cast<Mask>(m));
      const Subset rest = ground.complement(a);
      const Rank lhs = checked_sub(n - static_cast<Rank>(a.size()), x[rest]);
      const Rank rhs = checked_sub(y.rank_of_ground(), y[a]);
      if (lhs != rhs) scan.violation({{set_part("A", a)}});
    }
    return std::move(scan).finish();
  };
  report.verdicts.push_back(identity(r, s, "(3)"));
  report.verdicts.push_back(identity(s, r, "(3')"));
  report.facts["s=r*"] = s == dual(r);
  return report;
}

AxiomReport check_demimatroid_characterization(const RankTable& g, const CheckOptions& opt) {
  AxiomReport report;
  report.system = AxiomSystem::demimatroid_characterization;

  Scan a_scan("(a)", opt);
  for (std::size_t m = 0; m < subsets(g); ++m) {
    const Subset a(static_cast<Mask>(m));
    if (g[a] < 0 || g[a] > static_cast<Rank>(a.size())) a_scan.violation({{set_part("A", a)}});
  }
  report.verdicts.push_back(std::move(a_scan).finish());
  report.verdicts.push_back(scan_monotone(g, "(b)", opt));
  report.verdicts.push_back(scan_covers(g, "(c)", "A", opt, [](Rank ra, Rank rap) { return rap > checked_add(ra, 1); }));
  report.diagnostics.push_back(scan_monotone_nullity(g, "MN", opt));
  return report;
}

FeasibleFamily::FeasibleFamily(GroundSet ground, std::vector<Subset> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Subset f : members_) {
    if (!ground_.owns(f)) throw InputError("feasible set is not over the ground set");
  }
}

FeasibleFamily FeasibleFamily::of(const RankTable& g) {
  std::vector<Subset> members;
  for (std::size_t m = 0; m < g.ground().subset_count(); ++m) {
    const Subset a(static_cast<Mask>(m));
    if (g[a] == static_cast<Rank>(a.size())) members.push_back(a);
  }
  return FeasibleFamily(g.ground(), std::move(members));
}

bool FeasibleFamily::contains(Subset f) const { return std::binary_search(members_.begin(), members_.end(), f); }

RankTable FeasibleFamily::induced_rank() const {
  const std::size_t count = ground_.subset_count();
  std::vector<Rank> best(count, 0);
  std::vector<bool> member(count, false);
  for (Subset f : members_) member[f.bits()] = true;
  // Masks increase, so every A - p is final before A.
  for (std::size_t m = 0; m < count; ++m) {
    const Subset a(static_cast<Mask>(m));
    if (member[m]) {
      best[m] = static_cast<Rank>(a.size());
      continue;
    }
    Rank r = 0;
    for (std::size_t p : a.elements()) r = std::max(r, best[a.without(p).bits()]);
    best[m] = r;
  }
  return RankTable(ground_, std::move(best));
}

FeasibleDescriptors feasible_descriptors(const RankTable& g) {
  FeasibleDescriptors out{FeasibleFamily::of(g), {}, {}, false, {}};
  const Rank top = g.rank_of_ground();
  for (std::size_t m = 0; m < g.ground().subset_count(); ++m) {
    const Subset a(static_cast<Mask>(m));
    if (g[a] == top) {
      out.spanning.push_back(a);
      if (out.feasible.contains(a)) out.bases.push_back(a);
    }
  }
  out.full = top == static_cast<Rank>(g.size());
  Subset covered;
  for (Subset f : out.feasible.members()) covered = covered | f;
  out.loops = g.ground().complement(covered);
  return out;
}

}  // namespace rankdual
