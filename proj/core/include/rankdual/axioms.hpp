#pragma once

// Axiom-system checkers for rank tables. Every failed axiom carries concrete
// witnesses that can be re-checked by substitution.
//
// Witness order: witnesses are tuples of subsets/elements, compared part by
// part, each part by (cardinality, mask). The first witness of a verdict is
// the smallest violation under that order.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rankdual/ground.hpp"

namespace rankdual {

enum class AxiomSystem {
  matroid,
  greedoid,
  dual_greedoid,
  antimatroid,
  demimatroid_triple,
  demimatroid_characterization,
};

std::string_view to_string(AxiomSystem system);

struct WitnessPart {
  std::string role;
  Subset value;
  bool element = false;  // printed as a bare label rather than a set

  friend bool operator==(const WitnessPart&, const WitnessPart&) = default;
};

struct Witness {
  std::vector<WitnessPart> parts;

  /// Part value by role name; throws std::out_of_range if absent.
  Subset get(std::string_view role) const;
  /// "A={b,c} p=a"
  std::string describe(const GroundSet& ground) const;

  friend bool operator==(const Witness&, const Witness&) = default;
};

bool witness_before(const Witness& a, const Witness& b);

struct AxiomVerdict {
  std::string axiom;
  bool holds = true;
  /// False when the scan was skipped (size limits); such verdicts hold vacuously.
  bool evaluated = true;
  std::size_t violations = 0;
  /// Smallest violations first, at most CheckOptions::max_witnesses of them.
  std::vector<Witness> witnesses;
};

struct AxiomReport {
  AxiomSystem system{};
  std::vector<AxiomVerdict> verdicts;
  /// Related properties reported alongside but not part of the pass/fail.
  std::vector<AxiomVerdict> diagnostics;
  std::map<std::string, bool> facts;
  std::vector<std::string> notes;

  bool passed() const;
  /// Looks in verdicts then diagnostics; throws std::out_of_range if absent.
  const AxiomVerdict& verdict(std::string_view axiom) const;
  /// One line per verdict, then diagnostics, facts, notes, and "result: PASS|FAIL".
  std::string to_text(const GroundSet& ground) const;
};

struct CheckOptions {
  std::size_t max_witnesses = 1;
  /// Above this size the all-pairs semimodularity scan is skipped and the
  /// local form stands in for it.
  std::size_t exact_semimodular_limit = 12;
};

/// R0, R1 (both inequalities), R2 over all pairs, R2' over all (A, p1, p2).
/// Diagnostic "R2==R2'" records whether the two forms agree under R0 and R1.
AxiomReport check_matroid(const RankTable& g, const CheckOptions& options = {});

/// Codomain nonnegativity, Gr0 normalization, Gr1 increasing, Gr2 subcardinal,
/// Gr3 local semimodularity.
AxiomReport check_greedoid(const RankTable& g, const CheckOptions& options = {});

/// Gr0*..Gr3* evaluated on the given table (pass a dual to test it).
AxiomReport check_dual_greedoid(const RankTable& g, const CheckOptions& options = {});

/// Greedoid axioms plus pairwise union-closure of the feasible family.
AxiomReport check_antimatroid(const RankTable& g, const CheckOptions& options = {});

/// Conditions (1)-(3) of a triple (S, r, s) plus the complementary identity.
/// Fact "s=r*" reports whether s equals dual(r). Throws InputError if the
/// tables are over different ground sets.
AxiomReport check_demimatroid_triple(const RankTable& r, const RankTable& s, const CheckOptions& options = {});

/// Conditions (a) nonnegative+subcardinal, (b) monotone, (c) unit rank
/// increase, whose conjunction is equivalent to (S, r, r*) being a
/// demi-matroid. Diagnostic "MN" is monotone nullity over all pairs A <= B.
AxiomReport check_demimatroid_characterization(const RankTable& g, const CheckOptions& options = {});

/// Sets F with r(F) = |F|, sorted by mask.
class FeasibleFamily {
 public:
  FeasibleFamily(GroundSet ground, std::vector<Subset> members);
  static FeasibleFamily of(const RankTable& g);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& members() const { return members_; }
  bool contains(Subset f) const;

  /// r(A) = largest |F| over members F contained in A (0 if none).
  RankTable induced_rank() const;

  friend bool operator==(const FeasibleFamily&, const FeasibleFamily&) = default;

 private:
  GroundSet ground_;
  std::vector<Subset> members_;
};

struct FeasibleDescriptors {
  FeasibleFamily feasible;
  std::vector<Subset> spanning;  // r(T) = r(S)
  std::vector<Subset> bases;     // feasible and spanning
  bool full = false;             // r(S) = |S|
  Subset loops;                  // elements in no feasible set
};

FeasibleDescriptors feasible_descriptors(const RankTable& g);

}  // namespace rankdual
