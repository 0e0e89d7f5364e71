#pragma once

// Exhaustive enumeration of small rank tables and the named verification
// suites that machine-check the duality, polynomial, greedoid, antimatroid,
// and demi-matroid results on every small instance.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rankdual/ground.hpp"
#include "rankdual/structures.hpp"

namespace rankdual {

enum class TableConstraint {
  normalized_subcardinal_monotone,  // r(empty)=0, 0 <= r(A) <= |A|, monotone
  greedoid,
  matroid,
  full_antimatroid,
  window,  // every value in [low, high], no other condition
};

TableConstraint parse_constraint(std::string_view name);
std::string_view to_string(TableConstraint constraint);

inline constexpr std::size_t kMaxEnumerationSize = 4;

struct EnumSpec {
  std::size_t n = 0;
  TableConstraint constraint = TableConstraint::normalized_subcardinal_monotone;
  // Only used by TableConstraint::window.
  Rank low = -1;
  Rank high = 3;
};

/// Labels "a", "b", ... for generated tables.
GroundSet letter_ground(std::size_t n);

/// Calls `visit` once per table satisfying the constraint, in a fixed order:
/// ranks are assigned mask by mask in increasing order, smallest value first.
/// Throws InputError when n exceeds kMaxEnumerationSize (or the window search
/// space is too large).
void enumerate_tables(const EnumSpec& spec, const std::function<void(const RankTable&)>& visit);
std::uint64_t count_tables(const EnumSpec& spec);

/// Independent census: walks every normalized subcardinal monotone table
/// (no constraint-specific pruning) and keeps those the axiom checkers accept.
std::uint64_t count_tables_by_filter(const EnumSpec& spec);

/// One-line form "a,b:0,1,0,1" (labels, then ranks in mask order).
std::string describe_table(const RankTable& g);

/// r(empty) = 0, every other rank uniform in [low, high].
RankTable random_normalized_table(std::mt19937_64& rng, std::size_t n, Rank low, Rank high);
/// Monotone with 0 <= r(A) <= |A|; each rank uniform over the values allowed
/// by the ranks of its covers.
RankTable random_monotone_subcardinal(std::mt19937_64& rng, std::size_t n);

/// Every connected simple graph on vertices v0..v(k-1) rooted at v0 with at
/// most `max_edges` edges (labeled graphs, edges e0, e1, ...).
void for_each_rooted_graph(std::size_t max_edges, const std::function<void(const RootedGraph&)>& visit);
/// One tree per isomorphism class with at most `max_edges` edges; edges are
/// labeled a, b, c, ...
void for_each_tree(std::size_t max_edges, const std::function<void(const Tree&)>& visit);

/// key=value parameters for a suite, e.g. "n=3,count=500".
class SuiteParams {
 public:
  SuiteParams() = default;
  /// Parses "k=v,k=v"; throws InputError on malformed pairs.
  static SuiteParams parse(std::string_view text);

  void set(std::string key, std::string value);
  bool has(std::string_view key) const;
  std::int64_t integer(std::string_view key, std::int64_t fallback) const;
  std::size_t size(std::string_view key, std::size_t fallback) const;
  bool flag(std::string_view key, bool fallback) const;
  const std::map<std::string, std::string, std::less<>>& values() const { return values_; }

  std::optional<std::uint64_t> seed;

  /// Integer parse shared by the getters; throws InputError naming `key`.
  static std::int64_t integer_from(std::string_view text, std::string_view key);

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

struct SuiteFailure {
  std::string instance;
  std::string assertion;
  std::string witness;

  friend bool operator==(const SuiteFailure&, const SuiteFailure&) = default;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t instances_checked = 0;
  /// Every failure counts here; `failures` keeps at most max_failures of them.
  std::uint64_t failure_count = 0;
  std::vector<SuiteFailure> failures;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return failure_count == 0; }
  /// Line-oriented report; elapsed time only when asked, so reports are
  /// byte-identical across reruns by default.
  std::string to_text(bool include_timing = false) const;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  bool randomized = false;
  std::vector<std::string> params;  // accepted keys
};

const std::vector<SuiteInfo>& suite_catalog();

/// Runs a named suite. Randomized suites require params.seed. Common keys:
/// fail_fast (default 0), max_failures (default 100), threads (default 1).
/// Throws InputError for unknown suites, unknown keys, or a missing seed.
SuiteResult run_suite(std::string_view name, const SuiteParams& params);

}  // namespace rankdual
