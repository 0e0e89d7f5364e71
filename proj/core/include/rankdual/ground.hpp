#pragma once

// Ground sets, subsets as bitmasks, and explicit rank tables.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rankdual {

using Rank = std::int64_t;
using Mask = std::uint32_t;

// Explicit tables hold 2^n entries; 24 elements is 16M ranks.
inline constexpr std::size_t kMaxGroundSize = 24;

/// Bad caller input: unknown labels, non-total tables, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer overflow in rank or coefficient arithmetic.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Rank checked_add(Rank a, Rank b) {
  Rank out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("rank addition overflow");
  return out;
}

inline Rank checked_sub(Rank a, Rank b) {
  Rank out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("rank subtraction overflow");
  return out;
}

inline Rank checked_mul(Rank a, Rank b) {
  Rank out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("rank multiplication overflow");
  return out;
}

/// A subset of some ground set, stored as a bitmask over label positions.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(Mask bits) : bits_(bits) {}

  static constexpr Subset singleton(std::size_t index) { return Subset(Mask{1} << index); }

  constexpr Mask bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t index) const { return (bits_ >> index) & 1U; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr Subset with(std::size_t index) const { return Subset(bits_ | (Mask{1} << index)); }
  constexpr Subset without(std::size_t index) const { return Subset(bits_ & ~(Mask{1} << index)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

  /// Element indices in increasing order.
  std::vector<std::size_t> elements() const;

 private:
  Mask bits_ = 0;
};

/// Witness ordering: smaller cardinality first, then smaller mask.
constexpr bool witness_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

/// An ordered set of distinct element labels. Label order fixes bit positions.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws InputError for unknown labels.
  std::size_t index_of(std::string_view label) const;

  Subset full() const { return Subset(full_mask(size())); }
  Subset complement(Subset a) const { return full() - a; }
  std::size_t subset_count() const { return std::size_t{1} << size(); }
  bool owns(Subset a) const { return a.is_subset_of(full()); }

  /// Throws InputError on unknown or repeated labels.
  Subset subset_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(Subset a) const;
  /// "{a,b}" style rendering in label order.
  std::string format(Subset a) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

  static constexpr Mask full_mask(std::size_t n) {
    return n >= 32 ? ~Mask{0} : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  }

 private:
  std::vector<std::string> labels_;
};

/// Bits of `local` (a subset of an m-element sub-ground) spread onto the
/// positions listed in `positions` of the parent ground set.
Mask spread_bits(Mask local, std::span<const std::size_t> positions);

/// A total integer-valued function on all subsets of a ground set.
/// Immutable after construction.
class RankTable {
 public:
  RankTable() : values_(1, 0) {}
  /// Takes ownership of 2^n values indexed by mask.
  RankTable(GroundSet ground, std::vector<Rank> values);

  template <class Fn>
  static RankTable from_function(GroundSet ground, Fn&& rank_of) {
    if (ground.size() > kMaxGroundSize) throw InputError("ground set exceeds 24 elements");
    std::vector<Rank> values(ground.subset_count());
    for (std::size_t m = 0; m < values.size(); ++m) values[m] = rank_of(Subset(static_cast<Mask>(m)));
    return RankTable(std::move(ground), std::move(values));
  }

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  std::span<const Rank> values() const { return values_; }

  Rank operator[](Subset a) const { return values_[a.bits()]; }
  Rank at(Subset a) const;
  Rank rank_of_ground() const { return values_.back(); }

  friend bool operator==(const RankTable&, const RankTable&) = default;

 private:
  GroundSet ground_;
  std::vector<Rank> values_;
};

/// One rank assignment, subset given by labels in any order.
struct LabeledEntry {
  std::vector<std::string> subset;
  Rank rank = 0;
};

/// Builds a table from one entry per subset. Missing, duplicate, or
/// unknown-label entries are InputErrors; nothing is defaulted.
RankTable build_rank_table(const GroundSet& ground, std::span<const LabeledEntry> entries);
RankTable build_rank_table(const GroundSet& ground, std::span<const std::pair<Subset, Rank>> entries);

/// Outcome of one property scan; `holds` is false iff `witness` is non-empty.
struct PropertyFlag {
  bool holds = true;
  std::vector<Subset> witness;
};

struct ValidationReport {
  bool normalized = true;
  PropertyFlag subcardinal;   // r(A) <= |A|
  PropertyFlag nonnegative;   // r(A) >= 0
  PropertyFlag monotone;      // witness is the pair (A, A+p)
  PropertyFlag rank_s_maximum;  // r(A) <= r(S)

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Each failed flag carries the smallest violating subset (or cover pair).
ValidationReport validate(const RankTable& table);

}  // namespace rankdual
