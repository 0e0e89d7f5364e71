#include "rankdual/tutte.hpp"

#include <bit>
#include <unordered_map>

namespace rankdual {

PivotRule parse_pivot_rule(std::string_view name) {
  if (name == "lowest") return PivotRule::lowest;
  if (name == "highest") return PivotRule::highest;
  if (name == "middle") return PivotRule::middle;
  throw InputError("unknown pivot rule '" + std::string(name) + "' (expected lowest, highest, middle)");
}

std::string_view to_string(PivotRule rule) {
  switch (rule) {
    case PivotRule::lowest: return "lowest";
    case PivotRule::highest: return "highest";
    case PivotRule::middle: return "middle";
  }
  return "?";
}

Exponents corank_nullity(const RankTable& g, Subset a) {
  const Rank r = g[a];
  return {checked_sub(g.rank_of_ground(), r), checked_sub(static_cast<Rank>(a.size()), r)};
}

LaurentPoly2 tutte_subset(const RankTable& g) {
  // Accumulate in a hash map first; the ordered map is only built once.
  struct Hash {
    std::size_t operator()(const Exponents& e) const {
      return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(e.t) * 1000003U ^ static_cast<std::uint64_t>(e.z));
    }
  };
  std::unordered_map<Exponents, LaurentPoly2::Coefficient, Hash> counts;
  for (std::size_t m = 0; m < g.ground().subset_count(); ++m) {
    ++counts[corank_nullity(g, Subset(static_cast<Mask>(m)))];
  }
  LaurentPoly2 out;
  for (const auto& [e, c] : counts) out.add_term(e, c);
  return out;
}

namespace {

std::size_t pick_pivot(Mask remaining, PivotRule rule) {
  switch (rule) {
    case PivotRule::lowest: return static_cast<std::size_t>(std::countr_zero(remaining));
    case PivotRule::highest: return static_cast<std::size_t>(31 - std::countl_zero(remaining));
    case PivotRule::middle: {
      int skip = std::popcount(remaining) / 2;
      Mask m = remaining;
      while (skip-- > 0) m &= m - 1;
      return static_cast<std::size_t>(std::countr_zero(m));
    }
  }
  return static_cast<std::size_t>(std::countr_zero(remaining));
}

class RecursiveEvaluator {
 public:
  RecursiveEvaluator(const RankTable& g, PivotRule rule) : g_(g), rule_(rule) {}

  // Minor with contracted set C and remaining set R has rank
  // A -> r(A + C) - r(C) on subsets A of R.
  const LaurentPoly2& eval(Mask contracted, Mask remaining) {
    const std::uint64_t key = (std::uint64_t{contracted} << 32) | remaining;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    LaurentPoly2 value(1);
    if (remaining != 0) {
      const std::size_t p = pick_pivot(remaining, rule_);
      const Mask bit = Mask{1} << p;
      const Mask rest = remaining & ~bit;
      const Rank base = g_[Subset(contracted)];
      const Rank rank_all = checked_sub(g_[Subset(contracted | remaining)], base);
      const Rank rank_rest = checked_sub(g_[Subset(contracted | rest)], base);
      const Rank rank_p = checked_sub(g_[Subset(contracted | bit)], base);

      value = eval(contracted, rest).scaled({checked_sub(rank_all, rank_rest), 0});
      value += eval(contracted | bit, rest).scaled({0, checked_sub(1, rank_p)});
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  const RankTable& g_;
  PivotRule rule_;
  std::unordered_map<std::uint64_t, LaurentPoly2> memo_;
};

}  // namespace

LaurentPoly2 tutte_recursive(const RankTable& g, PivotRule rule) {
  if (g[Subset{}] != 0) {
    throw InputError("deletion-contraction requires r(empty) = 0, got " + std::to_string(g[Subset{}]));
  }
  RecursiveEvaluator evaluator(g, rule);
  return evaluator.eval(0, g.ground().full().bits());
}

}  // namespace rankdual
