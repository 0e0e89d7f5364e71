#pragma once

// Generalized duality, deletion, contraction, minors, and direct sums on
// arbitrary integer rank tables.

#include <string_view>

#include "rankdual/ground.hpp"

namespace rankdual {

/// r*(A) = |A| + r(S - A) - r(S). Total for any table; an involution only
/// when r(empty) = 0.
RankTable dual(const RankTable& g);

/// Restriction of r to subsets of S - p.
RankTable delete_element(const RankTable& g, std::size_t p);
RankTable delete_element(const RankTable& g, std::string_view label);

/// r(A + p) - r(p) on S - p. Requires r(empty) = 0. The result is checked
/// against dual(delete(dual(g), p)); a mismatch throws std::logic_error.
RankTable contract(const RankTable& g, std::size_t p);
RankTable contract(const RankTable& g, std::string_view label);

/// Contract-then-delete specification. C and D must be disjoint.
struct MinorSpec {
  Subset contracted;
  Subset deleted;
};

/// Table on S - C - D with rank r(A + C) - r(C). Requires r(empty) = 0.
RankTable minor(const RankTable& g, const MinorSpec& spec);

/// Rank-additive union over disjoint label sets; g1's labels come first.
RankTable direct_sum(const RankTable& g1, const RankTable& g2);

/// Ground set with the listed positions removed, order preserved.
GroundSet remove_positions(const GroundSet& ground, Subset removed);

}  // namespace rankdual
