#pragma once

// The generalized two-variable Tutte polynomial
//   f(G; t, z) = sum over A of t^(r(S) - r(A)) z^(|A| - r(A))
// by direct subset expansion and by deletion-contraction.

#include <string_view>

#include "rankdual/ground.hpp"
#include "rankdual/laurent.hpp"

namespace rankdual {

/// How the recursive evaluator picks the element to delete/contract from the
/// remaining ground set. Every rule yields the same polynomial.
enum class PivotRule {
  lowest,   // lowest label position
  highest,  // highest label position
  middle,   // median remaining position
};

PivotRule parse_pivot_rule(std::string_view name);
std::string_view to_string(PivotRule rule);

/// Subset expansion over all 2^n subsets. Defined for any integer table;
/// negative exponents appear when r is not subcardinal or exceeds r(S).
LaurentPoly2 tutte_subset(const RankTable& g);

/// f(G) = t^(r(S) - r(S-p)) f(G-p) + z^(1 - r(p)) f(G/p), memoized over
/// minors keyed by (contracted set, remaining set). Requires r(empty) = 0.
LaurentPoly2 tutte_recursive(const RankTable& g, PivotRule rule = PivotRule::lowest);

/// Corank r(S) - r(A) and nullity |A| - r(A) of one subset.
Exponents corank_nullity(const RankTable& g, Subset a);

}  // namespace rankdual
