#include "rankdual/duality.hpp"

#include <stdexcept>

namespace rankdual {

namespace {

std::vector<std::size_t> kept_positions(const GroundSet& ground, Subset removed) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (!removed.contains(i)) kept.push_back(i);
  }
  return kept;
}

void require_element(const RankTable& g, std::size_t p) {
  if (p >= g.size()) throw InputError("element index " + std::to_string(p) + " out of range");
}

void require_normalized(const RankTable& g, const char* op) {
  if (g[Subset{}] != 0) {
    throw InputError(std::string(op) + " requires r(empty) = 0, got " + std::to_string(g[Subset{}]));
  }
}

RankTable contract_direct(const RankTable& g, std::size_t p) {
  return minor(g, MinorSpec{Subset::singleton(p), Subset{}});
}

}  // namespace

GroundSet remove_positions(const GroundSet& ground, Subset removed) {
  std::vector<std::string> labels;
  for (std::size_t i : kept_positions(ground, removed)) labels.push_back(ground.label(i));
  return GroundSet(std::move(labels));
}

RankTable dual(const RankTable& g) {
  const auto& ground = g.ground();
  const Rank top = g.rank_of_ground();
  return RankTable::from_function(ground, [&](Subset a) {
    return checked_sub(checked_add(static_cast<Rank>(a.size()), g[ground.complement(a)]), top);
  });
}

RankTable delete_element(const RankTable& g, std::size_t p) {
  require_element(g, p);
  const auto kept = kept_positions(g.ground(), Subset::singleton(p));
  return RankTable::from_function(remove_positions(g.ground(), Subset::singleton(p)),
                                  [&](Subset a) { return g[Subset(spread_bits(a.bits(), kept))]; });
}

RankTable delete_element(const RankTable& g, std::string_view label) {
  return delete_element(g, g.ground().index_of(label));
}

RankTable contract(const RankTable& g, std::size_t p) {
  require_element(g, p);
  require_normalized(g, "contraction");
  RankTable direct = contract_direct(g, p);
  RankTable via_dual = dual(delete_element(dual(g), p));
  if (!(direct == via_dual)) {
    throw std::logic_error("contraction formula disagrees with dual-delete-dual at element '" +
                           g.ground().label(p) + "'");
  }
  return direct;
}

RankTable contract(const RankTable& g, std::string_view label) {
  return contract(g, g.ground().index_of(label));
}

RankTable minor(const RankTable& g, const MinorSpec& spec) {
  const auto& ground = g.ground();
  if (!ground.owns(spec.contracted) || !ground.owns(spec.deleted)) {
    throw InputError("minor sets are not over the ground set");
  }
  if (!(spec.contracted & spec.deleted).empty()) {
    throw InputError("contracted and deleted sets overlap in " + ground.format(spec.contracted & spec.deleted));
  }
  require_normalized(g, "minor");
  const Subset removed = spec.contracted | spec.deleted;
  const auto kept = kept_positions(ground, removed);
  const Rank base = g[spec.contracted];
  return RankTable::from_function(remove_positions(ground, removed), [&](Subset a) {
    return checked_sub(g[Subset(spread_bits(a.bits(), kept)) | spec.contracted], base);
  });
}

RankTable direct_sum(const RankTable& g1, const RankTable& g2) {
  std::vector<std::string> labels = g1.ground().labels();
  for (const auto& l : g2.ground().labels()) {
    if (g1.ground().find(l)) throw InputError("direct sum label collision on '" + l + "'");
    labels.push_back(l);
  }
  if (labels.size() > kMaxGroundSize) throw InputError("direct sum exceeds 24 elements");
  const std::size_t n1 = g1.size();
  const Mask low = GroundSet::full_mask(n1);
  return RankTable::from_function(GroundSet(std::move(labels)), [&](Subset a) {
    return checked_add(g1[Subset(a.bits() & low)], g2[Subset(a.bits() >> n1)]);
  });
}

}  // namespace rankdual
