#include "rankdual/ground.hpp"

#include <algorithm>
#include <unordered_set>

namespace rankdual {

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxGroundSize) {
    throw InputError("ground set has " + std::to_string(labels_.size()) + " elements; at most 24 are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("empty element label");
    if (!seen.insert(l).second) throw InputError("duplicate element label '" + l + "'");
  }
}

std::optional<std::size_t> GroundSet::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t GroundSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown element '" + std::string(label) + "'");
}

Subset GroundSet::subset_of(std::span<const std::string> labels) const {
  Subset out;
  for (const auto& l : labels) {
    std::size_t i = index_of(l);
    if (out.contains(i)) throw InputError("element '" + l + "' listed twice in one subset");
    out = out.with(i);
  }
  return out;
}

std::vector<std::string> GroundSet::labels_of(Subset a) const {
  std::vector<std::string> out;
  for (std::size_t i : a.elements()) out.push_back(labels_.at(i));
  return out;
}

std::string GroundSet::format(Subset a) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : a.elements()) {
    if (!first) out += ',';
    out += labels_.at(i);
    first = false;
  }
  return out + "}";
}

Mask spread_bits(Mask local, std::span<const std::size_t> positions) {
  Mask out = 0;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if ((local >> k) & 1U) out |= Mask{1} << positions[k];
  }
  return out;
}

RankTable::RankTable(GroundSet ground, std::vector<Rank> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  if (values_.size() != ground_.subset_count()) {
    throw InputError("rank table needs " + std::to_string(ground_.subset_count()) + " entries, got " +
                     std::to_string(values_.size()));
  }
}

Rank RankTable::at(Subset a) const {
  if (!ground_.owns(a)) throw InputError("subset is not over this ground set");
  return values_[a.bits()];
}

namespace {

RankTable assemble(const GroundSet& ground, std::span<const std::pair<Subset, Rank>> entries) {
  const std::size_t count = ground.subset_count();
  std::vector<Rank> values(count, 0);
  std::vector<bool> seen(count, false);
  for (const auto& [subset, rank] : entries) {
    if (!ground.owns(subset)) throw InputError("subset is not over the ground set");
    if (seen[subset.bits()]) throw InputError("duplicate subset entry " + ground.format(subset));
    seen[subset.bits()] = true;
    values[subset.bits()] = rank;
  }
  for (std::size_t m = 0; m < count; ++m) {
    if (!seen[m]) throw InputError("missing subset " + ground.format(Subset(static_cast<Mask>(m))));
  }
  return RankTable(ground, std::move(values));
}

}  // namespace

RankTable build_rank_table(const GroundSet& ground, std::span<const LabeledEntry> entries) {
  std::vector<std::pair<Subset, Rank>> resolved;
  resolved.reserve(entries.size());
  for (const auto& e : entries) resolved.emplace_back(ground.subset_of(e.subset), e.rank);
  return assemble(ground, resolved);
}

RankTable build_rank_table(const GroundSet& ground, std::span<const std::pair<Subset, Rank>> entries) {
  return assemble(ground, entries);
}

namespace {

void note(PropertyFlag& flag, std::vector<Subset> witness) {
  if (flag.holds || std::lexicographical_compare(witness.begin(), witness.end(), flag.witness.begin(),
                                                 flag.witness.end(), witness_less)) {
    flag.holds = false;
    flag.witness = std::move(witness);
  }
}

}  // namespace

ValidationReport validate(const RankTable& table) {
  ValidationReport report;
  const auto& ground = table.ground();
  const std::size_t n = ground.size();
  const Rank top = table.rank_of_ground();
  report.normalized = table[Subset{}] == 0;

  for (std::size_t m = 0; m < ground.subset_count(); ++m) {
    const Subset a(static_cast<Mask>(m));
    const Rank r = table[a];
    if (r > static_cast<Rank>(a.size())) note(report.subcardinal, {a});
    if (r < 0) note(report.nonnegative, {a});
    if (r > top) note(report.rank_s_maximum, {a});
    for (std::size_t p = 0; p < n; ++p) {
      if (a.contains(p)) continue;
      if (table[a.with(p)] < r) note(report.monotone, {a, a.with(p)});
    }
  }
  return report;
}

}  // namespace rankdual
