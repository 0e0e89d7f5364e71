#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "rankdual/axioms.hpp"
#include "rankdual/verify.hpp"

namespace rankdual {

TableConstraint parse_constraint(std::string_view name) {
  if (name == "all-normalized-subcardinal-monotone") return TableConstraint::normalized_subcardinal_monotone;
  if (name == "greedoid") return TableConstraint::greedoid;
  if (name == "matroid") return TableConstraint::matroid;
  if (name == "full-antimatroid") return TableConstraint::full_antimatroid;
  if (name == "window") return TableConstraint::window;
  throw InputError("unknown constraint '" + std::string(name) +
                   "' (expected all-normalized-subcardinal-monotone, greedoid, matroid, full-antimatroid, window)");
}

std::string_view to_string(TableConstraint constraint) {
  switch (constraint) {
    case TableConstraint::normalized_subcardinal_monotone: return "all-normalized-subcardinal-monotone";
    case TableConstraint::greedoid: return "greedoid";
    case TableConstraint::matroid: return "matroid";
    case TableConstraint::full_antimatroid: return "full-antimatroid";
    case TableConstraint::window: return "window";
  }
  return "?";
}

GroundSet letter_ground(std::size_t n) {
  if (n > kMaxGroundSize) throw InputError("letter ground limited to 24 elements");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(labels));
}

std::string describe_table(const RankTable& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0) out += ',';
    out += g.ground().label(i);
  }
  out += ':';
  bool first = true;
  for (Rank r : g.values()) {
    if (!first) out += ',';
    out += std::to_string(r);
    first = false;
  }
  return out;
}

namespace {

constexpr std::uint64_t kMaxWindowSpace = std::uint64_t{1} << 24;

void check_window(const EnumSpec& spec) {
  if (spec.high < spec.low) throw InputError("window high is below low");
  const double width = static_cast<double>(spec.high - spec.low + 1);
  const double space = std::pow(width, static_cast<double>(std::size_t{1} << spec.n));
  if (space > static_cast<double>(kMaxWindowSpace)) {
    throw InputError("window enumeration space " + std::to_string(static_cast<long double>(space)) +
                     " is too large; shrink n or the window");
  }
}

class Enumerator {
 public:
  Enumerator(const EnumSpec& spec, const std::function<void(const RankTable&)>& visit)
      : spec_(spec),
        visit_(visit),
        ground_(letter_ground(spec.n)),
        count_(std::size_t{1} << spec.n),
        values_(count_, 0) {}

  void run() { assign(0); }

 private:
  bool local_semimodular_at(Mask m) const {
    // Every (A, p1, p2) with A + p1 + p2 = m is complete once m is assigned.
    for (Mask x = m; x != 0; x &= x - 1) {
      const Mask p1 = x & (~x + 1);
      for (Mask y = x & (x - 1); y != 0; y &= y - 1) {
        const Mask p2 = y & (~y + 1);
        const Mask a = m & ~p1 & ~p2;
        const Rank r = values_[a];
        if (values_[a | p1] == r && values_[a | p2] == r && values_[m] != r) return false;
      }
    }
    return true;
  }

  bool union_closed() const {
    std::vector<Mask> feasible;
    for (std::size_t m = 0; m < count_; ++m) {
      if (values_[m] == std::popcount(static_cast<Mask>(m))) feasible.push_back(static_cast<Mask>(m));
    }
    for (std::size_t i = 0; i < feasible.size(); ++i) {
      for (std::size_t j = i + 1; j < feasible.size(); ++j) {
        const Mask u = feasible[i] | feasible[j];
        if (values_[u] != std::popcount(u)) return false;
      }
    }
    return true;
  }

  void assign(std::size_t index) {
    if (index == count_) {
      if (spec_.constraint == TableConstraint::full_antimatroid &&
          (values_.back() != static_cast<Rank>(spec_.n) || !union_closed())) {
        return;
      }
      visit_(RankTable(ground_, values_));
      return;
    }
    const Mask m = static_cast<Mask>(index);
    Rank low = spec_.low;
    Rank high = spec_.high;
    if (spec_.constraint != TableConstraint::window) {
      low = 0;
      high = std::popcount(m);
      Rank below_min = high;
      for (Mask x = m; x != 0; x &= x - 1) {
        const Rank r = values_[m & ~(x & (~x + 1))];
        low = std::max(low, r);
        below_min = std::min(below_min, r);
      }
      if (spec_.constraint == TableConstraint::matroid && m != 0) high = std::min(high, below_min + 1);
    }
    const bool local = spec_.constraint == TableConstraint::greedoid ||
                       spec_.constraint == TableConstraint::matroid ||
                       spec_.constraint == TableConstraint::full_antimatroid;
    for (Rank v = low; v <= high; ++v) {
      values_[m] = v;
      if (local && !local_semimodular_at(m)) continue;
      assign(index + 1);
    }
  }

  const EnumSpec& spec_;
  const std::function<void(const RankTable&)>& visit_;
  GroundSet ground_;
  std::size_t count_;
  std::vector<Rank> values_;
};

}  // namespace

void enumerate_tables(const EnumSpec& spec, const std::function<void(const RankTable&)>& visit) {
  if (spec.n > kMaxEnumerationSize) {
    throw InputError("exhaustive enumeration supports n <= " + std::to_string(kMaxEnumerationSize) + ", got " +
                     std::to_string(spec.n));
  }
  if (spec.constraint == TableConstraint::window) check_window(spec);
  Enumerator(spec, visit).run();
}

std::uint64_t count_tables(const EnumSpec& spec) {
  std::uint64_t count = 0;
  enumerate_tables(spec, [&](const RankTable&) { ++count; });
  return count;
}

std::uint64_t count_tables_by_filter(const EnumSpec& spec) {
  if (spec.n > kMaxEnumerationSize) throw InputError("exhaustive enumeration supports n <= 4");
  std::uint64_t count = 0;
  if (spec.constraint == TableConstraint::window) {
    // Plain odometer over the window.
    check_window(spec);
    std::vector<Rank> values(std::size_t{1} << spec.n, spec.low);
    while (true) {
      ++count;
      std::size_t i = 0;
      while (i < values.size() && values[i] == spec.high) values[i++] = spec.low;
      if (i == values.size()) break;
      ++values[i];
    }
    return count;
  }
  // Unpruned walk: each rank ranges over [0, |A|] independently, then the
  // normalization/monotonicity filter and the checker decide membership.
  const GroundSet ground = letter_ground(spec.n);
  const std::size_t total = std::size_t{1} << spec.n;
  std::vector<Rank> values(total, 0);
  while (true) {
    RankTable table(ground, values);
    const auto report = validate(table);
    if (report.normalized && report.monotone.holds && report.subcardinal.holds && report.nonnegative.holds) {
      bool keep = true;
      switch (spec.constraint) {
        case TableConstraint::normalized_subcardinal_monotone: break;
        case TableConstraint::greedoid: keep = check_greedoid(table).passed(); break;
        case TableConstraint::matroid: keep = check_matroid(table).passed(); break;
        case TableConstraint::full_antimatroid:
          keep = table.rank_of_ground() == static_cast<Rank>(spec.n) && check_antimatroid(table).passed();
          break;
        case TableConstraint::window: break;
      }
      if (keep) ++count;
    }
    std::size_t i = 0;
    while (i < total && values[i] == std::popcount(static_cast<Mask>(i))) values[i++] = 0;
    if (i == total) break;
    ++values[i];
  }
  return count;
}

RankTable random_normalized_table(std::mt19937_64& rng, std::size_t n, Rank low, Rank high) {
  if (high < low) throw InputError("random window high is below low");
  std::uniform_int_distribution<Rank> dist(low, high);
  std::vector<Rank> values(std::size_t{1} << n, 0);
  for (std::size_t m = 1; m < values.size(); ++m) values[m] = dist(rng);
  return RankTable(letter_ground(n), std::move(values));
}

RankTable random_monotone_subcardinal(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rank> values(std::size_t{1} << n, 0);
  for (std::size_t m = 1; m < values.size(); ++m) {
    const Mask mask = static_cast<Mask>(m);
    Rank low = 0;
    for (Mask x = mask; x != 0; x &= x - 1) low = std::max(low, values[mask & ~(x & (~x + 1))]);
    std::uniform_int_distribution<Rank> dist(low, std::popcount(mask));
    values[m] = dist(rng);
  }
  return RankTable(letter_ground(n), std::move(values));
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

void for_each_rooted_graph(std::size_t max_edges, const std::function<void(const RootedGraph&)>& visit) {
  if (max_edges > kMaxStructureEdges) throw InputError("rooted graph census limited to 20 edges");
  for (std::size_t v = 1; v <= max_edges + 1; ++v) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i + 1; j < v; ++j) pairs.emplace_back(i, j);
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < v; ++i) names.push_back("v" + std::to_string(i));

    const std::size_t k_max = std::min(max_edges, pairs.size());
    for (std::size_t k = v - 1; k <= k_max; ++k) {
      std::vector<std::size_t> pick(k);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        std::vector<std::size_t> parent(v);
        std::iota(parent.begin(), parent.end(), 0);
        std::size_t components = v;
        for (std::size_t idx : pick) {
          auto a = find_root(parent, pairs[idx].first);
          auto b = find_root(parent, pairs[idx].second);
          if (a != b) {
            parent[a] = b;
            --components;
          }
        }
        if (components == 1) {
          std::vector<LabeledEdge> edges;
          for (std::size_t e = 0; e < k; ++e) {
            const auto [x, y] = pairs[pick[e]];
            edges.push_back({"e" + std::to_string(e), names[x], names[y]});
          }
          visit(RootedGraph(names, names[0], std::move(edges)));
        }
        // Next k-combination of pairs in lexicographic order.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == pairs.size() - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
}

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

std::string rooted_code(const Adjacency& adj, std::size_t x, std::size_t parent) {
  std::vector<std::string> children;
  for (std::size_t y : adj[x]) {
    if (y != parent) children.push_back(rooted_code(adj, y, x));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

std::string canonical_code(const Adjacency& adj) {
  std::string best;
  for (std::size_t r = 0; r < adj.size(); ++r) {
    std::string code = rooted_code(adj, r, adj.size());
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

void for_each_tree(std::size_t max_edges, const std::function<void(const Tree&)>& visit) {
  if (max_edges > 23) throw InputError("tree census limited to 23 edges");
  // Trees of each size as edge lists, one per isomorphism class.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> level{{}};
  for (std::size_t edges = 0; edges <= max_edges; ++edges) {
    for (const auto& tree_edges : level) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i <= edges; ++i) names.push_back("t" + std::to_string(i));
      std::vector<LabeledEdge> labeled;
      for (std::size_t e = 0; e < tree_edges.size(); ++e) {
        labeled.push_back({std::string(1, static_cast<char>('a' + e)), names[tree_edges[e].first],
                           names[tree_edges[e].second]});
      }
      visit(Tree(names, std::move(labeled)));
    }
    if (edges == max_edges) break;
    std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> next;
    for (const auto& tree_edges : level) {
      const std::size_t v = edges + 1;
      for (std::size_t attach = 0; attach < v; ++attach) {
        auto grown = tree_edges;
        grown.emplace_back(attach, v);
        Adjacency adj(v + 1);
        for (auto [x, y] : grown) {
          adj[x].push_back(y);
          adj[y].push_back(x);
        }
        next.emplace(canonical_code(adj), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, tree_edges] : next) level.push_back(std::move(tree_edges));
  }
}

}  // namespace rankdual
