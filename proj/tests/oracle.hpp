#pragma once

// Reference implementations for tests. Subsets are std::set<std::string>
// and every operation is written straight from its definition, with no
// bitmask arithmetic shared with the library.

#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rankdual/ground.hpp"

namespace oracle {

using Set = std::set<std::string>;
using Value = long long;
using Fn = std::map<Set, Value>;
using Poly = std::map<std::pair<Value, Value>, Value>;  // (t exp, z exp) -> coefficient

struct Structure {
  Set ground;
  Fn rank;
};

inline std::vector<Set> power_set(const Set& ground) {
  std::vector<Set> out{Set{}};
  for (const auto& x : ground) {
    const std::size_t count = out.size();
    for (std::size_t i = 0; i < count; ++i) {
      Set s = out[i];
      s.insert(x);
      out.push_back(std::move(s));
    }
  }
  return out;
}

inline Set minus(const Set& a, const Set& b) {
  Set out;
  for (const auto& x : a) {
    if (b.count(x) == 0) out.insert(x);
  }
  return out;
}

inline Set with(Set a, const std::string& x) {
  a.insert(x);
  return a;
}

inline Set unite(Set a, const Set& b) {
  a.insert(b.begin(), b.end());
  return a;
}

inline bool subset_of(const Set& a, const Set& b) {
  for (const auto& x : a) {
    if (b.count(x) == 0) return false;
  }
  return true;
}

inline Structure from_table(const rankdual::RankTable& g) {
  Structure out;
  for (const auto& l : g.ground().labels()) out.ground.insert(l);
  for (std::size_t m = 0; m < g.ground().subset_count(); ++m) {
    const rankdual::Subset s(static_cast<rankdual::Mask>(m));
    const auto labels = g.ground().labels_of(s);
    out.rank[Set(labels.begin(), labels.end())] = g[s];
  }
  return out;
}

inline Structure dual(const Structure& g) {
  Structure out{g.ground, {}};
  const Value rs = g.rank.at(g.ground);
  for (const auto& a : power_set(g.ground)) {
    out.rank[a] = static_cast<Value>(a.size()) + g.rank.at(minus(g.ground, a)) - rs;
  }
  return out;
}

inline Structure deletion(const Structure& g, const std::string& p) {
  Structure out{minus(g.ground, {p}), {}};
  for (const auto& a : power_set(out.ground)) out.rank[a] = g.rank.at(a);
  return out;
}

/// G/p := (G* - p)*, the definition rather than the closed form.
inline Structure contraction(const Structure& g, const std::string& p) { return dual(deletion(dual(g), p)); }

inline Poly tutte(const Structure& g) {
  Poly out;
  const Value rs = g.rank.at(g.ground);
  for (const auto& a : power_set(g.ground)) {
    const Value r = g.rank.at(a);
    out[{rs - r, static_cast<Value>(a.size()) - r}] += 1;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline bool is_matroid(const Structure& g) {
  const auto subsets = power_set(g.ground);
  for (const auto& a : subsets) {
    const Value r = g.rank.at(a);
    if (r < 0 || r > static_cast<Value>(a.size())) return false;  // R0
    for (const auto& p : g.ground) {
      const Value rp = g.rank.at(with(a, p));
      if (rp < r || rp > r + 1) return false;  // R1
    }
    for (const auto& b : subsets) {  // R2
      Set meet;
      for (const auto& x : a) {
        if (b.count(x)) meet.insert(x);
      }
      if (g.rank.at(unite(a, b)) + g.rank.at(meet) > r + g.rank.at(b)) return false;
    }
  }
  return true;
}

inline bool is_greedoid(const Structure& g) {
  const auto subsets = power_set(g.ground);
  if (g.rank.at({}) != 0) return false;
  for (const auto& a : subsets) {
    const Value r = g.rank.at(a);
    if (r < 0 || r > static_cast<Value>(a.size())) return false;
    for (const auto& b : subsets) {
      if (subset_of(a, b) && r > g.rank.at(b)) return false;
    }
    for (const auto& p : g.ground) {
      for (const auto& q : g.ground) {
        if (r == g.rank.at(with(a, p)) && r == g.rank.at(with(a, q)) && r != g.rank.at(with(with(a, p), q))) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Independent random table: r(empty) = 0, other ranks uniform in [low, high].
inline rankdual::RankTable random_table(std::mt19937_64& rng, std::size_t n, long long low, long long high) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  std::uniform_int_distribution<long long> dist(low, high);
  std::vector<rankdual::Rank> values(std::size_t{1} << n);
  for (std::size_t m = 1; m < values.size(); ++m) values[m] = dist(rng);
  return rankdual::RankTable(rankdual::GroundSet(std::move(labels)), std::move(values));
}

inline std::vector<rankdual::Rank> ranks(const rankdual::RankTable& g) {
  return {g.values().begin(), g.values().end()};
}

/// Table from ranks listed in mask order over the labels.
inline rankdual::RankTable table(std::vector<std::string> labels, std::vector<rankdual::Rank> values) {
  return rankdual::RankTable(rankdual::GroundSet(std::move(labels)), std::move(values));
}

}  // namespace oracle
