#pragma once

// Brute-force freeness oracle: searches directly for an alternating chain of
// 2-factors  x a1 / b1 a1 / b1 a2 / b2 a2 / ... / bn y  over the factor set
// of the word, with visited-state memoization over (factor, parity). The
// chain alternates matching second components and first components, and must
// make at least one step. Kept independent of the FactorGraph adjacency
// machinery on purpose.

#include <utility>
#include <vector>

#include "unavoid/pattern.hpp"

namespace oracle {

struct FactorTable {
  std::vector<std::pair<int, int>> factors;

  explicit FactorTable(const unavoid::Pattern& p) {
    auto letters = p.letters();
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      std::pair<int, int> f{letters[i], letters[i + 1]};
      bool known = false;
      for (const auto& g : factors) {
        if (g == f) known = true;
      }
      if (!known) factors.push_back(f);
    }
  }
};

// parity 0: the next chain element shares the second component;
// parity 1: the next chain element shares the first component.
inline bool chain_search(const FactorTable& table, std::size_t cur, int parity, int target,
                         std::vector<std::vector<bool>>& seen) {
  if (seen[cur][static_cast<std::size_t>(parity)]) return false;
  seen[cur][static_cast<std::size_t>(parity)] = true;
  for (std::size_t next = 0; next < table.factors.size(); ++next) {
    const bool linked = parity == 0
                            ? table.factors[next].second == table.factors[cur].second
                            : table.factors[next].first == table.factors[cur].first;
    if (!linked) continue;
    if (table.factors[next].second == target) return true;
    if (chain_search(table, next, 1 - parity, target, seen)) return true;
  }
  return false;
}

inline bool conflicts(const unavoid::Pattern& p, int x, int y) {
  FactorTable table(p);
  for (std::size_t start = 0; start < table.factors.size(); ++start) {
    if (table.factors[start].first != x) continue;
    std::vector<std::vector<bool>> seen(table.factors.size(), std::vector<bool>(2, false));
    if (chain_search(table, start, 0, y, seen)) return true;
  }
  return false;
}

inline bool is_free(const unavoid::Pattern& p, int x) { return !conflicts(p, x, x); }

}  // namespace oracle
