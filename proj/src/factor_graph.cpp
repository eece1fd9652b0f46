#include "unavoid/factor_graph.hpp"

#include <algorithm>
#include <sstream>

namespace unavoid {

namespace {
const std::vector<int> kNoFactors;
}

FactorGraph::FactorGraph(const Pattern& p)
    : alphabet_size_(p.alphabet_size()) {
  factors_ = p.two_factors();
  legend_ = p.legend();
  by_first_.resize(static_cast<std::size_t>(alphabet_size_));
  by_second_.resize(static_cast<std::size_t>(alphabet_size_));
  occurrences_.resize(static_cast<std::size_t>(alphabet_size_), 0);
  for (Letter x : p.letters()) ++occurrences_[static_cast<std::size_t>(x)];
  for (int id = 0; id < static_cast<int>(factors_.size()); ++id) {
    by_first_[static_cast<std::size_t>(factors_[static_cast<std::size_t>(id)].first)].push_back(id);
    by_second_[static_cast<std::size_t>(factors_[static_cast<std::size_t>(id)].second)].push_back(id);
  }
}

std::size_t FactorGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& f : factors_) {
    n += by_second_[static_cast<std::size_t>(f.second)].size();  // ^0f -> side-1
    n += by_first_[static_cast<std::size_t>(f.first)].size();    // ^1f -> side-0
  }
  return n;
}

const std::vector<int>& FactorGraph::factors_starting(Letter x) const {
  if (x < 0 || x >= alphabet_size_) return kNoFactors;
  return by_first_[static_cast<std::size_t>(x)];
}

const std::vector<int>& FactorGraph::factors_ending(Letter x) const {
  if (x < 0 || x >= alphabet_size_) return kNoFactors;
  return by_second_[static_cast<std::size_t>(x)];
}

void FactorGraph::check_occurs(Letter x) const {
  if (x < 0 || x >= alphabet_size_ || occurrences_[static_cast<std::size_t>(x)] == 0)
    throw Error(Errc::letter_absent, "letter does not occur in the pattern");
}

// Iterative DFS over (factor id, side); side 0 steps match second components,
// side 1 steps match first components. Sources are not marked up front: a
// node counts as reached only via >= 1 edge.
bool FactorGraph::is_free(Letter x) const {
  check_occurs(x);
  const std::size_t n = factors_.size();
  std::vector<bool> seen0(n, false), seen1(n, false);
  std::vector<std::pair<int, int>> stack;  // (factor id, side)
  for (int s : by_first_[static_cast<std::size_t>(x)]) {
    // neighbours of the side-0 source ^0(x, b)
    for (int j : by_second_[static_cast<std::size_t>(factors_[static_cast<std::size_t>(s)].second)]) {
      if (!seen1[static_cast<std::size_t>(j)]) {
        if (factors_[static_cast<std::size_t>(j)].second == x) return false;
        seen1[static_cast<std::size_t>(j)] = true;
        stack.emplace_back(j, 1);
      }
    }
  }
  while (!stack.empty()) {
    auto [id, side] = stack.back();
    stack.pop_back();
    const auto& f = factors_[static_cast<std::size_t>(id)];
    const auto& next = side == 1 ? by_first_[static_cast<std::size_t>(f.first)]
                                 : by_second_[static_cast<std::size_t>(f.second)];
    auto& seen_next = side == 1 ? seen0 : seen1;
    for (int j : next) {
      if (!seen_next[static_cast<std::size_t>(j)]) {
        if (factors_[static_cast<std::size_t>(j)].second == x) return false;
        seen_next[static_cast<std::size_t>(j)] = true;
        stack.emplace_back(j, 1 - side);
      }
    }
  }
  return true;
}

std::vector<Letter> FactorGraph::conflict_targets(Letter x) const {
  check_occurs(x);
  const std::size_t n = factors_.size();
  std::vector<bool> seen0(n, false), seen1(n, false);
  std::vector<bool> hit(static_cast<std::size_t>(alphabet_size_), false);
  std::vector<std::pair<int, int>> stack;
  auto visit = [&](int id, int side) {
    auto& seen = side == 0 ? seen0 : seen1;
    if (seen[static_cast<std::size_t>(id)]) return;
    seen[static_cast<std::size_t>(id)] = true;
    hit[static_cast<std::size_t>(factors_[static_cast<std::size_t>(id)].second)] = true;
    stack.emplace_back(id, side);
  };
  for (int s : by_first_[static_cast<std::size_t>(x)]) {
    for (int j : by_second_[static_cast<std::size_t>(factors_[static_cast<std::size_t>(s)].second)])
      visit(j, 1);
  }
  while (!stack.empty()) {
    auto [id, side] = stack.back();
    stack.pop_back();
    const auto& f = factors_[static_cast<std::size_t>(id)];
    if (side == 1) {
      for (int j : by_first_[static_cast<std::size_t>(f.first)]) visit(j, 0);
    } else {
      for (int j : by_second_[static_cast<std::size_t>(f.second)]) visit(j, 1);
    }
  }
  std::vector<Letter> out;
  for (int y = 0; y < alphabet_size_; ++y) {
    if (hit[static_cast<std::size_t>(y)]) out.push_back(y);
  }
  return out;
}

std::string FactorGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph factor_graph {\n";
  auto name = [&](int id, int side) {
    const auto& f = factors_[static_cast<std::size_t>(id)];
    return "\"^" + std::to_string(side) + " " + legend_[static_cast<std::size_t>(f.first)] +
           legend_[static_cast<std::size_t>(f.second)] + "\"";
  };
  for (int id = 0; id < static_cast<int>(factors_.size()); ++id) {
    os << "  " << name(id, 0) << ";\n";
    os << "  " << name(id, 1) << ";\n";
  }
  for (int id = 0; id < static_cast<int>(factors_.size()); ++id) {
    const auto& f = factors_[static_cast<std::size_t>(id)];
    for (int j : by_second_[static_cast<std::size_t>(f.second)])
      os << "  " << name(id, 0) << " -> " << name(j, 1) << ";\n";
    for (int j : by_first_[static_cast<std::size_t>(f.first)])
      os << "  " << name(id, 1) << " -> " << name(j, 0) << ";\n";
  }
  os << "}\n";
  return os.str();
}

ConflictRelation::ConflictRelation(const FactorGraph& g, int alphabet_size)
    : n_(alphabet_size),
      table_(static_cast<std::size_t>(alphabet_size) * static_cast<std::size_t>(alphabet_size),
             false) {
  for (Letter x = 0; x < n_; ++x) {
    if (g.factors_starting(x).empty() && g.factors_ending(x).empty()) {
      // letter occurs but participates in no 2-factor (length-1 pattern)
      continue;
    }
    for (Letter y : g.conflict_targets(x))
      table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
             static_cast<std::size_t>(y)] = true;
  }
}

bool is_free(const Pattern& p, Letter x) {
  if (x < 0 || x >= p.alphabet_size())
    throw Error(Errc::letter_absent, "letter does not occur in the pattern");
  if (p.size() < 2) return true;
  return FactorGraph(p).is_free(x);
}

bool is_free_set(const Pattern& p, const std::set<Letter>& xs) {
  if (xs.empty()) throw Error(Errc::out_of_range, "free set query needs a nonempty set");
  for (Letter x : xs) {
    if (x < 0 || x >= p.alphabet_size())
      throw Error(Errc::letter_absent, "letter does not occur in the pattern");
  }
  if (p.size() < 2) return true;
  FactorGraph g(p);
  for (Letter x : xs) {
    auto targets = g.conflict_targets(x);
    for (Letter y : xs) {
      if (std::binary_search(targets.begin(), targets.end(), y)) return false;
    }
  }
  return true;
}

std::vector<Letter> free_letters(const Pattern& p) {
  std::vector<Letter> out;
  if (p.empty()) return out;
  if (p.size() < 2) {
    out.push_back(0);
    return out;
  }
  FactorGraph g(p);
  for (Letter x = 0; x < p.alphabet_size(); ++x) {
    if (g.is_free(x)) out.push_back(x);
  }
  return out;
}

FreeSetStream::FreeSetStream(const Pattern& p) {
  std::vector<Letter> universe;
  for (Letter x = 0; x < p.alphabet_size(); ++x) universe.push_back(x);
  *this = FreeSetStream(p, universe);
}

FreeSetStream::FreeSetStream(const Pattern& p, const std::vector<Letter>& universe_in) {
  std::vector<Letter> universe = universe_in;
  std::sort(universe.begin(), universe.end());
  if (p.empty() || universe.empty()) {
    done_ = true;
    return;
  }
  if (p.size() < 2) {
    // no 2-factors, no chains: the single letter is free
    candidates_ = universe;
    compat_.assign(candidates_.size(), std::vector<bool>(candidates_.size(), true));
  } else {
    FactorGraph g(p);
    std::vector<std::vector<Letter>> targets;
    std::vector<Letter> cands;
    for (Letter x : universe) {
      auto t = g.conflict_targets(x);
      if (!std::binary_search(t.begin(), t.end(), x)) {
        cands.push_back(x);
        targets.push_back(std::move(t));
      }
    }
    candidates_ = std::move(cands);
    compat_.assign(candidates_.size(), std::vector<bool>(candidates_.size(), false));
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      for (std::size_t j = 0; j < candidates_.size(); ++j) {
        bool ij = std::binary_search(targets[i].begin(), targets[i].end(), candidates_[j]);
        bool ji = std::binary_search(targets[j].begin(), targets[j].end(), candidates_[i]);
        compat_[i][j] = !ij && !ji;
      }
    }
  }
  if (candidates_.empty()) done_ = true;
}

// Lexicographic enumeration of independent size-k subsets by candidate index.
bool FreeSetStream::grow(std::size_t target_size) {
  auto fits = [&](std::size_t cand) {
    for (std::size_t s : stack_) {
      if (!compat_[s][cand]) return false;
    }
    return true;
  };
  std::size_t start = 0;
  if (fresh_size_) {
    fresh_size_ = false;
    stack_.clear();
  } else {
    if (stack_.empty()) return false;
    start = stack_.back() + 1;
    stack_.pop_back();
  }
  while (true) {
    bool placed = false;
    for (std::size_t c = start; c < candidates_.size(); ++c) {
      if (fits(c)) {
        stack_.push_back(c);
        placed = true;
        break;
      }
    }
    if (placed) {
      if (stack_.size() == target_size) return true;
      start = stack_.back() + 1;
      continue;
    }
    if (stack_.empty()) return false;
    start = stack_.back() + 1;
    stack_.pop_back();
  }
}

std::vector<Letter> FreeSetStream::next() {
  while (!done_) {
    if (size_ > candidates_.size()) {
      done_ = true;
      break;
    }
    if (grow(size_)) {
      std::vector<Letter> out;
      out.reserve(stack_.size());
      for (std::size_t s : stack_) out.push_back(candidates_[s]);
      return out;
    }
    ++size_;
    fresh_size_ = true;
  }
  return {};
}

std::vector<std::vector<Letter>> all_free_sets(const Pattern& p) {
  std::vector<std::vector<Letter>> out;
  FreeSetStream stream(p);
  for (auto s = stream.next(); !s.empty(); s = stream.next()) out.push_back(std::move(s));
  return out;
}

}  // namespace unavoid
