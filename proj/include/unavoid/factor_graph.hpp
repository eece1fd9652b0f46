#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unavoid/pattern.hpp"

namespace unavoid {

// Directed bipartite graph over duplicated 2-factor vertices: each distinct
// 2-factor ab contributes a side-0 node ^0ab and a side-1 node ^1ab.
// Edges: ^0ab -> ^1cd iff b = d, and ^1ab -> ^0cd iff a = c. A letter x is
// free iff no path of at least one edge leads from a side-0 node with first
// component x to a node with second component x.
//
// Distinct 2-factors are deduplicated, so adjacency lists are shared:
// out-neighbours of ^0ab are the factors grouped by second component b,
// out-neighbours of ^1ab the factors grouped by first component a.
class FactorGraph {
 public:
  explicit FactorGraph(const Pattern& p);

  std::size_t factor_count() const { return factors_.size(); }
  std::size_t vertex_count() const { return factors_.size() * 2; }
  std::size_t edge_count() const;
  const std::vector<std::pair<Letter, Letter>>& factors() const { return factors_; }

  // Factor ids whose first (resp. second) component is x.
  const std::vector<int>& factors_starting(Letter x) const;
  const std::vector<int>& factors_ending(Letter x) const;

  // True iff no conflict chain leads from x back to x. Letters that do not
  // occur in the source pattern are reported absent via Error(letter_absent).
  bool is_free(Letter x) const;

  // Second components of every node reachable by a path of >= 1 edge from a
  // side-0 node with first component x (sorted, deduplicated). conflicts(x,y)
  // of the conflict relation is "y in conflict_targets(x)".
  std::vector<Letter> conflict_targets(Letter x) const;

  // GraphViz dot rendering; vertex labels carry the side tag and the factor
  // tokens from the pattern legend.
  std::string to_dot() const;

 private:
  void check_occurs(Letter x) const;

  std::vector<std::pair<Letter, Letter>> factors_;
  std::vector<std::vector<int>> by_first_;   // letter -> factor ids
  std::vector<std::vector<int>> by_second_;  // letter -> factor ids
  std::vector<std::size_t> occurrences_;
  std::vector<std::string> legend_;
  int alphabet_size_ = 0;
};

// Conflict relation over ordered letter pairs: conflicts(x, y) holds iff the
// graph has a path (>= 1 edge) from a side-0 node with first component x to a
// node with second component y. (x, x) in the relation iff x is not free.
class ConflictRelation {
 public:
  explicit ConflictRelation(const FactorGraph& g, int alphabet_size);

  bool conflicts(Letter x, Letter y) const {
    return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(y)];
  }
  int alphabet_size() const { return n_; }

 private:
  int n_;
  std::vector<bool> table_;
};

bool is_free(const Pattern& p, Letter x);

// True iff no ordered pair over xs (including x with itself) conflicts.
bool is_free_set(const Pattern& p, const std::set<Letter>& xs);

std::vector<Letter> free_letters(const Pattern& p);

// Streams every nonempty free set of p in deterministic order: by size
// ascending, then lexicographically by sorted member indices. Equivalently,
// the nonempty independent sets of the symmetrized conflict relation
// restricted to letters without self-conflicts.
class FreeSetStream {
 public:
  explicit FreeSetStream(const Pattern& p);
  // Restricts the universe to the given letters (used by the decider).
  FreeSetStream(const Pattern& p, const std::vector<Letter>& universe);

  // Next free set, or empty vector when exhausted. Sets are sorted.
  std::vector<Letter> next();

 private:
  bool grow(std::size_t target_size);

  std::vector<Letter> candidates_;           // self-compatible letters, ascending
  std::vector<std::vector<bool>> compat_;    // candidate index x candidate index
  std::vector<std::size_t> stack_;           // candidate indices of current set
  std::size_t size_ = 1;                     // size currently enumerated
  bool done_ = false;
  bool fresh_size_ = true;
};

std::vector<std::vector<Letter>> all_free_sets(const Pattern& p);

}  // namespace unavoid
