#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "unavoid/pattern.hpp"

namespace unavoid {

// One reduction step, with letters in the coordinates of the pattern state
// it applies to.
struct DeleteFreeSetStep {
  std::vector<Letter> letters;  // sorted
};
struct DeleteFreeLetterStep {
  Letter letter;
};
struct IdentifyStep {
  Letter from;
  Letter to;
};
using ReductionStep = std::variant<DeleteFreeSetStep, DeleteFreeLetterStep, IdentifyStep>;

// Ordered reduction steps replaying the source pattern to the empty word.
struct Certificate {
  std::vector<ReductionStep> steps;

  // Line-oriented JSON: one step object per line, letters rendered through
  // the legend of the state each step applies to.
  std::string to_json_lines(const Pattern& source) const;
  static Certificate from_json_lines(const Pattern& source, const std::string& text);
};

enum class VerdictKind { unavoidable, avoidable };

struct Verdict {
  VerdictKind kind;
  std::optional<Certificate> certificate;  // present iff unavoidable

  bool unavoidable() const { return kind == VerdictKind::unavoidable; }
};

struct DecideOptions {
  std::uint64_t state_budget = 10'000'000;
  // Cross-checks the two strategies and fails loudly on disagreement.
  bool paranoid = false;
  // Search reductions for the free-set strategy; each is exact and
  // cross-checked against the plain search in the test sweeps.
  bool defer_unique = true;   // branch only on free sets of multi-occurring letters
  bool eager_cascade = true;  // apply forced free deletions without branching
  bool square_shortcut = true;  // adjacent repeated letter => avoidable
};

// Memoized backtracking decider. A Decider instance accumulates its memo
// across calls; reuse one instance when deciding many related patterns.
// Instances are not thread-safe; give each worker its own.
class Decider {
 public:
  explicit Decider(DecideOptions options = {});

  // Free-set deletion strategy. Certificates contain DeleteFreeSet steps.
  Verdict decide_free_sets(const Pattern& p);

  // Free-letter deletion + identification strategy. Certificates mix
  // DeleteFreeLetter and Identify steps.
  Verdict decide_bem(const Pattern& p);

  // Default entry point: free-set strategy, or both when paranoid.
  Verdict decide(const Pattern& p);

  std::uint64_t states_explored() const { return states_; }

 private:
  struct SearchResult {
    bool unavoidable;
    std::vector<ReductionStep> steps;  // reversed (leaf first)
  };

  SearchResult search_free_sets(const Pattern& p);
  SearchResult search_bem(const Pattern& p);
  void charge_state();

  DecideOptions options_;
  std::unordered_set<std::string> avoidable_fs_;
  std::unordered_set<std::string> avoidable_bem_;
  std::uint64_t states_ = 0;
};

Verdict decide(const Pattern& p, DecideOptions options = {});

struct VerifyResult {
  bool ok;
  std::size_t failed_step = 0;  // 0-based index of the first bad step
  std::string diagnostic;
};

// Replays a certificate against p, re-checking every step's precondition
// with the factor graph; never trusts the decider that produced it.
VerifyResult verify_certificate(const Pattern& p, const Certificate& c);

}  // namespace unavoid
