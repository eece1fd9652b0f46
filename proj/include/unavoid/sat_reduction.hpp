#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "unavoid/decider.hpp"
#include "unavoid/pattern.hpp"

namespace unavoid {

struct SatLiteral {
  int variable = 0;  // 1-based
  bool negated = false;

  bool operator==(const SatLiteral&) const = default;
};

// Exactly three literals over pairwise distinct variables.
struct SatClause {
  std::array<SatLiteral, 3> literals;
};

struct CnfFormula {
  int variable_count = 0;
  std::vector<SatClause> clauses;
};

// Standard DIMACS CNF; every clause must have exactly 3 literals over
// distinct variables. Clauses are returned as read (see normalize).
CnfFormula parse_dimacs(const std::string& text);

// Within each clause: positive literals first (by variable index), then
// negative literals (by variable index). Logically equivalent.
CnfFormula normalize(const CnfFormula& f);

bool is_normalized(const CnfFormula& f);

enum class LetterClass : std::uint8_t {
  literal,    // x_i and its negation
  gadget,     // the per-clause letters a_j, b_j, c_j, d_j
  junction,   // the letter e shared by all variable gadgets
  separator,  // the once-occurring z letters
};

struct LetterInfo {
  LetterClass cls;
  int origin = 0;       // variable number, clause number, or separator ordinal (1-based)
  bool negated = false; // literal letters only
  char role = 0;        // 'a'..'d' for gadget letters
};

struct ReductionOutput {
  Pattern word;
  std::vector<LetterInfo> classes;    // indexed by letter
  std::vector<std::string> factors;   // the ordered gadget factors, rendered
  int separator_count = 0;
};

// Builds the pattern of a normalized 3-CNF formula: one variable gadget
// "e x_i ~x_i e z" per variable in variable order, then one of four clause
// gadgets (keyed by the clause's negation count) per clause in clause order,
// every listed factor terminated by a globally fresh separator letter.
ReductionOutput build_word(const CnfFormula& f);

// Structural invariants of a freshly built word: unique separators, clause
// letters blocked until a literal is deleted and freed by deleting a_j, the
// junction letter blocked, literal pairs free, and the double-literal
// deletion creating an adjacent repeat.
struct StructuralReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string what) {
    ok = false;
    failures.push_back(std::move(what));
  }
};

StructuralReport check_gadget_invariants(const CnfFormula& f);

enum class SatDecision { unavoidable, avoidable, budget_exceeded };

struct EquivalenceReport {
  bool satisfiable = false;
  std::vector<bool> assignment;  // index 0 is x_1, meaningful when satisfiable
  SatDecision verdict = SatDecision::budget_exceeded;
  bool agree = false;
  bool schedule_checked = false;
  bool schedule_valid = false;
  std::string schedule_diagnostic;
  std::uint64_t states_explored = 0;
};

// Brute-force truth-table satisfiability (variable_count <= 20) against the
// decider's verdict on the built word. For satisfiable formulas the
// five-stage deletion schedule (chosen literals, then each clause's gadget
// letters, then e, then remaining literals, then separators) is replayed as
// an explicit certificate through verify_certificate.
EquivalenceReport check_equivalence(const CnfFormula& f, DecideOptions decide_options = {});

// The five-stage schedule as a certificate for a satisfying assignment.
Certificate five_stage_schedule(const ReductionOutput& out, const CnfFormula& f,
                                const std::vector<bool>& assignment, std::string* diagnostic);

}  // namespace unavoid
