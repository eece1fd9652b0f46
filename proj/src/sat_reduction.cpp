#include "unavoid/sat_reduction.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "unavoid/factor_graph.hpp"

namespace unavoid {

namespace {

std::string literal_token(const SatLiteral& lit) {
  return (lit.negated ? "~x" : "x") + std::to_string(lit.variable);
}

std::string negation_token(int variable) { return "~x" + std::to_string(variable); }
std::string variable_token(int variable) { return "x" + std::to_string(variable); }

}  // namespace

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula f;
  int clause_count = -1;
  std::vector<int> pending;
  bool seen_header = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string kind;
      if (seen_header || !(ls >> kind) || kind != "cnf" || !(ls >> f.variable_count) ||
          !(ls >> clause_count) || f.variable_count < 1 || clause_count < 1)
        throw Error(Errc::parse_error, "malformed DIMACS header");
      seen_header = true;
      continue;
    }
    if (!seen_header) throw Error(Errc::parse_error, "clause before DIMACS header");
    ls.clear();
    ls.str(line);
    int v;
    while (ls >> v) {
      if (v == 0) {
        if (pending.size() != 3)
          throw Error(Errc::parse_error, "every clause must have exactly 3 literals");
        SatClause clause;
        for (int i = 0; i < 3; ++i) {
          int raw = pending[static_cast<std::size_t>(i)];
          int var = raw < 0 ? -raw : raw;
          if (var > f.variable_count)
            throw Error(Errc::parse_error, "literal exceeds declared variable count");
          clause.literals[static_cast<std::size_t>(i)] = SatLiteral{var, raw < 0};
        }
        for (int i = 0; i < 3; ++i) {
          for (int j = i + 1; j < 3; ++j) {
            if (clause.literals[static_cast<std::size_t>(i)].variable ==
                clause.literals[static_cast<std::size_t>(j)].variable)
              throw Error(Errc::parse_error, "repeated variable within a clause");
          }
        }
        f.clauses.push_back(clause);
        pending.clear();
      } else {
        pending.push_back(v);
      }
    }
  }
  if (!seen_header) throw Error(Errc::parse_error, "missing DIMACS header");
  if (!pending.empty()) throw Error(Errc::parse_error, "unterminated clause");
  if (clause_count >= 0 && static_cast<int>(f.clauses.size()) != clause_count)
    throw Error(Errc::parse_error, "clause count does not match header");
  return f;
}

CnfFormula normalize(const CnfFormula& f) {
  CnfFormula out = f;
  for (auto& clause : out.clauses) {
    std::sort(clause.literals.begin(), clause.literals.end(),
              [](const SatLiteral& a, const SatLiteral& b) {
                if (a.negated != b.negated) return !a.negated;
                return a.variable < b.variable;
              });
  }
  return out;
}

bool is_normalized(const CnfFormula& f) {
  for (const auto& clause : f.clauses) {
    for (std::size_t i = 0; i + 1 < clause.literals.size(); ++i) {
      if (clause.literals[i].negated && !clause.literals[i + 1].negated) return false;
    }
  }
  return true;
}

ReductionOutput build_word(const CnfFormula& f) {
  if (f.variable_count < 1 || f.clauses.empty())
    throw Error(Errc::out_of_range, "formula needs at least one variable and one clause");
  if (!is_normalized(f))
    throw Error(Errc::out_of_range, "build_word expects a normalized formula");
  for (const auto& clause : f.clauses) {
    for (const auto& lit : clause.literals) {
      if (lit.variable < 1 || lit.variable > f.variable_count)
        throw Error(Errc::out_of_range, "literal outside the declared variable range");
    }
  }

  ReductionOutput out;
  std::vector<std::string> tokens;
  std::vector<std::string> factors;
  int next_separator = 0;

  auto add_factor = [&](std::vector<std::string> body) {
    std::string sep = "z" + std::to_string(++next_separator);
    std::string rendered;
    for (const auto& t : body) rendered += t + " ";
    rendered += sep;
    factors.push_back(rendered);
    for (auto& t : body) tokens.push_back(std::move(t));
    tokens.push_back(sep);
  };

  for (int i = 1; i <= f.variable_count; ++i) {
    add_factor({"e", variable_token(i), negation_token(i), "e"});
  }

  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& lits = f.clauses[j].literals;
    const int negations =
        static_cast<int>(lits[0].negated) + static_cast<int>(lits[1].negated) +
        static_cast<int>(lits[2].negated);
    const std::string id = std::to_string(j + 1);
    const std::string a = "a" + id, b = "b" + id, c = "c" + id, d = "d" + id;
    // normalized clause: variables in position order; negated ones last
    const std::string x = literal_token(lits[0]);
    const std::string y = literal_token(lits[1]);
    const std::string z = literal_token(lits[2]);
    switch (negations) {
      case 0:
        add_factor({a, x});
        add_factor({b, x});
        add_factor({b, y});
        add_factor({c, y});
        add_factor({c, z});
        add_factor({d, z});
        add_factor({d, a});
        add_factor({a, b});
        add_factor({a, c});
        add_factor({a, d});
        add_factor({a, "e"});
        break;
      case 1:
        add_factor({a, x});
        add_factor({b, x});
        add_factor({b, y});
        add_factor({c, y});
        add_factor({c, d});
        add_factor({z, d});
        add_factor({z, a});
        add_factor({a, b});
        add_factor({a, c});
        add_factor({d, a});
        add_factor({a, "e"});
        break;
      case 2:
        add_factor({a, x});
        add_factor({b, x});
        add_factor({b, c});
        add_factor({y, c});
        add_factor({y, d});
        add_factor({z, d});
        add_factor({z, a});
        add_factor({a, b});
        add_factor({c, a});
        add_factor({d, a});
        add_factor({a, "e"});
        break;
      case 3:
        add_factor({a, b});
        add_factor({x, b});
        add_factor({x, c});
        add_factor({y, c});
        add_factor({y, d});
        add_factor({z, d});
        add_factor({z, a});
        add_factor({b, a});
        add_factor({c, a});
        add_factor({d, a});
        add_factor({"e", a});
        break;
      default:
        break;
    }
  }

  out.word = Pattern::from_tokens(tokens, tokens.size() + 1);
  out.factors = std::move(factors);
  out.separator_count = next_separator;

  out.classes.resize(static_cast<std::size_t>(out.word.alphabet_size()));
  for (Letter l = 0; l < out.word.alphabet_size(); ++l) {
    const std::string& tok = out.word.token(l);
    LetterInfo info{};
    if (tok == "e") {
      info.cls = LetterClass::junction;
    } else if (tok[0] == 'z') {
      info.cls = LetterClass::separator;
      info.origin = std::stoi(tok.substr(1));
    } else if (tok[0] == 'x') {
      info.cls = LetterClass::literal;
      info.origin = std::stoi(tok.substr(1));
    } else if (tok[0] == '~') {
      info.cls = LetterClass::literal;
      info.origin = std::stoi(tok.substr(2));
      info.negated = true;
    } else {
      info.cls = LetterClass::gadget;
      info.origin = std::stoi(tok.substr(1));
      info.role = tok[0];
    }
    out.classes[static_cast<std::size_t>(l)] = info;
  }
  return out;
}

namespace {

Letter require_token(const Pattern& p, const std::string& tok) {
  auto idx = p.index_of_token(tok);
  if (!idx) throw Error(Errc::letter_absent, "letter " + tok + " missing from the word");
  return *idx;
}

bool token_free(const Pattern& p, const std::string& tok) {
  return is_free(p, require_token(p, tok));
}

Pattern delete_tokens(const Pattern& p, const std::vector<std::string>& toks) {
  std::set<Letter> xs;
  for (const auto& t : toks) xs.insert(require_token(p, t));
  return p.delete_letters(xs);
}

}  // namespace

StructuralReport check_gadget_invariants(const CnfFormula& f) {
  StructuralReport report;
  const CnfFormula norm = normalize(f);
  const ReductionOutput out = build_word(norm);
  const Pattern& word = out.word;

  for (Letter l = 0; l < word.alphabet_size(); ++l) {
    if (out.classes[static_cast<std::size_t>(l)].cls == LetterClass::separator &&
        word.occurrences(l) != 1)
      report.fail("separator " + word.token(l) + " does not occur exactly once");
  }

  for (std::size_t j = 1; j <= norm.clauses.size(); ++j) {
    const std::string id = std::to_string(j);
    for (char role : {'a', 'b', 'c', 'd'}) {
      const std::string tok = std::string(1, role) + id;
      if (token_free(word, tok))
        report.fail("clause letter " + tok + " is free in the fresh word");
    }
    Pattern without_a = delete_tokens(word, {"a" + id});
    for (char role : {'b', 'c', 'd'}) {
      const std::string tok = std::string(1, role) + id;
      if (!token_free(without_a, tok))
        report.fail("clause letter " + tok + " is not freed by deleting a" + id);
    }
  }

  if (token_free(word, "e")) report.fail("junction letter e is free in the fresh word");

  // literal pairs: x_{k+1} and ~x_{k+1} stay free after deleting one literal
  // per earlier variable, for every combination of earlier choices
  const int n = norm.variable_count;
  if (n <= 12) {
    for (int k = 0; k < n; ++k) {
      for (int combo = 0; combo < (1 << k); ++combo) {
        Pattern cur = word;
        for (int i = 0; i < k; ++i) {
          const bool positive = (combo >> i) & 1;
          cur = delete_tokens(cur, {positive ? variable_token(i + 1) : negation_token(i + 1)});
        }
        if (!token_free(cur, variable_token(k + 1)) || !token_free(cur, negation_token(k + 1))) {
          report.fail("literal pair of x" + std::to_string(k + 1) +
                      " not free after earlier deletions (combo " + std::to_string(combo) + ")");
        }
      }
    }
  }

  for (int i = 1; i <= n; ++i) {
    Pattern cur = delete_tokens(word, {variable_token(i), negation_token(i)});
    Letter e = require_token(cur, "e");
    bool has_ee = false;
    for (const auto& [first, second] : cur.two_factors()) {
      if (first == e && second == e) has_ee = true;
    }
    if (!has_ee)
      report.fail("deleting both literals of x" + std::to_string(i) +
                  " does not create an adjacent ee");
  }

  return report;
}

namespace {

// Finds a free deletion order over a set of letters. Clause gadgets sharing
// an undeleted literal can block each other, so deletions must be allowed to
// interleave across clauses; dead remaining-sets are memoized.
struct DeletionOrderSearch {
  std::vector<std::string> tokens;
  std::unordered_set<std::uint64_t> dead;

  bool run(const Pattern& state, std::uint64_t mask, Pattern& final_state,
           std::vector<ReductionStep>& steps) {
    if (mask == 0) {
      final_state = state;
      return true;
    }
    if (dead.count(mask)) return false;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (!((mask >> i) & 1)) continue;
      Letter l = require_token(state, tokens[i]);
      if (!is_free(state, l)) continue;
      steps.push_back(DeleteFreeLetterStep{l});
      if (run(state.delete_letters({l}), mask & ~(std::uint64_t{1} << i), final_state, steps))
        return true;
      steps.pop_back();
    }
    dead.insert(mask);
    return false;
  }
};

}  // namespace

Certificate five_stage_schedule(const ReductionOutput& out, const CnfFormula& f,
                                const std::vector<bool>& assignment, std::string* diagnostic) {
  Certificate cert;
  Pattern cur = out.word;
  auto delete_token_step = [&](const std::string& tok) {
    Letter l = require_token(cur, tok);
    cert.steps.push_back(DeleteFreeLetterStep{l});
    cur = cur.delete_letters({l});
  };

  // stage 1: one literal per variable, by the satisfying assignment
  for (int i = 1; i <= f.variable_count; ++i) {
    delete_token_step(assignment[static_cast<std::size_t>(i - 1)] ? variable_token(i)
                                                                  : negation_token(i));
  }
  // stage 2: every clause's gadget letters, in a free order found by search
  // (orders may interleave across clauses: gadgets sharing an undeleted
  // literal can block each other until the blocking gadget shrinks)
  if (f.clauses.size() > 16)
    throw Error(Errc::out_of_range, "schedule search is capped at 16 clauses");
  DeletionOrderSearch search;
  for (std::size_t j = 1; j <= f.clauses.size(); ++j) {
    for (char role : {'a', 'b', 'c', 'd'}) search.tokens.push_back(role + std::to_string(j));
  }
  {
    std::vector<ReductionStep> steps;
    Pattern next;
    const std::uint64_t full = search.tokens.size() == 64
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << search.tokens.size()) - 1;
    if (!search.run(cur, full, next, steps)) {
      if (diagnostic) *diagnostic = "no free deletion order for the clause gadget letters";
      return cert;
    }
    for (auto& s : steps) cert.steps.push_back(s);
    cur = next;
  }
  // stage 3: the junction letter
  delete_token_step("e");
  // stage 4: the remaining literal of each variable
  for (int i = 1; i <= f.variable_count; ++i) {
    delete_token_step(assignment[static_cast<std::size_t>(i - 1)] ? negation_token(i)
                                                                  : variable_token(i));
  }
  // stage 5: the separators (all that remains)
  while (!cur.empty()) {
    cert.steps.push_back(DeleteFreeLetterStep{0});
    cur = cur.delete_letters({0});
  }
  return cert;
}

EquivalenceReport check_equivalence(const CnfFormula& f, DecideOptions decide_options) {
  if (f.variable_count > 20)
    throw Error(Errc::out_of_range, "truth-table satisfiability is capped at 20 variables");
  const CnfFormula norm = normalize(f);

  EquivalenceReport report;
  const int n = norm.variable_count;
  std::vector<std::uint32_t> satisfying;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& clause : norm.clauses) {
      bool clause_ok = false;
      for (const auto& lit : clause.literals) {
        const bool value = (mask >> (lit.variable - 1)) & 1;
        if (value != lit.negated) clause_ok = true;
      }
      if (!clause_ok) {
        ok = false;
        break;
      }
    }
    if (ok) satisfying.push_back(mask);
  }
  if (!satisfying.empty()) {
    report.satisfiable = true;
    report.assignment.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      report.assignment[static_cast<std::size_t>(i)] = (satisfying.front() >> i) & 1;
  }

  const ReductionOutput out = build_word(norm);
  Decider decider(decide_options);
  try {
    Verdict v = decider.decide(out.word);
    report.verdict = v.unavoidable() ? SatDecision::unavoidable : SatDecision::avoidable;
    report.agree = report.satisfiable == v.unavoidable();
  } catch (const BudgetError&) {
    report.verdict = SatDecision::budget_exceeded;
    report.agree = false;
  }
  report.states_explored = decider.states_explored();

  if (report.satisfiable) {
    // the stage schedule does not complete for every satisfying assignment
    // (an undeleted literal shared across clauses can keep gadget chains
    // alive), so try each one until a schedule replays
    report.schedule_checked = true;
    for (std::uint32_t mask : satisfying) {
      std::vector<bool> assignment(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) assignment[static_cast<std::size_t>(i)] = (mask >> i) & 1;
      std::string diagnostic;
      Certificate schedule = five_stage_schedule(out, norm, assignment, &diagnostic);
      if (!diagnostic.empty()) {
        report.schedule_valid = false;
        report.schedule_diagnostic = diagnostic;
        continue;
      }
      VerifyResult vr = verify_certificate(out.word, schedule);
      if (vr.ok) {
        report.schedule_valid = true;
        report.schedule_diagnostic.clear();
        report.assignment = assignment;
        break;
      }
      report.schedule_valid = false;
      report.schedule_diagnostic = vr.diagnostic;
    }
  }
  return report;
}

}  // namespace unavoid
