#include "unavoid/decider.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "unavoid/factor_graph.hpp"

namespace unavoid {

namespace {

// Letters whose every occurrence is word-initial or preceded by a
// once-occurring letter can never terminate a conflict chain; an
// adjacency-independent subset of them is a free set whose deletion
// preserves reducibility in both directions, so the search applies it
// without branching. Freeness is re-verified by the caller before use.
std::vector<Letter> forced_free_set(const Pattern& p) {
  const auto letters = p.letters();
  const auto n = letters.size();
  const auto alpha = static_cast<std::size_t>(p.alphabet_size());
  std::vector<std::size_t> count(alpha, 0);
  for (Letter x : letters) ++count[static_cast<std::size_t>(x)];
  std::vector<bool> candidate(alpha, true);
  for (std::size_t i = 1; i < n; ++i) {
    if (count[static_cast<std::size_t>(letters[i - 1])] != 1)
      candidate[static_cast<std::size_t>(letters[i])] = false;
  }
  std::unordered_set<std::uint64_t> adjacent;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    adjacent.insert(static_cast<std::uint64_t>(letters[i]) << 32 |
                    static_cast<std::uint32_t>(letters[i + 1]));
  }
  auto touches = [&](Letter a, Letter b) {
    return adjacent.count(static_cast<std::uint64_t>(a) << 32 | static_cast<std::uint32_t>(b)) ||
           adjacent.count(static_cast<std::uint64_t>(b) << 32 | static_cast<std::uint32_t>(a));
  };
  std::vector<Letter> selected;
  for (std::size_t y = 0; y < alpha; ++y) {
    if (!candidate[y]) continue;
    bool ok = true;
    for (Letter s : selected) {
      if (touches(s, static_cast<Letter>(y))) {
        ok = false;
        break;
      }
    }
    if (ok) selected.push_back(static_cast<Letter>(y));
  }
  return selected;
}

std::set<Letter> as_set(const std::vector<Letter>& xs) {
  return std::set<Letter>(xs.begin(), xs.end());
}

}  // namespace

Decider::Decider(DecideOptions options) : options_(options) {}

void Decider::charge_state() {
  if (++states_ > options_.state_budget)
    throw BudgetError("state budget of " + std::to_string(options_.state_budget) + " exceeded");
}

Decider::SearchResult Decider::search_free_sets(const Pattern& p) {
  if (p.empty()) return {true, {}};
  std::string key = p.canonical_key();
  if (avoidable_fs_.count(key)) return {false, {}};
  charge_state();

  if (options_.square_shortcut && p.has_adjacent_repeat()) {
    // a letter x with xx a factor is never free, and no reduction removes
    // the square, so the empty word is unreachable
    avoidable_fs_.insert(key);
    return {false, {}};
  }

  if (options_.eager_cascade) {
    auto forced = forced_free_set(p);
    if (!forced.empty() && is_free_set(p, as_set(forced))) {
      auto r = search_free_sets(p.delete_letters(as_set(forced)));
      if (r.unavoidable) {
        r.steps.push_back(DeleteFreeSetStep{forced});
        return r;
      }
      avoidable_fs_.insert(key);
      return {false, {}};
    }
  }

  std::vector<Letter> universe;
  if (options_.defer_unique) {
    for (Letter x = 0; x < p.alphabet_size(); ++x) {
      if (p.occurrences(x) >= 2) universe.push_back(x);
    }
    if (universe.empty()) {
      // every letter occurs once: reduce by deleting letter 0 repeatedly
      SearchResult r{true, {}};
      Pattern cur = p;
      while (!cur.empty()) {
        r.steps.push_back(DeleteFreeSetStep{{0}});
        cur = cur.delete_letters({0});
      }
      std::reverse(r.steps.begin(), r.steps.end());
      return r;
    }
  } else {
    for (Letter x = 0; x < p.alphabet_size(); ++x) universe.push_back(x);
  }

  FreeSetStream stream(p, universe);
  for (auto s = stream.next(); !s.empty(); s = stream.next()) {
    auto r = search_free_sets(p.delete_letters(as_set(s)));
    if (r.unavoidable) {
      r.steps.push_back(DeleteFreeSetStep{s});
      return r;
    }
  }
  avoidable_fs_.insert(key);
  return {false, {}};
}

Decider::SearchResult Decider::search_bem(const Pattern& p) {
  if (p.empty()) return {true, {}};
  std::string key = p.canonical_key();
  if (avoidable_bem_.count(key)) return {false, {}};
  charge_state();

  if (options_.square_shortcut && p.has_adjacent_repeat()) {
    avoidable_bem_.insert(key);
    return {false, {}};
  }

  for (Letter x = 0; x < p.alphabet_size(); ++x) {
    if (!is_free(p, x)) continue;
    auto r = search_bem(p.delete_letters({x}));
    if (r.unavoidable) {
      r.steps.push_back(DeleteFreeLetterStep{x});
      return r;
    }
  }
  for (Letter from = 0; from < p.alphabet_size(); ++from) {
    for (Letter to = 0; to < p.alphabet_size(); ++to) {
      if (from == to) continue;
      auto r = search_bem(p.identify(from, to));
      if (r.unavoidable) {
        r.steps.push_back(IdentifyStep{from, to});
        return r;
      }
    }
  }
  avoidable_bem_.insert(key);
  return {false, {}};
}

Verdict Decider::decide_free_sets(const Pattern& p) {
  auto r = search_free_sets(p);
  if (!r.unavoidable) return {VerdictKind::avoidable, std::nullopt};
  std::reverse(r.steps.begin(), r.steps.end());
  return {VerdictKind::unavoidable, Certificate{std::move(r.steps)}};
}

Verdict Decider::decide_bem(const Pattern& p) {
  auto r = search_bem(p);
  if (!r.unavoidable) return {VerdictKind::avoidable, std::nullopt};
  std::reverse(r.steps.begin(), r.steps.end());
  return {VerdictKind::unavoidable, Certificate{std::move(r.steps)}};
}

Verdict Decider::decide(const Pattern& p) {
  Verdict a = decide_free_sets(p);
  if (options_.paranoid) {
    Verdict b = decide_bem(p);
    if (a.kind != b.kind)
      throw Error(Errc::strategy_disagreement,
                  "free-set and deletion+identification strategies disagree on " + p.format());
  }
  return a;
}

Verdict decide(const Pattern& p, DecideOptions options) {
  Decider d(options);
  return d.decide(p);
}

namespace {

const char* step_reason(const Pattern& cur, const ReductionStep& step, Pattern& next) {
  if (const auto* del = std::get_if<DeleteFreeSetStep>(&step)) {
    if (del->letters.empty()) return "empty deletion set";
    for (Letter x : del->letters) {
      if (x < 0 || x >= cur.alphabet_size()) return "letter does not occur";
    }
    if (!is_free_set(cur, as_set(del->letters))) return "set is not free";
    next = cur.delete_letters(as_set(del->letters));
    return nullptr;
  }
  if (const auto* del = std::get_if<DeleteFreeLetterStep>(&step)) {
    if (del->letter < 0 || del->letter >= cur.alphabet_size()) return "letter does not occur";
    if (!is_free(cur, del->letter)) return "letter is not free";
    next = cur.delete_letters({del->letter});
    return nullptr;
  }
  const auto& id = std::get<IdentifyStep>(step);
  if (id.from == id.to) return "identify needs two distinct letters";
  if (id.from < 0 || id.from >= cur.alphabet_size() || id.to < 0 ||
      id.to >= cur.alphabet_size())
    return "letter does not occur";
  next = cur.identify(id.from, id.to);
  return nullptr;
}

}  // namespace

VerifyResult verify_certificate(const Pattern& p, const Certificate& c) {
  Pattern cur = p;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    Pattern next;
    if (const char* reason = step_reason(cur, c.steps[i], next)) {
      std::ostringstream os;
      os << "step " << i + 1 << ": " << reason;
      return {false, i, os.str()};
    }
    cur = std::move(next);
  }
  if (!cur.empty()) {
    return {false, c.steps.size(), "residue is not the empty pattern: " + cur.format()};
  }
  return {true, 0, ""};
}

std::string Certificate::to_json_lines(const Pattern& source) const {
  using nlohmann::json;
  std::ostringstream os;
  Pattern cur = source;
  for (const auto& step : steps) {
    json j;
    if (const auto* del = std::get_if<DeleteFreeSetStep>(&step)) {
      j["op"] = "delete_free_set";
      json letters = json::array();
      for (Letter x : del->letters) letters.push_back(cur.token(x));
      j["letters"] = letters;
      cur = cur.delete_letters(as_set(del->letters));
    } else if (const auto* del = std::get_if<DeleteFreeLetterStep>(&step)) {
      j["op"] = "delete_free_letter";
      j["letter"] = cur.token(del->letter);
      cur = cur.delete_letters({del->letter});
    } else {
      const auto& id = std::get<IdentifyStep>(step);
      j["op"] = "identify";
      j["from"] = cur.token(id.from);
      j["to"] = cur.token(id.to);
      cur = cur.identify(id.from, id.to);
    }
    os << j.dump() << "\n";
  }
  return os.str();
}

Certificate Certificate::from_json_lines(const Pattern& source, const std::string& text) {
  using nlohmann::json;
  Certificate out;
  Pattern cur = source;
  bool stuck = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] != '{') continue;  // skip verdict lines
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(Errc::parse_error, std::string("bad certificate line: ") + e.what());
    }
    if (stuck) break;  // an unresolvable step already ends the replay
    auto resolve = [&](const std::string& tok) -> Letter {
      auto idx = cur.index_of_token(tok);
      if (!idx) {
        stuck = true;
        return -1;
      }
      return *idx;
    };
    const std::string op = j.value("op", "");
    if (op == "delete_free_set") {
      DeleteFreeSetStep step;
      for (const auto& tok : j.at("letters")) step.letters.push_back(resolve(tok.get<std::string>()));
      std::sort(step.letters.begin(), step.letters.end());
      out.steps.emplace_back(step);
      if (!stuck) cur = cur.delete_letters(as_set(step.letters));
    } else if (op == "delete_free_letter") {
      DeleteFreeLetterStep step{resolve(j.at("letter").get<std::string>())};
      out.steps.emplace_back(step);
      if (!stuck) cur = cur.delete_letters({step.letter});
    } else if (op == "identify") {
      IdentifyStep step{resolve(j.at("from").get<std::string>()),
                        resolve(j.at("to").get<std::string>())};
      out.steps.emplace_back(step);
      if (!stuck && step.from != step.to) cur = cur.identify(step.from, step.to);
    } else {
      throw Error(Errc::parse_error, "unknown certificate op: " + op);
    }
  }
  return out;
}

}  // namespace unavoid
