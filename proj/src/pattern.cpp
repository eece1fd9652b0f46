#include "unavoid/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace unavoid {

std::string default_token(Letter i) {
  if (i >= 0 && i < 26) return std::string(1, static_cast<char>('a' + i));
  return "l" + std::to_string(i);
}

Pattern::Pattern(std::vector<Letter> letters, std::vector<std::string> legend)
    : letters_(std::move(letters)), legend_(std::move(legend)) {
  int max_index = -1;
  for (Letter x : letters_) {
    if (x < 0) throw Error(Errc::out_of_range, "negative letter index");
    max_index = std::max(max_index, x);
  }
  alphabet_size_ = max_index + 1;
  std::vector<bool> seen(static_cast<std::size_t>(alphabet_size_), false);
  for (Letter x : letters_) seen[static_cast<std::size_t>(x)] = true;
  for (int i = 0; i < alphabet_size_; ++i) {
    if (!seen[static_cast<std::size_t>(i)])
      throw Error(Errc::out_of_range, "alphabet not dense: letter " + std::to_string(i) + " unused");
  }
  if (legend_.empty()) {
    legend_.reserve(static_cast<std::size_t>(alphabet_size_));
    for (int i = 0; i < alphabet_size_; ++i) legend_.push_back(default_token(i));
  } else if (legend_.size() != static_cast<std::size_t>(alphabet_size_)) {
    throw Error(Errc::out_of_range, "legend size does not match alphabet size");
  }
}

Pattern Pattern::from_tokens(const std::vector<std::string>& tokens, std::size_t alphabet_cap) {
  if (tokens.empty()) throw Error(Errc::empty_pattern, "empty pattern");
  std::vector<Letter> letters;
  std::vector<std::string> legend;
  letters.reserve(tokens.size());
  for (const auto& tok : tokens) {
    auto it = std::find(legend.begin(), legend.end(), tok);
    Letter idx;
    if (it == legend.end()) {
      if (legend.size() >= alphabet_cap)
        throw Error(Errc::alphabet_cap_exceeded,
                    "more than " + std::to_string(alphabet_cap) + " distinct letters");
      idx = static_cast<Letter>(legend.size());
      legend.push_back(tok);
    } else {
      idx = static_cast<Letter>(it - legend.begin());
    }
    letters.push_back(idx);
  }
  return Pattern(std::move(letters), std::move(legend));
}

Pattern Pattern::parse(const std::string& text, std::size_t alphabet_cap) {
  bool has_ws = std::any_of(text.begin(), text.end(),
                            [](unsigned char c) { return std::isspace(c) != 0; });
  std::vector<std::string> tokens;
  if (has_ws) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  } else if (!text.empty()) {
    bool alnum = std::all_of(text.begin(), text.end(), [](unsigned char c) {
      return std::isalnum(c) != 0;
    });
    if (alnum) {
      for (char c : text) tokens.emplace_back(1, c);
    } else {
      tokens.push_back(text);
    }
  }
  if (tokens.empty()) throw Error(Errc::empty_pattern, "empty pattern");
  return from_tokens(tokens, alphabet_cap);
}

std::optional<Letter> Pattern::index_of_token(const std::string& tok) const {
  auto it = std::find(legend_.begin(), legend_.end(), tok);
  if (it == legend_.end()) return std::nullopt;
  return static_cast<Letter>(it - legend_.begin());
}

std::size_t Pattern::occurrences(Letter x) const {
  if (x < 0 || x >= alphabet_size_) return 0;
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), x));
}

std::string Pattern::format() const {
  bool single = std::all_of(legend_.begin(), legend_.end(),
                            [](const std::string& t) { return t.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!single && i > 0) out += ' ';
    out += legend_[static_cast<std::size_t>(letters_[i])];
  }
  return out;
}

Pattern Pattern::canonicalize() const {
  std::vector<Letter> rename(static_cast<std::size_t>(alphabet_size_), -1);
  int next = 0;
  std::vector<Letter> letters;
  letters.reserve(letters_.size());
  for (Letter x : letters_) {
    auto& r = rename[static_cast<std::size_t>(x)];
    if (r < 0) r = next++;
    letters.push_back(r);
  }
  std::vector<std::string> legend(static_cast<std::size_t>(next));
  for (int old = 0; old < alphabet_size_; ++old) {
    Letter now = rename[static_cast<std::size_t>(old)];
    if (now >= 0) legend[static_cast<std::size_t>(now)] = legend_[static_cast<std::size_t>(old)];
  }
  return Pattern(std::move(letters), std::move(legend));
}

std::string Pattern::canonical_key() const {
  std::vector<Letter> rename(static_cast<std::size_t>(alphabet_size_), -1);
  int next = 0;
  std::string key;
  key.reserve(letters_.size() * 2);
  for (Letter x : letters_) {
    auto& r = rename[static_cast<std::size_t>(x)];
    if (r < 0) r = next++;
    key.push_back(static_cast<char>(r & 0xff));
    key.push_back(static_cast<char>((r >> 8) & 0xff));
  }
  return key;
}

void Pattern::check_letter(Letter x) const {
  if (x < 0 || x >= alphabet_size_)
    throw Error(Errc::letter_absent, "letter " + std::to_string(x) + " does not occur");
}

Pattern Pattern::delete_letters(const std::set<Letter>& xs) const {
  for (Letter x : xs) check_letter(x);
  std::vector<Letter> compact(static_cast<std::size_t>(alphabet_size_), -1);
  int next = 0;
  for (int i = 0; i < alphabet_size_; ++i) {
    if (!xs.count(i)) compact[static_cast<std::size_t>(i)] = next++;
  }
  std::vector<Letter> letters;
  letters.reserve(letters_.size());
  std::vector<std::string> legend(static_cast<std::size_t>(next));
  for (int i = 0; i < alphabet_size_; ++i) {
    Letter now = compact[static_cast<std::size_t>(i)];
    if (now >= 0) legend[static_cast<std::size_t>(now)] = legend_[static_cast<std::size_t>(i)];
  }
  for (Letter x : letters_) {
    Letter now = compact[static_cast<std::size_t>(x)];
    if (now >= 0) letters.push_back(now);
  }
  return Pattern(std::move(letters), std::move(legend));
}

Pattern Pattern::identify(Letter x, Letter y) const {
  if (x == y) throw Error(Errc::same_letter, "identify requires two distinct letters");
  check_letter(x);
  check_letter(y);
  std::vector<Letter> compact(static_cast<std::size_t>(alphabet_size_), -1);
  int next = 0;
  for (int i = 0; i < alphabet_size_; ++i) {
    if (i != x) compact[static_cast<std::size_t>(i)] = next++;
  }
  std::vector<Letter> letters;
  letters.reserve(letters_.size());
  for (Letter l : letters_) {
    letters.push_back(compact[static_cast<std::size_t>(l == x ? y : l)]);
  }
  std::vector<std::string> legend(static_cast<std::size_t>(next));
  for (int i = 0; i < alphabet_size_; ++i) {
    Letter now = compact[static_cast<std::size_t>(i)];
    if (now >= 0) legend[static_cast<std::size_t>(now)] = legend_[static_cast<std::size_t>(i)];
  }
  return Pattern(std::move(letters), std::move(legend));
}

std::vector<std::pair<Letter, Letter>> Pattern::two_factors() const {
  std::vector<std::pair<Letter, Letter>> out;
  if (letters_.size() < 2) return out;
  std::vector<bool> seen(static_cast<std::size_t>(alphabet_size_) *
                             static_cast<std::size_t>(alphabet_size_),
                         false);
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
    std::size_t id = static_cast<std::size_t>(letters_[i]) *
                         static_cast<std::size_t>(alphabet_size_) +
                     static_cast<std::size_t>(letters_[i + 1]);
    if (!seen[id]) {
      seen[id] = true;
      out.emplace_back(letters_[i], letters_[i + 1]);
    }
  }
  return out;
}

bool Pattern::has_adjacent_repeat() const {
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
    if (letters_[i] == letters_[i + 1]) return true;
  }
  return false;
}

void enumerate_canonical(std::size_t length, int max_letters,
                         const std::function<void(const std::vector<Letter>&, int)>& fn) {
  if (length == 0 || max_letters <= 0) return;
  std::vector<Letter> cur(length, 0);
  // Depth-first over restricted growth sequences: cur[i] <= 1 + max(prefix).
  std::vector<int> prefix_max(length, 0);
  std::size_t pos = 0;
  cur[0] = 0;
  prefix_max[0] = 0;
  while (true) {
    if (pos + 1 == length) {
      fn(cur, prefix_max[pos] + 1);
      // backtrack to the rightmost position that can still be incremented
      while (true) {
        int limit = pos == 0 ? 0 : std::min(prefix_max[pos - 1] + 1, max_letters - 1);
        if (cur[pos] < limit) {
          ++cur[pos];
          prefix_max[pos] = pos == 0 ? cur[0] : std::max(prefix_max[pos - 1], cur[pos]);
          break;
        }
        if (pos == 0) return;
        --pos;
      }
    } else {
      ++pos;
      cur[pos] = 0;
      prefix_max[pos] = prefix_max[pos - 1];
    }
  }
}

}  // namespace unavoid
