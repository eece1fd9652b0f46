#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unavoid/errors.hpp"

namespace unavoid {

// A letter is a dense 0-based index into the pattern's alphabet; display
// tokens live in the legend only.
using Letter = int;

// A finite word over a dense alphabet. Every index in [0, alphabet_size)
// occurs in the letter sequence; the empty pattern (the reduction target)
// is representable but rejected by parse().
class Pattern {
 public:
  static constexpr std::size_t kDefaultAlphabetCap = 1024;

  Pattern() = default;

  // Builds from a dense letter sequence. Tokens default to "a", "b", ...
  // when no legend is supplied.
  explicit Pattern(std::vector<Letter> letters, std::vector<std::string> legend = {});

  // Parses a pattern from text. Whitespace-separated tokens if the text
  // contains whitespace, one token per character if it is pure ASCII
  // alphanumerics, otherwise the whole text is a single token.
  static Pattern parse(const std::string& text, std::size_t alphabet_cap = kDefaultAlphabetCap);

  // Builds from an explicit token sequence (first occurrence assigns indices).
  static Pattern from_tokens(const std::vector<std::string>& tokens,
                             std::size_t alphabet_cap = kDefaultAlphabetCap);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int alphabet_size() const { return alphabet_size_; }
  std::span<const Letter> letters() const { return letters_; }
  Letter at(std::size_t i) const { return letters_[i]; }

  const std::vector<std::string>& legend() const { return legend_; }
  const std::string& token(Letter x) const { return legend_[static_cast<std::size_t>(x)]; }
  std::optional<Letter> index_of_token(const std::string& tok) const;

  // Number of occurrences of x (0 for out-of-range x).
  std::size_t occurrences(Letter x) const;

  // Renders the pattern; concatenated when all tokens are single characters,
  // space-separated otherwise. Round-trips through parse().
  std::string format() const;

  // Letters renamed by order of first occurrence, legend permuted along.
  Pattern canonicalize() const;

  // Compact byte key of the canonical form, for memo maps.
  std::string canonical_key() const;

  // Removes all occurrences of every letter in xs and re-densifies the
  // alphabet (order-preserving compaction). May produce the empty pattern.
  Pattern delete_letters(const std::set<Letter>& xs) const;

  // Replaces every occurrence of x by y and re-densifies. Length preserved.
  Pattern identify(Letter x, Letter y) const;

  // Distinct ordered adjacent pairs, in order of first occurrence.
  std::vector<std::pair<Letter, Letter>> two_factors() const;

  bool has_adjacent_repeat() const;

  bool operator==(const Pattern& other) const {
    return letters_ == other.letters_ && alphabet_size_ == other.alphabet_size_;
  }

 private:
  void check_letter(Letter x) const;

  std::vector<Letter> letters_;
  int alphabet_size_ = 0;
  std::vector<std::string> legend_;
};

// Default display token for letter index i: a..z, then l26, l27, ...
std::string default_token(Letter i);

// Calls fn(letters, distinct_count) for every canonical pattern of exactly
// the given length over at most max_letters letters (restricted growth
// sequences). Used by the census and the exhaustive test sweeps.
void enumerate_canonical(std::size_t length, int max_letters,
                         const std::function<void(const std::vector<Letter>&, int)>& fn);

}  // namespace unavoid
