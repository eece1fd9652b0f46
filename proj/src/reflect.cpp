#include "unavoid/reflect.hpp"

#include <algorithm>

namespace unavoid {

std::vector<Letter> apply_morphism(const Morphism& m, const Pattern& p) {
  std::vector<Letter> out;
  for (Letter x : p.letters()) {
    if (static_cast<std::size_t>(x) >= m.images.size() ||
        m.images[static_cast<std::size_t>(x)].empty())
      throw Error(Errc::missing_image, "morphism has no image for letter " + p.token(x));
    const auto& img = m.images[static_cast<std::size_t>(x)];
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

namespace {

struct Matcher {
  const std::vector<Letter>& word;
  const Pattern& pattern;
  std::vector<std::vector<Letter>> images;
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  bool exact_end;  // factor must consume the word to its end

  Matcher(const std::vector<Letter>& w, const Pattern& p, std::uint64_t budget, bool exact_end)
      : word(w),
        pattern(p),
        images(static_cast<std::size_t>(p.alphabet_size())),
        budget(budget),
        exact_end(exact_end) {}

  // Minimal word length the pattern suffix from pi still needs.
  std::size_t min_rest(std::size_t pi) const {
    std::size_t need = 0;
    for (std::size_t i = pi; i < pattern.size(); ++i) {
      const auto& img = images[static_cast<std::size_t>(pattern.at(i))];
      need += img.empty() ? 1 : img.size();
    }
    return need;
  }

  bool match(std::size_t pi, std::size_t wi) {
    if (++nodes > budget) throw BudgetError("reflects search budget exceeded");
    if (pi == pattern.size()) return !exact_end || wi == word.size();
    const Letter x = pattern.at(pi);
    auto& img = images[static_cast<std::size_t>(x)];
    if (!img.empty()) {
      if (wi + img.size() > word.size()) return false;
      if (!std::equal(img.begin(), img.end(), word.begin() + static_cast<std::ptrdiff_t>(wi)))
        return false;
      return match(pi + 1, wi + img.size());
    }
    const std::size_t rest = min_rest(pi + 1);
    if (word.size() < wi + 1 + rest) return false;
    const std::size_t max_len = word.size() - wi - rest;
    for (std::size_t len = 1; len <= max_len; ++len) {
      img.assign(word.begin() + static_cast<std::ptrdiff_t>(wi),
                 word.begin() + static_cast<std::ptrdiff_t>(wi + len));
      if (match(pi + 1, wi + len)) return true;
      img.clear();
    }
    img.clear();
    return false;
  }
};

std::optional<Morphism> search(const std::vector<Letter>& word, const Pattern& p,
                               ReflectOptions opts, bool exact_end) {
  if (p.empty()) throw Error(Errc::empty_pattern, "cannot reflect the empty pattern");
  Matcher m(word, p, opts.node_budget, exact_end);
  for (std::size_t start = 0; start + p.size() <= word.size(); ++start) {
    if (word.size() < start + m.min_rest(0)) break;
    if (m.match(0, start)) {
      Morphism found{m.images};
      // replay check: the witness image must really occur at `start`
      auto image = apply_morphism(found, p);
      if (start + image.size() > word.size() ||
          !std::equal(image.begin(), image.end(),
                      word.begin() + static_cast<std::ptrdiff_t>(start)))
        throw Error(Errc::out_of_range, "internal: reflect witness failed replay");
      return found;
    }
    for (auto& img : m.images) img.clear();
  }
  return std::nullopt;
}

}  // namespace

std::optional<Morphism> reflects(const Pattern& w, const Pattern& p, ReflectOptions opts) {
  std::vector<Letter> word(w.letters().begin(), w.letters().end());
  return search(word, p, opts, false);
}

std::optional<Morphism> reflects_at_suffix(const std::vector<Letter>& w, const Pattern& p,
                                           ReflectOptions opts) {
  return search(w, p, opts, true);
}

Pattern zimin(int k, std::size_t length_cap) {
  if (k < 1) throw Error(Errc::out_of_range, "zimin index must be positive");
  if (k >= 63 || ((std::size_t{1} << k) - 1) > length_cap)
    throw Error(Errc::out_of_range, "zimin word of order " + std::to_string(k) +
                                        " exceeds the length cap");
  std::vector<Letter> letters{0};
  for (Letter next = 1; next < k; ++next) {
    std::vector<Letter> doubled = letters;
    doubled.push_back(next);
    doubled.insert(doubled.end(), letters.begin(), letters.end());
    letters = std::move(doubled);
  }
  return Pattern(std::move(letters));
}

bool decide_via_zimin(const Pattern& p, ReflectOptions opts, std::size_t length_cap) {
  if (p.empty()) return true;
  return reflects(zimin(p.alphabet_size(), length_cap), p, opts).has_value();
}

}  // namespace unavoid
