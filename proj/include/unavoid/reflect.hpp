#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unavoid/pattern.hpp"

namespace unavoid {

// Non-erasing morphism from pattern letters to words over a target alphabet.
struct Morphism {
  std::vector<std::vector<Letter>> images;  // indexed by pattern letter, all nonempty
};

// Concatenation of images in pattern order. The result is a word over the
// target alphabet (not necessarily dense, hence not a Pattern).
std::vector<Letter> apply_morphism(const Morphism& m, const Pattern& p);

struct ReflectOptions {
  std::uint64_t node_budget = 10'000'000;
};

// Searches for a non-erasing morphism phi with phi(p) a factor of w.
// Backtracking over image length assignments, anchored at each start
// position of w, with immediate consistency propagation for repeated
// letters. Returns the first witness in (start, image-length) order.
std::optional<Morphism> reflects(const Pattern& w, const Pattern& p, ReflectOptions opts = {});

// Variant used by the avoiding-word search: the matched factor must end at
// the last position of w. Shares the same budget conventions.
std::optional<Morphism> reflects_at_suffix(const std::vector<Letter>& w, const Pattern& p,
                                           ReflectOptions opts = {});

// Zimin word: Z_1 = a, Z_{k+1} = Z_k x_{k+1} Z_k; length 2^k - 1 over k
// letters.
Pattern zimin(int k, std::size_t length_cap = (1u << 20));

// Cross-oracle: p with k distinct letters is unavoidable iff p reflects into
// Z_k. Rests on the classical characterization, so it is wired as an
// independent check against the decider, not as a trusted decider.
bool decide_via_zimin(const Pattern& p, ReflectOptions opts = {},
                      std::size_t length_cap = (1u << 20));

}  // namespace unavoid
