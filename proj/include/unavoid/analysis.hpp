#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unavoid/bigint.hpp"
#include "unavoid/decider.hpp"
#include "unavoid/pattern.hpp"
#include "unavoid/reflect.hpp"

namespace unavoid {

// Exact bound value, or the overflow marker once a configured decimal digit
// cap is exceeded (several cells of the length-bound recursion are
// astronomically large).
struct BoundValue {
  std::optional<BigUint> value;

  bool overflow() const { return !value.has_value(); }
  std::string to_string() const { return value ? value->to_string() : "overflow"; }
};

// Word-length bound N(n, r): every word of length N(n, r) over r letters
// reflects every unavoidable pattern of length n over r letters. Computed as
// the right-hand side of the recursion
//   N(n+1, r+1) = (n+1) * N(n+1, r) * N(n, (n+1)^2 * r^N(n+1, r))
// with bases N(1, r) = r + 1 and N(n, 1) = n + 1 (the published base-case
// sentence is self-contradictory as written; this is the reading where both
// families stay consistent with the recursion).
BoundValue bound_n(std::uint32_t n, std::uint32_t r, std::size_t digit_cap = 1'000'000);

// Probability bound ((r-1)/r)^(n-1) on a length-n pattern over r letters
// being unavoidable.
Rational density_bound(std::uint32_t r, std::uint32_t n);

// Upper bound r * ((r-1)^(2^r - 1) - 1) / (r - 2) on the number of
// unavoidable patterns over r letters; requires r > 2.
BoundValue count_bound(std::uint32_t r, std::size_t digit_cap = 1'000'000);

struct CensusReport {
  std::uint32_t r = 0;
  std::uint32_t n = 0;
  std::uint64_t total = 0;
  std::uint64_t unavoidable = 0;
  Rational fraction;
  Rational bound;
  bool bound_holds = false;
};

struct CensusOptions {
  std::uint64_t enumeration_budget = 10'000'000;
  unsigned workers = 1;
  DecideOptions decide;
};

// Decides every word in [r]^n, deduplicating by canonical class and
// weighting each class by the number of labeled words it represents.
CensusReport census(std::uint32_t r, std::uint32_t n, CensusOptions options = {});

struct AvoidanceResult {
  bool cap_reached = false;
  std::size_t max_length = 0;
  std::vector<Letter> witness;
};

// Depth-first search over [r]^(<= cap), extending only prefixes that do not
// reflect p. Returns the maximum length of an avoiding word, or cap_reached
// with a witness of length cap.
AvoidanceResult longest_avoiding(const Pattern& p, int r, std::size_t cap,
                                 ReflectOptions opts = {});

}  // namespace unavoid
