#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unavoid/errors.hpp"

namespace unavoid {

// Nonnegative arbitrary-precision integer, base 10^9 limbs. Sized for the
// bound recursions and counting formulas: schoolbook arithmetic only.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return limbs_.empty(); }
  std::size_t digit_count() const;
  std::string to_string() const;
  std::uint64_t to_uint64() const;  // throws when the value does not fit
  bool fits_uint64() const;

  friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
  friend bool operator<(const BigUint& a, const BigUint& b);
  friend bool operator<=(const BigUint& a, const BigUint& b) { return !(b < a); }
  friend bool operator>(const BigUint& a, const BigUint& b) { return b < a; }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return !(a < b); }

  BigUint operator+(const BigUint& rhs) const;
  BigUint operator-(const BigUint& rhs) const;  // requires *this >= rhs
  BigUint operator*(const BigUint& rhs) const;

  BigUint div_small(std::uint32_t d) const;
  std::uint32_t mod_small(std::uint32_t d) const;

  // base^exp, or nullopt once the result would exceed digit_cap decimal
  // digits (the astronomic cells are detected without being computed).
  static std::optional<BigUint> pow_capped(const BigUint& base, const BigUint& exp,
                                           std::size_t digit_cap);

 private:
  void trim();
  static constexpr std::uint32_t kBase = 1'000'000'000;
  std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros; empty == 0
};

// Exact nonnegative rational. Instances built by the library are reduced.
struct Rational {
  BigUint num;
  BigUint den = 1;

  static Rational reduced_u64(std::uint64_t n, std::uint64_t d);

  bool operator==(const Rational& other) const {
    return num * other.den == other.num * den;
  }
  bool operator<=(const Rational& other) const {
    return num * other.den <= other.num * den;
  }
  std::string to_string() const;
};

}  // namespace unavoid
