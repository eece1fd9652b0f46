#include "unavoid/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace unavoid {

BigUint::BigUint(std::uint64_t v) {
  while (v > 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
    v /= kBase;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::digit_count() const {
  if (limbs_.empty()) return 1;
  std::size_t digits = (limbs_.size() - 1) * 9;
  std::uint32_t top = limbs_.back();
  while (top > 0) {
    ++digits;
    top /= 10;
  }
  return digits;
}

std::string BigUint::to_string() const {
  if (limbs_.empty()) return "0";
  std::string out = std::to_string(limbs_.back());
  for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
    std::string part = std::to_string(*it);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

bool BigUint::fits_uint64() const {
  if (limbs_.size() < 3) return true;
  if (limbs_.size() > 3) return false;
  // 2^64-1 = 18'446'744'073'709'551'615 = [551615615? ...]; compare directly
  return *this <= BigUint(UINT64_MAX);
}

std::uint64_t BigUint::to_uint64() const {
  if (!fits_uint64()) throw Error(Errc::out_of_range, "value does not fit in 64 bits");
  std::uint64_t v = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) v = v * kBase + *it;
  return v;
}

bool operator<(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
  }
  return false;
}

BigUint BigUint::operator+(const BigUint& rhs) const {
  BigUint out;
  const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
  out.limbs_.reserve(n + 1);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t sum = carry;
    if (i < limbs_.size()) sum += limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    out.limbs_.push_back(static_cast<std::uint32_t>(sum % kBase));
    carry = static_cast<std::uint32_t>(sum / kBase);
  }
  if (carry) out.limbs_.push_back(carry);
  return out;
}

BigUint BigUint::operator-(const BigUint& rhs) const {
  if (*this < rhs) throw Error(Errc::out_of_range, "BigUint subtraction underflow");
  BigUint out;
  out.limbs_.reserve(limbs_.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(limbs_[i]) - borrow -
                     (i < rhs.limbs_.size() ? static_cast<std::int64_t>(rhs.limbs_[i]) : 0);
    if (v < 0) {
      v += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.limbs_.push_back(static_cast<std::uint32_t>(v));
  }
  out.trim();
  return out;
}

BigUint BigUint::operator*(const BigUint& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  BigUint out;
  out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] +
                          out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    std::size_t k = i + rhs.limbs_.size();
    while (carry) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
      ++k;
    }
  }
  out.trim();
  return out;
}

BigUint BigUint::div_small(std::uint32_t d) const {
  if (d == 0) throw Error(Errc::out_of_range, "division by zero");
  BigUint out;
  out.limbs_.assign(limbs_.size(), 0);
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = rem * kBase + limbs_[i];
    out.limbs_[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  out.trim();
  return out;
}

std::uint32_t BigUint::mod_small(std::uint32_t d) const {
  if (d == 0) throw Error(Errc::out_of_range, "division by zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) rem = (rem * kBase + limbs_[i]) % d;
  return static_cast<std::uint32_t>(rem);
}

std::optional<BigUint> BigUint::pow_capped(const BigUint& base, const BigUint& exp,
                                           std::size_t digit_cap) {
  if (exp.is_zero()) return BigUint(1);
  if (base.is_zero()) return BigUint(0);
  if (base == BigUint(1)) return BigUint(1);
  // base >= 2, so the digit count grows linearly in the exponent; estimate
  // it up front and refuse the astronomic cases without computing them
  if (!exp.fits_uint64()) return std::nullopt;
  const std::uint64_t e = exp.to_uint64();
  const long double log10_base =
      std::log10(static_cast<long double>(base.limbs_.back())) +
      9.0L * static_cast<long double>(base.limbs_.size() - 1);
  const long double est_digits = static_cast<long double>(e) * log10_base;
  if (est_digits > static_cast<long double>(digit_cap) * 1.02L + 64) return std::nullopt;

  const std::size_t limb_cap = digit_cap / 9 + 2;
  BigUint result(1);
  BigUint sq = base;
  std::uint64_t k = e;
  while (true) {
    if (k & 1) {
      result = result * sq;
      if (result.limbs_.size() > limb_cap) return std::nullopt;
    }
    k >>= 1;
    if (k == 0) break;
    sq = sq * sq;
    if (sq.limbs_.size() > limb_cap) return std::nullopt;
  }
  if (result.digit_count() > digit_cap) return std::nullopt;
  return result;
}

Rational Rational::reduced_u64(std::uint64_t n, std::uint64_t d) {
  if (d == 0) throw Error(Errc::out_of_range, "zero denominator");
  const std::uint64_t g = std::gcd(n, d);
  return Rational{BigUint(n / g), BigUint(d / g)};
}

std::string Rational::to_string() const {
  if (den == BigUint(1)) return num.to_string();
  return num.to_string() + "/" + den.to_string();
}

}  // namespace unavoid
