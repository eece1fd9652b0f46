#include "unavoid/analysis.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace unavoid {

namespace {

BoundValue overflow_value() { return BoundValue{std::nullopt}; }

BigUint mul_checked(const BigUint& a, const BigUint& b, std::size_t digit_cap, bool& overflow) {
  if (overflow) return {};
  BigUint out = a * b;
  if (out.digit_count() > digit_cap) overflow = true;
  return out;
}

// Evaluates N(n, r) for an exact big-integer r (already-overflowed arguments
// short-circuit: N is monotone in r).
BoundValue eval_bound(std::uint32_t n, const BoundValue& r_arg, std::size_t digit_cap) {
  if (r_arg.overflow()) return overflow_value();
  const BigUint& r = *r_arg.value;
  if (n == 0 || r.is_zero()) throw Error(Errc::out_of_range, "bound arguments must be positive");
  if (n == 1) {
    BigUint v = r + BigUint(1);
    if (v.digit_count() > digit_cap) return overflow_value();
    return BoundValue{v};
  }
  if (r == BigUint(1)) return BoundValue{BigUint(n) + BigUint(1)};
  // n >= 2: N(n, r) >= 4^(r-2), so far-out columns overflow any digit cap
  if (BigUint(static_cast<std::uint64_t>(digit_cap) * 2 + 8) < r) return overflow_value();
  const std::uint64_t r64 = r.to_uint64();

  BoundValue row = BoundValue{BigUint(n) + BigUint(1)};  // N(n, 1)
  for (std::uint64_t b = 2; b <= r64; ++b) {
    if (row.overflow()) return overflow_value();
    auto inner_pow = BigUint::pow_capped(BigUint(b - 1), *row.value, digit_cap);
    BoundValue inner_arg = overflow_value();
    if (inner_pow) {
      bool over = false;
      BigUint arg = mul_checked(BigUint(n) * BigUint(n), *inner_pow, digit_cap, over);
      if (!over) inner_arg = BoundValue{arg};
    }
    BoundValue inner = eval_bound(n - 1, inner_arg, digit_cap);
    if (inner.overflow()) {
      row = overflow_value();
      continue;
    }
    bool over = false;
    BigUint next = mul_checked(mul_checked(BigUint(n), *row.value, digit_cap, over),
                               *inner.value, digit_cap, over);
    row = over ? overflow_value() : BoundValue{next};
  }
  return row;
}

}  // namespace

BoundValue bound_n(std::uint32_t n, std::uint32_t r, std::size_t digit_cap) {
  if (n == 0 || r == 0) throw Error(Errc::out_of_range, "bound arguments must be positive");
  return eval_bound(n, BoundValue{BigUint(r)}, digit_cap);
}

Rational density_bound(std::uint32_t r, std::uint32_t n) {
  if (r == 0 || n == 0) throw Error(Errc::out_of_range, "density arguments must be positive");
  auto num = BigUint::pow_capped(BigUint(r - 1), BigUint(n - 1), 1'000'000);
  auto den = BigUint::pow_capped(BigUint(r), BigUint(n - 1), 1'000'000);
  if (!num || !den) throw Error(Errc::out_of_range, "density exponent too large");
  return Rational{*num, *den};  // gcd(r-1, r) = 1: already reduced
}

BoundValue count_bound(std::uint32_t r, std::size_t digit_cap) {
  if (r < 3) throw Error(Errc::out_of_range, "count bound requires an alphabet of more than 2 letters");
  if (r >= 64) return overflow_value();  // 2^r - 1 digits alone blow any feasible cap
  const std::uint64_t exp = (std::uint64_t{1} << r) - 1;
  auto power = BigUint::pow_capped(BigUint(r - 1), BigUint(exp), digit_cap);
  if (!power) return overflow_value();
  BigUint value = (*power - BigUint(1)).div_small(r - 2) * BigUint(r);
  if (value.digit_count() > digit_cap) return overflow_value();
  return BoundValue{value};
}

CensusReport census(std::uint32_t r, std::uint32_t n, CensusOptions options) {
  if (r == 0 || n == 0) throw Error(Errc::out_of_range, "census arguments must be positive");
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (total > options.enumeration_budget / r + 1)
      throw BudgetError("census enumeration budget exceeded: r^n too large");
    total *= r;
  }
  if (total > options.enumeration_budget)
    throw BudgetError("census enumeration budget exceeded: r^n too large");

  const int max_letters = static_cast<int>(std::min<std::uint64_t>(r, n));
  std::vector<std::vector<Letter>> classes;
  std::vector<std::uint64_t> weights;
  enumerate_canonical(n, max_letters, [&](const std::vector<Letter>& letters, int k) {
    std::uint64_t weight = 1;
    for (int i = 0; i < k; ++i) weight *= r - static_cast<std::uint32_t>(i);
    classes.push_back(letters);
    weights.push_back(weight);
  });

  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::uint64_t> unavoidable_per(workers, 0);
  std::vector<std::uint64_t> weight_per(workers, 0);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&](unsigned w) {
    try {
      Decider decider(options.decide);
      for (std::size_t i = w; i < classes.size(); i += workers) {
        weight_per[w] += weights[i];
        if (decider.decide(Pattern(classes[i])).unavoidable()) unavoidable_per[w] += weights[i];
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  CensusReport report;
  report.r = r;
  report.n = n;
  report.total = total;
  std::uint64_t weight_sum = 0;
  for (unsigned w = 0; w < workers; ++w) {
    report.unavoidable += unavoidable_per[w];
    weight_sum += weight_per[w];
  }
  if (weight_sum != total)
    throw Error(Errc::out_of_range, "internal: census class weights do not sum to r^n");
  report.fraction = Rational::reduced_u64(report.unavoidable, total);
  report.bound = density_bound(r, n);
  report.bound_holds = report.fraction <= report.bound;
  return report;
}

AvoidanceResult longest_avoiding(const Pattern& p, int r, std::size_t cap, ReflectOptions opts) {
  if (r < 1 || cap < 1) throw Error(Errc::out_of_range, "avoid search needs r >= 1 and cap >= 1");
  AvoidanceResult best;
  std::vector<Letter> word;
  std::vector<Letter> choice{0};  // next letter to try at each depth
  while (true) {
    if (choice.back() >= r) {
      choice.pop_back();
      if (word.empty()) return best;
      word.pop_back();
      ++choice.back();
      continue;
    }
    word.push_back(choice.back());
    if (reflects_at_suffix(word, p, opts)) {
      word.pop_back();
      ++choice.back();
      continue;
    }
    if (word.size() > best.max_length) {
      best.max_length = word.size();
      best.witness = word;
    }
    if (word.size() >= cap) {
      best.cap_reached = true;
      return best;
    }
    choice.push_back(0);
  }
}

}  // namespace unavoid
