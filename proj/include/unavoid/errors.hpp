#pragma once

#include <stdexcept>
#include <string>

namespace unavoid {

enum class Errc {
  empty_pattern,
  alphabet_cap_exceeded,
  letter_absent,
  same_letter,
  missing_image,
  out_of_range,
  budget_exceeded,
  parse_error,
  strategy_disagreement,
};

// Library-wide error type. The CLI maps Errc to exit codes (usage errors
// exit 2, budget exhaustion exits 3).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(Errc::budget_exceeded, what) {}
};

}  // namespace unavoid
