#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taf {

enum class ErrorKind {
  kInvalidArgument,
  kZeroDenominator,
  kDivisionByZero,
  kMissingCoverage,
  kNegativeMiss,
  kNonPositiveTotal,
  kParse,
  kIo,
  kUnknownKey,
};

class ModelError : public std::runtime_error {
 public:
  ModelError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Collects invariant violations. Empty means valid.
class ValidationReport {
 public:
  void add(std::string field, std::string message) {
    violations_.push_back({std::move(field), std::move(message)});
  }

  struct Violation {
    std::string field;
    std::string message;
  };

  bool ok() const noexcept { return violations_.empty(); }
  std::size_t size() const noexcept { return violations_.size(); }
  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

  void merge(const ValidationReport& other) {
    violations_.insert(violations_.end(), other.violations_.begin(),
                       other.violations_.end());
  }

  bool mentions(std::string_view field) const {
    for (const auto& v : violations_) {
      if (v.field == field) return true;
    }
    return false;
  }

 private:
  std::vector<Violation> violations_;
};

}  // namespace taf
