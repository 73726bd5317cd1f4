#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cellstrat {

/// One violated axiom. `cell` names the witnessing object, cell or pair.
struct Violation {
  std::string check;
  std::string cell;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

/// Empty iff the checked structure is valid.
using ValidationReport = std::vector<Violation>;

/// Malformed input: unparsable files, unknown ids, broken poset axioms.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that requires a valid structure was handed an invalid one.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// An internal invariant failed (e.g. a boundary that does not square to zero).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cellstrat
