#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/matrix.hpp"

namespace qweyl {

/// Outcome of one identity (or one family of identity instances).
struct Check {
  std::string name;
  bool passed = true;
  std::size_t instances = 1;
  std::optional<Mismatch> mismatch;
  std::string detail;
};

/// Result of a verifier: failure is data, never an exception.
struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t failures() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void merge(const Report& other);
  /// First failing check, if any.
  const Check* first_failure() const;
};

/// Exact matrix identity lhs == rhs.
Check compare_exact(std::string name, const QMatrix& lhs, const QMatrix& rhs);
/// Exact scalar identity lhs == rhs.
Check compare_exact(std::string name, const RingElem& lhs, const RingElem& rhs);

/// Folds a family of scalar/matrix checks into one entry that keeps the
/// first failure.
class CheckFamily {
public:
  explicit CheckFamily(std::string name) { check_.name = std::move(name); check_.instances = 0; }
  void record(const Check& c);
  void record(bool ok, const std::string& detail);
  Check result() const { return check_; }

private:
  Check check_;
};

/// One-line description of a check, e.g. "PASS four-braid R-form (x3)".
std::string describe(const Check& c);

}  // namespace qweyl
