#include "qweyl/report.hpp"

#include <sstream>

namespace qweyl {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed ? 0 : 1;
  return n;
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

const Check* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

Check compare_exact(std::string name, const QMatrix& lhs, const QMatrix& rhs) {
  Check c;
  c.name = std::move(name);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    c.passed = false;
    c.detail = "shape mismatch";
    return c;
  }
  c.mismatch = first_difference(lhs, rhs);
  c.passed = !c.mismatch.has_value();
  return c;
}

Check compare_exact(std::string name, const RingElem& lhs, const RingElem& rhs) {
  Check c;
  c.name = std::move(name);
  if (!(lhs == rhs)) {
    c.passed = false;
    c.mismatch = Mismatch{0, 0, lhs, rhs};
  }
  return c;
}

void CheckFamily::record(const Check& c) {
  ++check_.instances;
  if (!c.passed && check_.passed) {
    check_.passed = false;
    check_.mismatch = c.mismatch;
    check_.detail = c.name + (c.detail.empty() ? "" : ": " + c.detail);
  }
}

void CheckFamily::record(bool ok, const std::string& detail) {
  Check c;
  c.name = detail;
  c.passed = ok;
  record(c);
}

std::string describe(const Check& c) {
  std::ostringstream os;
  os << (c.passed ? "PASS " : "FAIL ") << c.name;
  if (c.instances != 1) os << " (x" << c.instances << ")";
  if (!c.passed) {
    if (!c.detail.empty()) os << " [" << c.detail << "]";
    if (c.mismatch)
      os << " first difference at (" << c.mismatch->row << "," << c.mismatch->col
         << "): " << c.mismatch->lhs.to_string() << " != " << c.mismatch->rhs.to_string();
  }
  return os.str();
}

}  // namespace qweyl
