#pragma once

// Property suites replayed against one algebra at a window bound.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mvspec/algebra.hpp"

namespace mvspec {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  std::string detail;  // counterexample or error text when failed

  /// `CHECK <suite>.<name> PASS` or `CHECK <suite>.<name> FAIL <detail>`.
  std::string line() const;
};

enum class Suite { axioms, filters, spectrum, conrad, localize };

std::string_view suite_name(Suite s);
const std::vector<Suite>& all_suites();

/// Runs one suite. Exceptions raised by a check are reported as its failure.
std::vector<CheckResult> verify_suite(Suite s, const AlgebraPtr& a, std::uint64_t window);
/// Every suite in order.
std::vector<CheckResult> verify_all(const AlgebraPtr& a, std::uint64_t window);

/// The built-in catalog of algebra signatures.
const std::vector<std::string>& catalog_entries();

}  // namespace mvspec
