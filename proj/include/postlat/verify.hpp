#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace postlat {

struct CriterionResult {
  int id = 0;
  std::string suite;
  std::string title;
  bool ok = false;  // the checked property holds
  double seconds = 0;
  double limit = 0;
  std::string detail;

  bool passed() const { return ok && seconds <= limit; }
};

/// unary, lgen, implication, hat, gadgets, wchain, zlaws, galois, ck,
/// intervals, classifier; "all" runs every suite in that order.
std::vector<std::string> suite_names();
std::vector<CriterionResult> run_suite(std::string_view name);
std::string format_result(const CriterionResult& r);

}  // namespace postlat
