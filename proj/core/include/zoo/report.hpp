#pragma once

// Verdict reports: what was claimed, what came out, and how far apart the
// two are. Numbers travel as decimal strings only.

#include <string>
#include <vector>

#include "zoo/numeric.hpp"

namespace zoo {

enum class Classification { True, Fraud, False };

const char* to_string(Classification c);
// "TRUE" / "FRAUD" / "FALSE"; ParamError otherwise.
Classification parse_classification(const std::string& text);

struct VerdictReport {
  std::string entry_id;
  std::string claim;
  std::string claimed_value;
  std::string computed_value;
  std::string abs_error;
  Classification classification = Classification::True;
  long precision_digits = 0;
  long terms_used = 0;
  std::string method;
  long runtime_ms = 0;
  std::vector<std::string> notes;

  friend bool operator==(const VerdictReport&, const VerdictReport&) = default;
};

// `resolved`: abs_error is known to be nonzero (computed in exact arithmetic
// or as a correction term to relative accuracy), not just rounding noise.
//  - exact zero, or unresolved and <= 10^-(digits-5) max(1,|claimed|): TRUE
//  - otherwise below fraud_threshold: FRAUD
//  - otherwise: FALSE
Classification classify(const BigReal& abs_error, bool resolved, const BigReal& claimed,
                        long digits, double fraud_threshold);

std::string to_json(const VerdictReport& r, int indent = 2);
std::string to_json(const std::vector<VerdictReport>& reports, int indent = 2);
// ConfigError on malformed input.
VerdictReport report_from_json(const std::string& text);
std::vector<VerdictReport> reports_from_json(const std::string& text);

}  // namespace zoo
