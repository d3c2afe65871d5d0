#pragma once

// The catalogue of claims, one runner per entry id, and the run-everything
// driver that checks each verdict against a manifest of expected answers.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zoo/report.hpp"

namespace zoo {

using Params = std::map<std::string, std::string>;

struct EntryInfo {
  std::string id;
  std::string claim;
  long default_digits = 30;
};

// Sorted by id.
const std::vector<EntryInfo>& entry_catalog();
// UnknownEntry for ids outside the catalogue.
const EntryInfo& entry_info(const std::string& id);

// Default digits of the entry unless `digits` is given; max_terms from
// ZOO_MAX_TERMS when set.
PrecisionContext entry_context(const std::string& id, std::optional<long> digits = {});

// ParamError on unknown or ill-typed parameters; module errors propagate.
VerdictReport run_entry(const std::string& id, const Params& params,
                        const PrecisionContext& ctx);

struct RunAllRow {
  std::string entry_id;
  std::string expected;
  std::string actual;  // classification, or "ERROR"
  bool matched = false;
  std::string error;   // what() of the escaped exception, if any
  int error_code = 0;
};

struct RunAllResult {
  std::vector<VerdictReport> reports;  // sorted by entry_id
  std::vector<RunAllRow> rows;         // sorted by entry_id
  // 0 all matched; 2 parameter errors; 3 resource/convergence errors;
  // 1 any other mismatch.
  int exit_code = 0;
};

// Config (JSON, may be empty or absent fields):
//   {"digits": N, "manifest": "path", "entries": {"<id>": {"digits": N,
//    "params": {"key": "value"}}}}
// Manifest: {"entries": [{"entry_id": ..., "expected": ..., "params": {...},
//            "digits": N}]}. ConfigError when either fails to parse.
RunAllResult run_all_from_json(const std::string& config_json,
                               const std::string& default_manifest_path);
// Reads the config file ("" = defaults) and writes the reports to out_path
// ("" = nowhere).
RunAllResult run_all(const std::string& config_path, const std::string& out_path);

std::string summary_table(const RunAllResult& result);

// Manifest shipped with the sources / installed next to the library.
std::string default_manifest_path();

}  // namespace zoo
