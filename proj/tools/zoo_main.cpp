#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zoo/borwein_integral.hpp"
#include "zoo/entries.hpp"

namespace {

zoo::Params parse_params(const std::vector<std::string>& raw) {
  zoo::Params out;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw zoo::ParamError("--param expects key=value, got '" + kv + "'");
    }
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw zoo::ConfigError("cannot write " + path);
  out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zoo: high-precision checks of dubious identities"};
  app.require_subcommand(1);

  std::string entry;
  long digits = 0;
  long terms = 0;
  std::vector<std::string> raw_params;
  std::string json_path;
  auto* run = app.add_subcommand("run", "Run one entry and print its verdict report");
  run->add_option("entry_id", entry, "Entry id (see `zoo list`)")->required();
  run->add_option("--digits", digits, "Output digits (default: per entry)");
  run->add_option("--terms", terms, "Shorthand for --param terms=N");
  run->add_option("--param", raw_params, "key=value, repeatable");
  run->add_option("--json", json_path, "Also write the report here");

  std::string config_path;
  std::string all_json;
  auto* run_all = app.add_subcommand("run-all", "Run every manifest entry and compare verdicts");
  run_all->add_option("--config", config_path, "JSON config with overrides");
  run_all->add_option("--json", all_json, "Write the report array here");

  auto* list = app.add_subcommand("list", "List entry ids and their claims");

  int ladder_max = 7;
  double ladder_tol = 1e-10;
  bool ladder_csv = false;
  auto* ladder = app.add_subcommand("ladder", "Sinc-J0 integral ladder as a table");
  ladder->add_option("--max", ladder_max, "Last rung (factors 1/3 .. 1/(2n+1))");
  ladder->add_option("--tol", ladder_tol, "Absolute quadrature tolerance");
  ladder->add_flag("--csv", ladder_csv, "CSV instead of JSON lines");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (const auto& e : zoo::entry_catalog()) {
        std::cout << e.id << "\t" << e.claim << "\n";
      }
      return 0;
    }
    if (*run) {
      zoo::Params params = parse_params(raw_params);
      if (terms > 0) params["terms"] = std::to_string(terms);
      std::optional<long> d;
      if (digits > 0) d = digits;
      zoo::VerdictReport r = zoo::run_entry(entry, params, zoo::entry_context(entry, d));
      const std::string text = zoo::to_json(r);
      std::cout << text << "\n";
      if (!json_path.empty()) write_file(json_path, text);
      return 0;
    }
    if (*run_all) {
      zoo::RunAllResult res = zoo::run_all(config_path, all_json);
      std::cout << zoo::to_json(res.reports) << "\n";
      std::cout << zoo::summary_table(res);
      return res.exit_code;
    }
    if (*ladder) {
      auto ctx = zoo::PrecisionContext::with_digits(20);
      auto rows = zoo::ladder_table(ladder_max, ladder_tol, ctx);
      if (ladder_csv) {
        std::cout << zoo::ladder_csv(rows);
      } else {
        for (const auto& r : rows) {
          nlohmann::json line = {{"case", r.label},
                                 {"verdict", zoo::to_string(r.verdict)},
                                 {"value", r.value.to_string(15)},
                                 {"relative_deficit", r.relative_deficit.to_string(6)},
                                 {"error_estimate", r.abs_error_estimate.to_string(3)}};
          std::cout << line.dump() << "\n";
        }
      }
      return 0;
    }
  } catch (const zoo::Error& e) {
    std::cerr << "zoo: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "zoo: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
