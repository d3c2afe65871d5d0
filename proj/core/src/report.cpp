#include "zoo/report.hpp"

#include <json.hpp>

namespace zoo {

using nlohmann::json;

const char* to_string(Classification c) {
  switch (c) {
    case Classification::True: return "TRUE";
    case Classification::Fraud: return "FRAUD";
    case Classification::False: return "FALSE";
  }
  return "?";
}

Classification parse_classification(const std::string& text) {
  if (text == "TRUE") return Classification::True;
  if (text == "FRAUD") return Classification::Fraud;
  if (text == "FALSE") return Classification::False;
  throw ParamError("unknown classification: " + text);
}

Classification classify(const BigReal& abs_error, bool resolved, const BigReal& claimed,
                        long digits, double fraud_threshold) {
  if (abs_error.is_zero()) return Classification::True;
  if (!resolved) {
    const Precision prec = abs_error.precision();
    BigReal scale = max(BigReal(1L, prec), abs(claimed));
    if (abs_error <= pow10(-(digits - 5), prec) * scale) return Classification::True;
  }
  if (abs_error < BigReal(fraud_threshold, abs_error.precision())) return Classification::Fraud;
  return Classification::False;
}

namespace {

json to_object(const VerdictReport& r) {
  return json{{"entry_id", r.entry_id},
              {"claim", r.claim},
              {"claimed_value", r.claimed_value},
              {"computed_value", r.computed_value},
              {"abs_error", r.abs_error},
              {"classification", to_string(r.classification)},
              {"precision_digits", r.precision_digits},
              {"terms_used", r.terms_used},
              {"method", r.method},
              {"runtime_ms", r.runtime_ms},
              {"notes", r.notes}};
}

VerdictReport from_object(const json& j) {
  try {
    VerdictReport r;
    r.entry_id = j.at("entry_id").get<std::string>();
    r.claim = j.at("claim").get<std::string>();
    r.claimed_value = j.at("claimed_value").get<std::string>();
    r.computed_value = j.at("computed_value").get<std::string>();
    r.abs_error = j.at("abs_error").get<std::string>();
    r.classification = parse_classification(j.at("classification").get<std::string>());
    r.precision_digits = j.at("precision_digits").get<long>();
    r.terms_used = j.at("terms_used").get<long>();
    r.method = j.at("method").get<std::string>();
    r.runtime_ms = j.at("runtime_ms").get<long>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad verdict report: ") + e.what());
  }
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const VerdictReport& r, int indent) {
  return to_object(r).dump(indent);
}

std::string to_json(const std::vector<VerdictReport>& reports, int indent) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_object(r));
  return arr.dump(indent);
}

VerdictReport report_from_json(const std::string& text) { return from_object(parse(text)); }

std::vector<VerdictReport> reports_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_array()) throw ConfigError("expected a JSON array of reports");
  std::vector<VerdictReport> out;
  for (const auto& e : j) out.push_back(from_object(e));
  return out;
}

}  // namespace zoo
