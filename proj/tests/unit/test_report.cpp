#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "zoo/entries.hpp"

using namespace zoo;

namespace {

VerdictReport sample() {
  VerdictReport r;
  r.entry_id = "entry5";
  r.claim = "x = \"y\"";
  r.claimed_value = "1.0e+0";
  r.computed_value = "9.9e-1";
  r.abs_error = "1.0e-2";
  r.classification = Classification::Fraud;
  r.precision_digits = 40;
  r.terms_used = 17;
  r.method = "direct";
  r.runtime_ms = 3;
  r.notes = {"a", "b, c"};
  return r;
}

std::string manifest_with(const std::string& entries) {
  const std::string path = testing::TempDir() + "zoo_manifest_" +
                           testing::UnitTest::GetInstance()->current_test_info()->name() + ".json";
  std::ofstream(path) << "{\"entries\": [" << entries << "]}";
  return path;
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  const VerdictReport r = sample();
  EXPECT_EQ(report_from_json(to_json(r)), r);
  EXPECT_EQ(report_from_json(to_json(r, -1)), r);
  std::vector<VerdictReport> two{r, r};
  two[1].entry_id = "sum12";
  two[1].notes.clear();
  EXPECT_EQ(reports_from_json(to_json(two)), two);
}

TEST(Report, MalformedJson) {
  EXPECT_THROW(report_from_json("{"), ConfigError);
  EXPECT_THROW(report_from_json("{\"entry_id\": 3}"), ConfigError);
  EXPECT_THROW(reports_from_json("{}"), ConfigError);
  std::string bad = to_json(sample());
  bad.replace(bad.find("FRAUD"), 5, "MAYBE");
  EXPECT_THROW(report_from_json(bad), Error);
}

TEST(Report, ClassificationNames) {
  for (auto c : {Classification::True, Classification::Fraud, Classification::False})
    EXPECT_EQ(parse_classification(to_string(c)), c);
  EXPECT_THROW(parse_classification("true"), ParamError);
}

TEST(Report, ClassifyRule) {
  const Precision p = Precision::from_digits(60);
  const BigReal one(1L, p), zero(0L, p);
  EXPECT_EQ(classify(zero, true, one, 30, 1e-12), Classification::True);
  // Rounding-level noise is not a discrepancy...
  EXPECT_EQ(classify(pow10(-27, p), false, one, 30, 1e-12), Classification::True);
  // ...but the same size, known to be real, is.
  EXPECT_EQ(classify(pow10(-27, p), true, one, 30, 1e-12), Classification::Fraud);
  EXPECT_EQ(classify(pow10(-20, p), false, one, 30, 1e-12), Classification::Fraud);
  EXPECT_EQ(classify(pow10(-11, p), true, one, 30, 1e-12), Classification::False);
  EXPECT_EQ(classify(pow10(-6, p), true, one, 30, 1e-5), Classification::Fraud);
  // Scaled by the claimed value.
  EXPECT_EQ(classify(pow10(-22, p), false, BigReal(1e5, p), 30, 1e-12), Classification::True);
}

TEST(Entries, CatalogSortedAndLookup) {
  const auto& cat = entry_catalog();
  ASSERT_EQ(cat.size(), 15u);
  EXPECT_TRUE(std::is_sorted(cat.begin(), cat.end(),
                             [](const auto& a, const auto& b) { return a.id < b.id; }));
  EXPECT_EQ(entry_info("entry5").id, "entry5");
  EXPECT_THROW(entry_info("entry6"), UnknownEntry);
  EXPECT_THROW(run_entry("nope", {}, PrecisionContext::with_digits(30)), UnknownEntry);
}

TEST(Entries, ParameterErrors) {
  auto ctx = entry_context("entry5");
  EXPECT_THROW(run_entry("entry5", {{"k", "ten"}}, ctx), ParamError);
  EXPECT_THROW(run_entry("entry5", {{"colour", "blue"}}, ctx), ParamError);
  try {
    run_entry("entry5", {{"k", "ten"}}, ctx);
  } catch (const Error& e) {
    EXPECT_EQ(e.exit_code(), 2);
  }
}

TEST(Entries, QuickVerdicts) {
  const std::pair<const char*, Classification> cases[] = {
      {"entry5", Classification::Fraud},       {"entry3-m2", Classification::Fraud},
      {"entry3-solve-c", Classification::True}, {"entry2-zeta4", Classification::True},
      {"entry2-zeta6", Classification::False},  {"entry4", Classification::True},
      {"sum12", Classification::Fraud},         {"entry1", Classification::Fraud}};
  for (auto [id, want] : cases) {
    VerdictReport r = run_entry(id, {}, entry_context(id));
    EXPECT_EQ(r.classification, want) << id;
    EXPECT_EQ(r.entry_id, id);
    EXPECT_FALSE(r.computed_value.empty());
  }
  VerdictReport e5 = run_entry("entry5", {}, entry_context("entry5"));
  EXPECT_EQ(e5.abs_error.substr(0, 7), "1.11111");
  EXPECT_NE(e5.abs_error.find("e-105"), std::string::npos);
}

TEST(Entries, VerdictsStableUnderMoreDigits) {
  for (const auto& info : entry_catalog()) {
    if (info.id == "borwein-integral") continue;  // capped; covered by its own tests
    Params params;
    if (info.id.rfind("entry2", 0) == 0) params["terms"] = "300";
    VerdictReport lo = run_entry(info.id, params, entry_context(info.id));
    VerdictReport hi = run_entry(info.id, params, entry_context(info.id, info.default_digits + 50));
    EXPECT_EQ(lo.classification, hi.classification) << info.id;
  }
}

TEST(RunAll, EmptyConfigUsesManifest) {
  const std::string manifest = manifest_with(
      R"({"entry_id": "entry5", "expected": "FRAUD"},
         {"entry_id": "entry3-m2", "expected": "FRAUD"},
         {"entry_id": "entry4", "expected": "TRUE", "params": {"n": "12"}})");
  RunAllResult r = run_all_from_json("", manifest);
  EXPECT_EQ(r.exit_code, 0);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[0].entry_id, "entry3-m2");
  EXPECT_EQ(r.rows[2].entry_id, "entry5");
  EXPECT_EQ(r.reports.size(), 3u);
  EXPECT_EQ(run_all_from_json("{}", manifest).rows.size(), 3u);
  const std::string table = summary_table(r);
  EXPECT_NE(table.find("entry4"), std::string::npos);
  EXPECT_EQ(table.find("NO"), std::string::npos);
}

TEST(RunAll, ExitCodes) {
  const std::string mismatch = manifest_with(R"({"entry_id": "entry5", "expected": "TRUE"})");
  EXPECT_EQ(run_all_from_json("", mismatch).exit_code, 1);
  const std::string bad_param =
      manifest_with(R"({"entry_id": "entry5", "expected": "FRAUD", "params": {"k": "x"}})");
  RunAllResult r = run_all_from_json("", bad_param);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.rows[0].actual, "ERROR");
  EXPECT_EQ(r.rows[0].error_code, 2);
  // Overrides from the config win over the manifest.
  const std::string ok = manifest_with(R"({"entry_id": "entry5", "expected": "FRAUD"})");
  EXPECT_EQ(run_all_from_json(R"({"entries": {"entry5": {"params": {"k": "x"}}}})", ok).exit_code, 2);
  EXPECT_EQ(run_all_from_json(R"({"digits": 80})", ok).reports.at(0).precision_digits, 80);
  EXPECT_THROW(run_all_from_json("[", ok), ConfigError);
  EXPECT_THROW(run_all_from_json("", "/nonexistent/manifest.json"), ConfigError);
}

TEST(RunAll, ShippedManifestAllMatch) {
  RunAllResult r = run_all_from_json("", ZOO_MANIFEST_PATH);
  EXPECT_EQ(r.exit_code, 0) << summary_table(r);
  EXPECT_EQ(r.rows.size(), 15u);
  for (const auto& row : r.rows) EXPECT_TRUE(row.matched) << row.entry_id << " " << row.error;
  EXPECT_EQ(reports_from_json(to_json(r.reports)), r.reports);
}
