#include <gtest/gtest.h>

#include <sstream>

#include "loghankel/report_io.hpp"

using namespace loghankel;

namespace {

BoundReport sample_report() {
  BoundReport r;
  r.tag = GeometricClass::F4;
  r.theoretical_bound = 0.18390899048394105;
  r.observed_max = 0.1839089904839;
  r.argmax = SchurParams{0.38142302703000225, cplx(-0.0871126517, 1.2345678901234e-7), cplx(1.0, 0.0)};
  r.extremal_value = 0.183908990483941;
  r.consistency_residual = 3.3306690738754696e-16;
  r.envelope_violation = -1.234567890123456e-5;
  r.eta = 0.38142302703000225;
  r.status = Status::Pass;
  r.wall_time_s = 1.23456789;
  return r;
}

void expect_sig12(double got, double want) {
  if (std::isnan(want)) {
    EXPECT_TRUE(std::isnan(got));
    return;
  }
  EXPECT_NEAR(got, want, 1e-11 * std::abs(want)) << got << " vs " << want;
}

}  // namespace

TEST(RoundSig12, KeepsTwelveDigits) {
  EXPECT_EQ(detail::round_sig12(0.18390899048394105), 0.183908990484);
  EXPECT_EQ(detail::round_sig12(-1.234567890123456e-5), -1.23456789012e-5);
  EXPECT_TRUE(std::isnan(detail::round_sig12(kNaN)));
}

TEST(Json, KeysAndShapes) {
  const auto j = to_json(sample_report());
  for (const char* key : {"class", "theoretical_bound", "observed_max", "argmax", "extremal_value",
                          "consistency_residual", "envelope_violation", "eta", "status", "wall_time_s"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["class"], "f4");
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_TRUE(j["argmax"]["zeta2"].is_array());
  EXPECT_EQ(j["argmax"]["zeta2"].size(), 2u);
  EXPECT_FALSE(j.contains("erratum"));
  EXPECT_FALSE(j.contains("error"));
}

TEST(Json, RoundTripTwelveDigits) {
  const BoundReport r = sample_report();
  const auto text = reports_to_json(SearchConfig{}, {r}).dump();
  const auto back = reports_from_json(nlohmann::json::parse(text)).at(0);
  EXPECT_EQ(back.tag, r.tag);
  EXPECT_EQ(back.status, r.status);
  expect_sig12(back.theoretical_bound, r.theoretical_bound);
  expect_sig12(back.observed_max, r.observed_max);
  expect_sig12(back.argmax->zeta1(), r.argmax->zeta1());
  expect_sig12(back.argmax->zeta2().real(), r.argmax->zeta2().real());
  expect_sig12(back.argmax->zeta2().imag(), r.argmax->zeta2().imag());
  expect_sig12(back.argmax->zeta3().real(), r.argmax->zeta3().real());
  expect_sig12(back.extremal_value, r.extremal_value);
  expect_sig12(back.consistency_residual, r.consistency_residual);
  expect_sig12(back.envelope_violation, r.envelope_violation);
  expect_sig12(back.eta, r.eta);
  expect_sig12(back.wall_time_s, r.wall_time_s);
  // A second trip is exact.
  EXPECT_EQ(to_json(back), to_json(report_from_json(to_json(back))));
}

TEST(Json, MissingValuesBecomeNull) {
  BoundReport failed;
  failed.tag = GeometricClass::F1;
  failed.error = "series order must be at least 4";
  const auto j = to_json(failed);
  EXPECT_TRUE(j["observed_max"].is_null());
  EXPECT_TRUE(j["argmax"].is_null());
  EXPECT_EQ(j["status"], "INPUT_ERROR");
  EXPECT_EQ(j["error"], failed.error);
  const auto back = report_from_json(j);
  EXPECT_TRUE(std::isnan(back.observed_max));
  EXPECT_FALSE(back.argmax.has_value());
  EXPECT_EQ(back.error, failed.error);
}

TEST(Json, ErratumRoundTrip) {
  BoundReport r = sample_report();
  r.tag = GeometricClass::SS;
  r.erratum = SsErratum{11.0 / 48.0, 1.0 / 48.0, 10.0 / 48.0, 0.25};
  const auto back = report_from_json(to_json(r));
  ASSERT_TRUE(back.erratum.has_value());
  expect_sig12(back.erratum->discrepancy, 10.0 / 48.0);
  expect_sig12(back.erratum->printed_variant_max, 0.25);
}

TEST(Json, DocumentStatusAndConfig) {
  BoundReport bad = sample_report();
  bad.status = Status::SharpnessGap;
  const auto doc = reports_to_json(SearchConfig{}, {sample_report(), bad});
  EXPECT_EQ(doc["status"], "FAIL");
  EXPECT_EQ(doc["config"]["zeta1_steps"], 101);
  EXPECT_EQ(doc["config"]["seed"], 20240601u);
  EXPECT_EQ(reports_to_json(SearchConfig{}, {sample_report()})["status"], "PASS");
  EXPECT_THROW(report_from_json(nlohmann::json{{"class", "f9"}}), InputError);
}

TEST(Csv, HeaderAndRow) {
  const auto csv = reports_to_csv(SearchConfig{}, {sample_report()});
  std::istringstream in(csv);
  std::string config, header, row;
  std::getline(in, config);
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(config.rfind("# grid=101x51x72x72", 0), 0u);
  EXPECT_EQ(header, kCsvHeader);
  EXPECT_EQ(row.rfind("f4,0.183908990484,0.183908990484,0.38142302703,-0.0871126517,", 0), 0u) << row;
  EXPECT_NE(row.find(",PASS,"), std::string::npos);
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), std::count(header.begin(), header.end(), ','));
}

TEST(Csv, MissingValuesAreEmpty) {
  BoundReport failed;
  failed.tag = GeometricClass::F2;
  const auto csv = reports_to_csv(SearchConfig{}, {failed});
  EXPECT_NE(csv.find("\nf2,,,,,,,,,,,,INPUT_ERROR,0\n"), std::string::npos) << csv;
}

TEST(Text, SummaryLine) {
  const auto text = reports_to_text(SearchConfig{}, {sample_report()});
  EXPECT_NE(text.find("f4: bound 0.183908990484 observed 0.183908990484  PASS"), std::string::npos) << text;
  EXPECT_NE(text.find("eta 0.381423027030"), std::string::npos);
  EXPECT_EQ(text.rfind("# grid=", 0), 0u);
}
