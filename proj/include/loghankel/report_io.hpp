#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "loghankel/verifier.hpp"

// Report serialization. Numbers carry 12 significant digits; values that
// were never computed (e.g. after an input error) become JSON null and
// empty CSV cells.

namespace loghankel {

namespace detail {

inline double round_sig12(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(fmt::format("{:.12g}", x));
}

inline nlohmann::json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig12(x);
}

inline double number_from(const nlohmann::json& j) {
  return j.is_null() ? kNaN : j.get<double>();
}

inline nlohmann::json complex_pair(cplx z) { return {number(z.real()), number(z.imag())}; }

inline cplx complex_from(const nlohmann::json& j) {
  return {number_from(j.at(0)), number_from(j.at(1))};
}

inline std::string csv_cell(double x) { return std::isfinite(x) ? fmt::format("{:.12g}", x) : ""; }

}  // namespace detail

inline nlohmann::json to_json(const SearchConfig& cfg) {
  return {
      {"zeta1_steps", cfg.zeta1_steps},
      {"modulus_steps", cfg.modulus_steps},
      {"arg2_steps", cfg.arg2_steps},
      {"arg3_steps", cfg.arg3_steps},
      {"refine_iterations", cfg.refine_iterations},
      {"seed", cfg.seed},
      {"order", cfg.order},
      {"sharpness_tol", cfg.sharpness_tol},
      {"bound_slack", kBoundSlack},
      {"consistency_samples", cfg.consistency_samples},
      {"envelope_samples", cfg.envelope_samples},
      {"interior_zeta3", cfg.interior_zeta3},
  };
}

inline nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["class"] = std::string(to_string(r.tag));
  j["theoretical_bound"] = detail::number(r.theoretical_bound);
  j["observed_max"] = detail::number(r.observed_max);
  if (r.argmax) {
    j["argmax"] = {{"zeta1", detail::number(r.argmax->zeta1())},
                   {"zeta2", detail::complex_pair(r.argmax->zeta2())},
                   {"zeta3", detail::complex_pair(r.argmax->zeta3())}};
  } else {
    j["argmax"] = nullptr;
  }
  j["extremal_value"] = detail::number(r.extremal_value);
  j["consistency_residual"] = detail::number(r.consistency_residual);
  j["envelope_violation"] = detail::number(r.envelope_violation);
  j["eta"] = detail::number(r.eta);
  j["status"] = std::string(to_string(r.status));
  j["wall_time_s"] = detail::number(r.wall_time_s);
  if (r.erratum) {
    j["erratum"] = {{"printed_at_zeta1_one", detail::number(r.erratum->printed_at_one)},
                    {"pipeline_at_zeta1_one", detail::number(r.erratum->pipeline_at_one)},
                    {"discrepancy", detail::number(r.erratum->discrepancy)},
                    {"printed_variant_max", detail::number(r.erratum->printed_variant_max)}};
  }
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

inline BoundReport report_from_json(const nlohmann::json& j) {
  BoundReport r;
  r.tag = parse_class(j.at("class").get<std::string>());
  r.theoretical_bound = detail::number_from(j.at("theoretical_bound"));
  r.observed_max = detail::number_from(j.at("observed_max"));
  if (const auto& a = j.at("argmax"); !a.is_null()) {
    r.argmax = SchurParams{detail::number_from(a.at("zeta1")), detail::complex_from(a.at("zeta2")),
                           detail::complex_from(a.at("zeta3"))};
  }
  r.extremal_value = detail::number_from(j.at("extremal_value"));
  r.consistency_residual = detail::number_from(j.at("consistency_residual"));
  r.envelope_violation = detail::number_from(j.at("envelope_violation"));
  r.eta = detail::number_from(j.at("eta"));
  r.status = parse_status(j.at("status").get<std::string>());
  r.wall_time_s = detail::number_from(j.at("wall_time_s"));
  if (j.contains("erratum")) {
    const auto& e = j.at("erratum");
    r.erratum = SsErratum{detail::number_from(e.at("printed_at_zeta1_one")),
                          detail::number_from(e.at("pipeline_at_zeta1_one")),
                          detail::number_from(e.at("discrepancy")),
                          detail::number_from(e.at("printed_variant_max"))};
  }
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  return r;
}

/// {"config": ..., "status": "PASS" | "FAIL", "reports": [...]}
inline nlohmann::json reports_to_json(const SearchConfig& cfg, const std::vector<BoundReport>& reports) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  return {{"config", to_json(cfg)}, {"status", all_pass(reports) ? "PASS" : "FAIL"}, {"reports", list}};
}

inline std::vector<BoundReport> reports_from_json(const nlohmann::json& doc) {
  std::vector<BoundReport> out;
  for (const auto& j : doc.at("reports")) out.push_back(report_from_json(j));
  return out;
}

inline std::string config_summary(const SearchConfig& cfg) {
  return fmt::format(
      "grid={}x{}x{}x{} refine={} order={} sharpness_tol={:g} bound_slack={:g} seed={} "
      "consistency_samples={} envelope_samples={}{}",
      cfg.zeta1_steps, cfg.modulus_steps, cfg.arg2_steps, cfg.arg3_steps, cfg.refine_iterations,
      cfg.order, cfg.sharpness_tol, kBoundSlack, cfg.seed, cfg.consistency_samples,
      cfg.envelope_samples, cfg.interior_zeta3 ? " interior_zeta3=on" : "");
}

inline constexpr const char* kCsvHeader =
    "class,theoretical_bound,observed_max,argmax_zeta1,argmax_zeta2_re,argmax_zeta2_im,"
    "argmax_zeta3_re,argmax_zeta3_im,extremal_value,consistency_residual,envelope_violation,"
    "eta,status,wall_time_s";

inline std::string reports_to_csv(const SearchConfig& cfg, const std::vector<BoundReport>& reports) {
  using detail::csv_cell;
  std::string out = "# " + config_summary(cfg) + "\n" + kCsvHeader + "\n";
  for (const auto& r : reports) {
    const double nan = kNaN;
    const double z1 = r.argmax ? r.argmax->zeta1() : nan;
    const cplx z2 = r.argmax ? r.argmax->zeta2() : cplx(nan, nan);
    const cplx z3 = r.argmax ? r.argmax->zeta3() : cplx(nan, nan);
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", to_string(r.tag),
                       csv_cell(r.theoretical_bound), csv_cell(r.observed_max), csv_cell(z1),
                       csv_cell(z2.real()), csv_cell(z2.imag()), csv_cell(z3.real()),
                       csv_cell(z3.imag()), csv_cell(r.extremal_value),
                       csv_cell(r.consistency_residual), csv_cell(r.envelope_violation),
                       csv_cell(r.eta), to_string(r.status), csv_cell(r.wall_time_s));
  }
  return out;
}

inline std::string report_to_text(const BoundReport& r) {
  if (r.status == Status::InputError) {
    return fmt::format("{}: INPUT_ERROR {}\n", to_string(r.tag), r.error);
  }
  std::string out = fmt::format("{}: bound {:.12f} observed {:.12f}  {}\n", to_string(r.tag),
                                r.theoretical_bound, r.observed_max, to_string(r.status));
  if (r.argmax) {
    const auto& a = *r.argmax;
    out += fmt::format("    argmax zeta1={:.9f} zeta2=({:.9f},{:.9f}) zeta3=({:.9f},{:.9f})\n",
                       a.zeta1(), a.zeta2().real(), a.zeta2().imag(), a.zeta3().real(),
                       a.zeta3().imag());
  }
  if (std::isfinite(r.eta)) out += fmt::format("    eta {:.12f}\n", r.eta);
  out += fmt::format("    extremal {:.12f}  consistency residual {:.3g}  envelope violation {:.3g}  "
                     "time {:.2f}s\n",
                     r.extremal_value, r.consistency_residual, r.envelope_violation, r.wall_time_s);
  if (r.erratum) {
    out += fmt::format(
        "    erratum (flagged, not a failure): sign-flipped a4 gives |H| {:.12f} at zeta1=1, "
        "defining relation gives {:.12f} (difference {:.12f}); printed-variant search max {:.12f}\n",
        r.erratum->printed_at_one, r.erratum->pipeline_at_one, r.erratum->discrepancy,
        r.erratum->printed_variant_max);
  }
  return out;
}

inline std::string reports_to_text(const SearchConfig& cfg, const std::vector<BoundReport>& reports) {
  std::string out = "# " + config_summary(cfg) + "\n";
  for (const auto& r : reports) out += report_to_text(r);
  return out;
}

}  // namespace loghankel
