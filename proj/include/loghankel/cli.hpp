#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "loghankel/disk_max.hpp"
#include "loghankel/report_io.hpp"
#include "loghankel/verifier.hpp"

// Command-line front end. run_command() never lets an exception escape:
//   0  every check passed
//   1  a bound was violated, a sharpness gap was found, or a cross-check failed
//   2  bad command line or bad input

namespace loghankel::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

namespace detail {

inline cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw InputError("complex values are written RE,IM; got '" + text + "'");
  }
  const auto to_double = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw InputError("not a number: '" + part + "' in '" + text + "'");
    }
    if (used != part.size()) throw InputError("not a number: '" + part + "' in '" + text + "'");
    return v;
  };
  return {to_double(text.substr(0, comma)), to_double(text.substr(comma + 1))};
}

inline void add_search_options(CLI::App& cmd, SearchConfig& cfg) {
  cmd.add_option("--zeta1-steps", cfg.zeta1_steps, "grid nodes for zeta1 on [0,1]")->capture_default_str();
  cmd.add_option("--modulus-steps", cfg.modulus_steps, "grid nodes for |zeta2| on [0,1]")->capture_default_str();
  cmd.add_option("--arg2-steps", cfg.arg2_steps, "grid nodes for arg zeta2")->capture_default_str();
  cmd.add_option("--arg3-steps", cfg.arg3_steps, "grid nodes for arg zeta3")->capture_default_str();
  cmd.add_option("--refine", cfg.refine_iterations, "local polish iterations")->capture_default_str();
  cmd.add_option("--tol", cfg.sharpness_tol, "allowed gap between bound and search maximum")->capture_default_str();
  cmd.add_option("--order", cfg.order, "series truncation order")->capture_default_str();
  cmd.add_option("--seed", cfg.seed, "seed for the sampled cross-checks")->capture_default_str();
  cmd.add_option("--threads", cfg.threads, "worker threads (0 = all cores)")->capture_default_str();
  cmd.add_option("--consistency-samples", cfg.consistency_samples)->capture_default_str();
  cmd.add_option("--envelope-samples", cfg.envelope_samples)->capture_default_str();
  cmd.add_flag("--interior-zeta3", cfg.interior_zeta3, "also sample |zeta3| < 1 (debug)");
}

inline int exit_code(const std::vector<BoundReport>& reports) {
  if (std::any_of(reports.begin(), reports.end(),
                  [](const BoundReport& r) { return r.status == Status::InputError; })) {
    return kExitInput;
  }
  return all_pass(reports) ? kExitPass : kExitFail;
}

inline std::string render(const std::string& format, const SearchConfig& cfg,
                          const std::vector<BoundReport>& reports) {
  if (format == "json") return reports_to_json(cfg, reports).dump(2) + "\n";
  if (format == "csv") return reports_to_csv(cfg, reports);
  return reports_to_text(cfg, reports);
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path);
  if (!file) throw InputError("cannot open '" + path.string() + "' for writing");
  file << content;
  if (!file) throw InputError("failed writing '" + path.string() + "'");
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical certification of sharp bounds on the second Hankel determinant of "
               "logarithmic coefficients",
               "loghankel"};
  app.require_subcommand(1);

  SearchConfig cfg;
  std::string class_name;
  std::string format = "text";
  std::string out_path;
  const std::vector<std::string> class_names{"ss", "f1", "f2", "f3", "f4"};

  auto* verify = app.add_subcommand("verify", "search, extremal, consistency and envelope checks for one class");
  verify->add_option("--class", class_name)->required()->check(CLI::IsMember(class_names));
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  verify->add_option("--out", out_path, "write the report here instead of standard output");
  detail::add_search_options(*verify, cfg);

  auto* all = app.add_subcommand("all", "verify all five classes");
  all->add_option("--out", out_path, "directory receiving report.json and report.csv");
  all->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  detail::add_search_options(*all, cfg);

  double ya = 0.0, yb = 0.0, yc = 0.0;
  bool with_oracle = false;
  int radial = 720, angular = 720;
  auto* ymax = app.add_subcommand("ymax", "max of |A+Bz+Cz^2|+1-|z|^2 over the closed disk");
  ymax->add_option("--a", ya)->required();
  ymax->add_option("--b", yb)->required();
  ymax->add_option("--c", yc)->required();
  ymax->add_flag("--oracle", with_oracle, "compare with the grid oracle");
  ymax->add_option("--radial", radial)->capture_default_str();
  ymax->add_option("--angular", angular)->capture_default_str();

  double zeta1 = 0.0;
  std::string zeta2_text = "0,0";
  std::string zeta3_text = "0,0";
  auto* eval = app.add_subcommand("eval", "evaluate H21 at one Schur parameter triple");
  eval->add_option("--class", class_name)->required()->check(CLI::IsMember(class_names));
  eval->add_option("--zeta1", zeta1)->required();
  eval->add_option("--zeta2", zeta2_text, "RE,IM")->required();
  eval->add_option("--zeta3", zeta3_text, "RE,IM")->required();
  eval->add_option("--order", cfg.order)->capture_default_str();

  auto* extremal = app.add_subcommand("extremal", "H21 at the class's extremal function");
  extremal->add_option("--class", class_name)->required()->check(CLI::IsMember(class_names));
  extremal->add_option("--order", cfg.order)->capture_default_str();

  auto* eta = app.add_subcommand("eta", "critical point eta of the bound function");
  eta->add_option("--class", class_name)->required()->check(CLI::IsMember({"f1", "f3", "f4"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    if (verify->parsed()) {
      const GeometricClass tag = parse_class(class_name);
      const std::vector<BoundReport> reports{verify_class(tag, cfg)};
      const std::string rendered = detail::render(format, cfg, reports);
      if (out_path.empty()) {
        out << rendered;
      } else {
        detail::write_file(out_path, rendered);
        if (format != "text") out << reports_to_text(cfg, reports);
      }
      return detail::exit_code(reports);
    }

    if (all->parsed()) {
      cfg.validate();
      const std::vector<BoundReport> reports = full_report(cfg);
      if (!out_path.empty()) {
        const std::filesystem::path dir(out_path);
        std::filesystem::create_directories(dir);
        detail::write_file(dir / "report.json", reports_to_json(cfg, reports).dump(2) + "\n");
        detail::write_file(dir / "report.csv", reports_to_csv(cfg, reports));
      }
      out << detail::render(format, cfg, reports);
      return detail::exit_code(reports);
    }

    if (ymax->parsed()) {
      const YOutcome closed = y_closed(ya, yb, yc);
      out << fmt::format("Y({:g}, {:g}, {:g}) = {:.12f}  [{}]\n", ya, yb, yc, closed.value,
                         to_string(closed.branch));
      if (!with_oracle) return kExitPass;
      const YOutcome oracle = y_oracle(ya, yb, yc, radial, angular);
      const double diff = std::abs(closed.value - oracle.value);
      const bool ok = diff <= 1e-4;
      out << fmt::format("oracle    = {:.12f}  at z = ({:.9f},{:.9f})  |diff| {:.3g}  {}\n",
                         oracle.value, oracle.witness->real(), oracle.witness->imag(), diff,
                         ok ? "PASS" : "MISMATCH");
      return ok ? kExitPass : kExitFail;
    }

    if (eval->parsed()) {
      const GeometricClass tag = parse_class(class_name);
      const SchurParams params{zeta1, detail::parse_complex(zeta2_text),
                               detail::parse_complex(zeta3_text)};
      if (cfg.order < 4) throw InputError("series order must be at least 4");
      const cplx zeta_form = zeta_form_value(tag, params, SsVariant::Printed);
      const cplx series = h21_series(tag, params, static_cast<std::size_t>(cfg.order));
      const cplx quartic = h21_closed(tag, params);
      const auto show = [](cplx z) { return fmt::format("{:.12g}{:+.12g}i", z.real(), z.imag()); };
      out << fmt::format("{}: zeta-form {}  (|.| {:.12f})\n", class_name, show(zeta_form), std::abs(zeta_form));
      if (tag == GeometricClass::SS) {
        const cplx consistent = zeta_form_value(tag, params, SsVariant::Pipeline);
        out << fmt::format("    zeta-form (relation-consistent a4) {}\n", show(consistent));
      }
      out << fmt::format("    pipeline {}  (|.| {:.12f})\n", show(series), std::abs(series));
      out << fmt::format("    a-quartic {}\n", show(quartic));
      return kExitPass;
    }

    if (extremal->parsed()) {
      const GeometricClass tag = parse_class(class_name);
      if (cfg.order < 4) throw InputError("series order must be at least 4");
      const SchurParams w = extremal_witness(tag);
      const double value = verify_extremal(tag, static_cast<std::size_t>(cfg.order));
      const double bound = theoretical_bound(tag);
      const bool ok = value <= bound + kBoundSlack && bound - value <= 1e-4;
      out << fmt::format("{}: witness zeta1={:.9f} zeta2=({:.9f},{:.9f}) zeta3=({:.9f},{:.9f})\n",
                         class_name, w.zeta1(), w.zeta2().real(), w.zeta2().imag(),
                         w.zeta3().real(), w.zeta3().imag());
      out << fmt::format("    extremal {:.12f}  bound {:.12f}  {}\n", value, bound,
                         ok ? "PASS" : "SHARPNESS_GAP");
      return ok ? kExitPass : kExitFail;
    }

    if (eta->parsed()) {
      const GeometricClass tag = parse_class(class_name);
      out << fmt::format("{:.12f}\n", eta_root(tag));
      return kExitPass;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace loghankel::cli
