#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "loghankel/bounds.hpp"
#include "loghankel/caratheodory.hpp"
#include "loghankel/classes.hpp"
#include "loghankel/function_classes.hpp"
#include "loghankel/log_functionals.hpp"

namespace loghankel {

inline constexpr double kBoundSlack = 1e-9;
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SearchConfig {
  int zeta1_steps = 101;    // nodes on [0, 1], endpoints included
  int modulus_steps = 51;   // nodes for |zeta2| on [0, 1]
  int arg2_steps = 72;      // nodes for arg zeta2 on [0, 2 pi)
  int arg3_steps = 72;      // nodes for arg zeta3 on [0, 2 pi)
  int refine_iterations = 200;
  std::uint64_t seed = 20240601;
  int order = 8;
  double sharpness_tol = 1e-3;
  int consistency_samples = 200;
  int envelope_samples = 500;
  int threads = 0;  // 0 = hardware concurrency
  // Debug: also sample |zeta3| < 1 to check that pinning |zeta3| = 1 loses nothing.
  bool interior_zeta3 = false;
  int zeta3_modulus_steps = 16;

  void validate() const {
    if (zeta1_steps < 16 || modulus_steps < 16 || arg2_steps < 16 || arg3_steps < 16) {
      throw InputError("every grid size must be at least 16");
    }
    if (interior_zeta3 && zeta3_modulus_steps < 2) {
      throw InputError("interior zeta3 sampling needs at least 2 modulus nodes");
    }
    if (refine_iterations < 0) throw InputError("refine_iterations must be non-negative");
    if (order < 4) throw InputError("series order must be at least 4");
    if (!(sharpness_tol > 0.0)) throw InputError("sharpness tolerance must be positive");
    if (consistency_samples < 1 || envelope_samples < 1) {
      throw InputError("sample counts must be positive");
    }
    if (threads < 0) throw InputError("thread count must be non-negative");
  }
};

enum class Status { Pass, BoundViolated, SharpnessGap, InputError };

inline constexpr std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::BoundViolated: return "BOUND_VIOLATED";
    case Status::SharpnessGap: return "SHARPNESS_GAP";
    case Status::InputError: return "INPUT_ERROR";
  }
  return "?";
}

inline Status parse_status(std::string_view s) {
  for (const auto st : {Status::Pass, Status::BoundViolated, Status::SharpnessGap, Status::InputError}) {
    if (to_string(st) == s) return st;
  }
  throw InputError("unknown status '" + std::string(s) + "'");
}

/// Disagreement between the sign-flipped SS a4 and the defining relation.
/// Recorded alongside the SS report; it never changes the status by itself.
struct SsErratum {
  double printed_at_one;       // |Printed zeta form| at zeta1 = 1 (11/48)
  double pipeline_at_one;      // |pipeline value| at zeta1 = 1 (1/48)
  double discrepancy;          // difference of the two moduli (10/48)
  double printed_variant_max;  // global search maximum of the printed variant
};

struct BoundReport {
  GeometricClass tag = GeometricClass::SS;
  double theoretical_bound = kNaN;
  double observed_max = kNaN;
  std::optional<SchurParams> argmax;
  double extremal_value = kNaN;
  double consistency_residual = kNaN;
  double envelope_violation = kNaN;
  double eta = kNaN;
  Status status = Status::InputError;
  double wall_time_s = 0.0;
  std::optional<SsErratum> erratum;
  std::string error;  // set when status is InputError
};

struct SearchOutcome {
  double value = -1.0;
  SchurParams argmax{0.0, 0.0, 0.0};
};

namespace detail {

// Coordinates of a search point: (zeta1, |zeta2|, arg zeta2, arg zeta3, |zeta3|).
using Coords = std::array<double, 5>;

inline SchurParams to_params(const Coords& x) {
  return {x[0], std::polar(x[1], x[2]), std::polar(x[4], x[3])};
}

inline double wrap_angle(double t) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  t = std::fmod(t, two_pi);
  return t < 0.0 ? t + two_pi : t;
}

inline double grid_node(int i, int n) { return static_cast<double>(i) / (n - 1); }
inline double angle_node(int i, int n) {
  return 2.0 * std::numbers::pi * (static_cast<double>(i) / n);
}

struct GridBest {
  double value = -1.0;
  Coords at{};
};

// Exhaustive sweep over the zeta1 nodes [begin, end). Nodes are visited in
// lexicographic order and only a strictly larger value replaces the
// incumbent, so ties resolve to the smallest index tuple.
template <class Objective>
GridBest sweep_slab(const SearchConfig& cfg, std::span<const double> zeta1_nodes, std::size_t begin,
                    std::size_t end, const Objective& objective) {
  std::vector<cplx> dir2(cfg.arg2_steps);
  std::vector<cplx> dir3(cfg.arg3_steps);
  for (int k = 0; k < cfg.arg2_steps; ++k) dir2[k] = std::polar(1.0, angle_node(k, cfg.arg2_steps));
  for (int k = 0; k < cfg.arg3_steps; ++k) dir3[k] = std::polar(1.0, angle_node(k, cfg.arg3_steps));
  const int n3m = cfg.interior_zeta3 ? cfg.zeta3_modulus_steps : 1;

  GridBest best;
  for (std::size_t i1 = begin; i1 < end; ++i1) {
    const double z1 = zeta1_nodes[i1];
    for (int i2 = 0; i2 < cfg.modulus_steps; ++i2) {
      const double m2 = grid_node(i2, cfg.modulus_steps);
      for (int j2 = 0; j2 < cfg.arg2_steps; ++j2) {
        const cplx z2 = m2 * dir2[j2];
        for (int j3 = 0; j3 < cfg.arg3_steps; ++j3) {
          for (int i3 = 0; i3 < n3m; ++i3) {
            const double m3 = cfg.interior_zeta3 ? grid_node(n3m - 1 - i3, n3m) : 1.0;
            const double v = objective(z1, z2, m3 * dir3[j3]);
            if (v > best.value) {
              best.value = v;
              best.at = {z1, m2, angle_node(j2, cfg.arg2_steps), angle_node(j3, cfg.arg3_steps), m3};
            }
          }
        }
      }
    }
  }
  return best;
}

// Splits the zeta1 nodes into contiguous slabs, one per worker, and reduces
// the slab maxima in slab order.
template <class Objective>
GridBest parallel_sweep(const SearchConfig& cfg, std::span<const double> zeta1_nodes,
                        const Objective& objective) {
  const std::size_t n = zeta1_nodes.size();
  std::size_t workers = cfg.threads > 0 ? static_cast<std::size_t>(cfg.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = std::clamp<std::size_t>(workers, 1, n);

  std::vector<GridBest> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      partial[w] = sweep_slab(cfg, zeta1_nodes, begin, end, objective);
    });
  }
  for (auto& t : pool) t.join();

  GridBest best;
  for (const auto& p : partial) {
    if (p.value > best.value) best = p;
  }
  return best;
}

// Cyclic coordinate search: try +/- step along each coordinate, accept the
// first strict improvement, halve every step after a cycle without one.
template <class Objective>
GridBest polish(const SearchConfig& cfg, GridBest start, const Objective& objective) {
  Coords step = {1.0 / (cfg.zeta1_steps - 1), 1.0 / (cfg.modulus_steps - 1),
                 2.0 * std::numbers::pi / cfg.arg2_steps, 2.0 * std::numbers::pi / cfg.arg3_steps,
                 cfg.interior_zeta3 ? 1.0 / (cfg.zeta3_modulus_steps - 1) : 0.0};
  const auto project = [](Coords x) {
    x[0] = std::clamp(x[0], 0.0, 1.0);
    x[1] = std::clamp(x[1], 0.0, 1.0);
    x[2] = wrap_angle(x[2]);
    x[3] = wrap_angle(x[3]);
    x[4] = std::clamp(x[4], 0.0, 1.0);
    return x;
  };
  const auto eval = [&](const Coords& x) {
    return objective(x[0], std::polar(x[1], x[2]), std::polar(x[4], x[3]));
  };

  GridBest best = start;
  const std::size_t dims = cfg.interior_zeta3 ? 5 : 4;
  for (int it = 0; it < cfg.refine_iterations; ++it) {
    bool improved = false;
    for (std::size_t d = 0; d < dims && !improved; ++d) {
      for (const double sign : {1.0, -1.0}) {
        Coords trial = best.at;
        trial[d] += sign * step[d];
        trial = project(trial);
        const double v = eval(trial);
        if (v > best.value) {
          best = {v, trial};
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      for (auto& s : step) s *= 0.5;
    }
  }
  return best;
}

inline std::vector<double> zeta1_grid(const SearchConfig& cfg) {
  std::vector<double> nodes(cfg.zeta1_steps);
  for (int i = 0; i < cfg.zeta1_steps; ++i) nodes[i] = grid_node(i, cfg.zeta1_steps);
  return nodes;
}

inline auto modulus_objective(GeometricClass tag, SsVariant variant) {
  return [tag, variant](double z1, cplx z2, cplx z3) {
    const double s = 1.0 - z1 * z1;
    const CaratheodoryCoeffs c{
        2.0 * z1, 2.0 * z1 * z1 + 2.0 * s * z2,
        2.0 * z1 * z1 * z1 + 4.0 * s * z1 * z2 - 2.0 * s * z1 * z2 * z2 +
            2.0 * s * (1.0 - std::norm(z2)) * z3};
    return std::abs(h21_closed(tag, c, variant));
  };
}

inline Status classify(double bound, double observed, double sharpness_tol) {
  if (observed > bound + kBoundSlack) return Status::BoundViolated;
  if (bound - observed > sharpness_tol) return Status::SharpnessGap;
  return Status::Pass;
}

}  // namespace detail

/// Global maximum of |H21| over the Schur domain: full grid sweep with
/// |zeta3| = 1 (the functional is affine in zeta3), then coordinate polish.
inline SearchOutcome search_outcome(GeometricClass tag, const SearchConfig& cfg,
                                    SsVariant variant = SsVariant::Pipeline) {
  cfg.validate();
  const auto objective = detail::modulus_objective(tag, variant);
  const auto nodes = detail::zeta1_grid(cfg);
  const auto grid = detail::parallel_sweep(cfg, nodes, objective);
  const auto best = detail::polish(cfg, grid, objective);
  return {best.value, detail::to_params(best.at)};
}

/// Grid maximum of |H21| restricted to a single zeta1 (no polish).
inline SearchOutcome slice_max(GeometricClass tag, double zeta1, const SearchConfig& cfg,
                               SsVariant variant = SsVariant::Pipeline) {
  cfg.validate();
  if (!(zeta1 >= 0.0 && zeta1 <= 1.0)) throw InputError("zeta1 must lie in [0, 1]");
  const std::array<double, 1> node{zeta1};
  const auto grid = detail::sweep_slab(cfg, node, 0, 1, detail::modulus_objective(tag, variant));
  return {grid.value, detail::to_params(grid.at)};
}

/// Theoretical bound, search maximum, argmax and status; the remaining
/// report fields are left unset.
inline BoundReport search_max(GeometricClass tag, const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  BoundReport report;
  report.tag = tag;
  report.theoretical_bound = theoretical_bound(tag);
  if (bound_spec(tag).kind != BoundKind::Constant) report.eta = eta_root(tag);
  const SearchOutcome found = search_outcome(tag, cfg);
  report.observed_max = found.value;
  report.argmax = found.argmax;
  report.status = detail::classify(report.theoretical_bound, report.observed_max, cfg.sharpness_tol);
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// |H21| at the class's extremal witness, through the series route.
inline double verify_extremal(GeometricClass tag, std::size_t order = 8) {
  return std::abs(h21_series(tag, extremal_witness(tag), order));
}

/// Largest disagreement over n seeded samples between: the series route and
/// the a-coefficient quartic, the series route and the closed zeta form
/// (pipeline variant for SS), and the closed a2..a4 recipes and the series
/// coefficients.
inline double consistency_suite(GeometricClass tag, int n, std::uint64_t seed,
                                std::size_t order = 8) {
  if (n < 1) throw InputError("consistency suite needs at least one sample");
  if (order < 4) throw InputError("series order must be at least 4");
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const SchurParams params = sample_schur(rng);
    const TruncatedSeries p = expand_p(rational_from_schur(params), order);
    const ClassFunction f = build_from_p(tag, p, order);
    const cplx series_value = h21_log(log_coeffs(f));
    const cplx quartic = h21_log_from_a(f.a(2), f.a(3), f.a(4));
    const cplx zeta_form = zeta_form_value(tag, params, SsVariant::Pipeline);
    const ClosedFormCoeffs a = closed_form_a234(tag, schur_to_coeffs(params));
    worst = std::max({worst, std::abs(series_value - quartic), std::abs(series_value - zeta_form),
                      std::abs(a.a2 - f.a(2)), std::abs(a.a3 - f.a(3)), std::abs(a.a4 - f.a(4))});
  }
  return worst;
}

/// Largest value of |printed zeta form| - envelope over seeded samples with
/// zeta1 strictly inside (0, 1). Non-positive means the envelope holds.
inline double envelope_check(GeometricClass tag, int samples, std::uint64_t seed) {
  if (samples < 1) throw InputError("envelope check needs at least one sample");
  Rng rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    double z1 = unit_real(rng);
    while (z1 == 0.0) z1 = unit_real(rng);
    const SchurParams params{z1, uniform_disk(rng), uniform_disk(rng)};
    const double lhs = std::abs(zeta_form_value(tag, params, SsVariant::Printed));
    worst = std::max(worst, lhs - envelope_value(tag, z1, params.zeta2()));
  }
  return worst;
}

inline SsErratum ss_erratum(const SearchConfig& cfg) {
  const SchurParams corner{1.0, 0.0, 0.0};
  const double printed = std::abs(zeta_form_value(GeometricClass::SS, corner, SsVariant::Printed));
  const double pipeline = std::abs(h21_series(GeometricClass::SS, corner, cfg.order));
  const double printed_max = search_outcome(GeometricClass::SS, cfg, SsVariant::Printed).value;
  return {printed, pipeline, std::abs(printed - pipeline), printed_max};
}

namespace detail {

inline std::uint64_t class_seed(std::uint64_t seed, GeometricClass tag, std::uint64_t salt) {
  return seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(tag) + 1) + salt;
}

}  // namespace detail

/// Everything the `verify` command reports for one class. Throws on an
/// invalid configuration.
inline BoundReport verify_class(GeometricClass tag, const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  BoundReport report = search_max(tag, cfg);
  const auto order = static_cast<std::size_t>(cfg.order);
  report.extremal_value = verify_extremal(tag, order);
  report.consistency_residual = consistency_suite(tag, cfg.consistency_samples,
                                                  detail::class_seed(cfg.seed, tag, 1), order);
  report.envelope_violation =
      envelope_check(tag, cfg.envelope_samples, detail::class_seed(cfg.seed, tag, 2));
  if (tag == GeometricClass::SS) report.erratum = ss_erratum(cfg);

  if (report.status == Status::Pass &&
      (report.extremal_value > report.theoretical_bound + kBoundSlack ||
       report.envelope_violation > 1e-10)) {
    report.status = Status::BoundViolated;
  }
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// verify_class for all five classes. Errors become INPUT_ERROR reports.
inline std::vector<BoundReport> full_report(const SearchConfig& cfg) {
  std::vector<BoundReport> reports;
  for (const auto tag : kAllClasses) {
    try {
      reports.push_back(verify_class(tag, cfg));
    } catch (const Error& e) {
      BoundReport failed;
      failed.tag = tag;
      failed.status = Status::InputError;
      failed.error = e.what();
      reports.push_back(std::move(failed));
    }
  }
  return reports;
}

inline bool all_pass(const std::vector<BoundReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const BoundReport& r) { return r.status == Status::Pass; });
}

}  // namespace loghankel
