// SPDX-License-Identifier: Apache-2.0

#include "bem/harness/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "bem/dynamics/integrator.hpp"
#include "bem/errors.hpp"
#include "bem/harness/initial_data.hpp"

#ifndef BEM_BUILD_ID
#define BEM_BUILD_ID "unknown"
#endif

namespace bem
{

namespace
{

// Channels fitted for every source, in report order.
const std::vector<std::string> &fitted_columns()
{
  static const std::vector<std::string> cols{"L2_U", "L2_n1", "L2_n2", "L2_u", "L2_E",
                                             "L2_B", "L2_psi", "H1_U", "H1_n2"};
  return cols;
}

std::string fmt(double x)
{
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

double trapezoid(const std::vector<double> &t, const std::vector<double> &v)
{
  double sum = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i)
  {
    sum += 0.5 * (t[i] - t[i - 1]) * (v[i] + v[i - 1]);
  }
  return sum;
}

CheckResult at_most(std::string name, double value, double threshold, bool gating = true,
                    std::string detail = {})
{
  return {std::move(name), value, threshold, value <= threshold, gating, std::move(detail)};
}

// Largest increase between consecutive samples, relative to the first sample.
double max_relative_increase(const std::vector<double> &v)
{
  double worst = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i)
  {
    worst = std::max(worst, v[i] - v[i - 1]);
  }
  return v.empty() || v[0] == 0.0 ? 0.0 : worst / v[0];
}

void simulation_checks(const RunConfig &config, const SeriesTable &table, Summary &out)
{
  const auto src = kSourceSimulation;
  const auto t = table.times(src);
  if (t.empty())
  {
    return;
  }
  const auto e3w = table.column("E3_weighted", src);
  const auto e3 = table.column("E3", src);
  const auto d3 = table.column("D3", src);

  // The energy estimate differentiates the weighted combination; the plain sum of squares
  // is equivalent to it within a factor of two but is not monotone by itself, since its
  // linear rate of change contains the indefinite term 2 nu <u2, E>.
  out.checks.push_back(at_most("energy_monotone", max_relative_increase(e3w),
                               config.energy_tolerance, true,
                               "largest increase of E3_weighted between samples / E3_weighted(0)"));
  out.checks.push_back(at_most("energy_monotone_unweighted", max_relative_increase(e3),
                               config.energy_tolerance, false,
                               "largest increase of E3 between samples / E3(0)"));
  const double e3_sup = *std::max_element(e3.begin(), e3.end());
  out.checks.push_back(at_most("energy_sup_ratio", e3[0] > 0.0 ? e3_sup / e3[0] : 0.0,
                               config.dissipation_bound, false, "sup_t E3(t) / E3(0)"));
  out.checks.push_back(at_most("dissipation_integral", e3[0] > 0.0 ? trapezoid(t, d3) / e3[0] : 0.0,
                               config.dissipation_bound, true,
                               "trapezoid integral of D3 over [0, T] / E3(0)"));

  const auto divb = table.column("divB_res", src);
  out.checks.push_back(at_most("divB_residual", *std::max_element(divb.begin(), divb.end()),
                               config.divb_tolerance, true, "max over samples of ||div B|| / ||grad B||"));
  const auto gauss = table.column("gauss_res", src);
  double growth = 0.0;
  for (double g : gauss)
  {
    growth = std::max(growth, g - gauss[0]);
  }
  out.checks.push_back(at_most("gauss_residual_growth", growth, config.gauss_growth_tolerance, true,
                               "max over samples of gauss_res(t) - gauss_res(0)"));
}

// sigma(n2) < sigma(E) <= sigma(u) < sigma(U); the middle comparison is a tie within the
// exponent resolution.
CheckResult hierarchy_check(const Summary &s, const std::string &source, const std::string &name,
                            bool gating)
{
  CheckResult r{name, 0.0, 0.0, false, gating, {}};
  const auto &n2 = s.fit(source, "L2_n2");
  const auto &e = s.fit(source, "L2_E");
  const auto &u = s.fit(source, "L2_u");
  const auto &U = s.fit(source, "L2_U");
  if (!(n2.ok && e.ok && u.ok && U.ok))
  {
    r.detail = "missing fits";
    return r;
  }
  const double a = n2.fit.exponent;
  const double b = e.fit.exponent;
  const double c = u.fit.exponent;
  const double d = U.fit.exponent;
  r.pass = a < b && b <= c + kExponentResolution && c < d;
  // value: smallest margin of the three comparisons
  r.value = std::min({b - a, c + kExponentResolution - b, d - c});
  r.detail = "sigma(n2) = " + fmt(a) + ", sigma(E) = " + fmt(b) + ", sigma(u) = " + fmt(c) +
             ", sigma(U) = " + fmt(d);
  return r;
}

void linear_checks(const RunConfig &config, Summary &out)
{
  const auto src = kSourceLinear;
  const auto has = [&](const std::string &col) {
    for (const auto &f : out.fits)
    {
      if (f.source == src && f.column == col)
      {
        return f.ok;
      }
    }
    return false;
  };
  for (int k : config.k_values)
  {
    if (k > 1)
    {
      continue;
    }
    const std::string col = k == 0 ? "L2_U" : "H1_U";
    const double target = -(k + config.s) / 2.0;
    CheckResult r{"exponent_U_k" + std::to_string(k), 0.0, kQuadratureExponentTolerance, false,
                  true, "target " + fmt(target)};
    if (has(col))
    {
      const double sigma = out.fit(src, col).fit.exponent;
      r.value = std::abs(sigma - target);
      r.pass = r.value <= r.threshold;
      r.detail += ", measured " + fmt(sigma);
    }
    out.checks.push_back(r);
  }

  const bool isotropic_b = config.b_infinity == Vec3{0.0, 0.0, 0.0};
  out.checks.push_back(hierarchy_check(out, src, "channel_hierarchy", isotropic_b));

  CheckResult n2_bound{"exponent_n2_bound", 0.0, -1.75, false, true, {}};
  CheckResult n2_late{"exponent_n2_late", 0.0, 0.25, false, false, {}};
  if (has("L2_n2"))
  {
    const double sigma = out.fit(src, "L2_n2").fit.exponent;
    n2_bound.value = sigma;
    n2_bound.pass = sigma <= -1.75;
    n2_bound.detail = "measured " + fmt(sigma);
    const double target = -(1.75 + config.s);
    n2_late.value = std::abs(sigma - target);
    n2_late.pass = n2_late.value <= n2_late.threshold;
    n2_late.detail = "measured " + fmt(sigma) + " against " + fmt(target) +
                     "; the linear n2 channel decays exponentially, so this comparison is "
                     "reported only";
  }
  else
  {
    n2_bound.detail = n2_late.detail = "no resolved n2 samples in the window";
  }
  out.checks.push_back(n2_bound);
  out.checks.push_back(n2_late);
}

}  // namespace

const ChannelFit &Summary::fit(const std::string &source, const std::string &column) const
{
  for (const auto &f : fits)
  {
    if (f.source == source && f.column == column)
    {
      return f;
    }
  }
  throw ConfigError("no fit for " + source + "/" + column);
}

const CheckResult &Summary::check(const std::string &name) const
{
  for (const auto &c : checks)
  {
    if (c.name == name)
    {
      return c;
    }
  }
  throw ConfigError("no check named '" + name + "'");
}

std::string build_identifier()
{
  return BEM_BUILD_ID;
}

ChannelFit fit_column(const SeriesTable &table, const std::string &source,
                      const std::string &column, double t0, double t1, double saturation_time)
{
  ChannelFit out;
  out.source = source;
  out.column = column;
  const auto t = table.times(source);
  const auto v = table.column(column, source);
  std::vector<double> ts;
  std::vector<double> vs;
  for (std::size_t i = 0; i < t.size(); ++i)
  {
    if (std::isnan(v[i]) || (v[i] >= 0.0 && v[i] < std::numeric_limits<double>::min()))
    {
      continue;
    }
    ts.push_back(t[i]);
    vs.push_back(v[i]);
  }
  try
  {
    out.fit = fit_decay_exponent(ts, vs, t0, t1, saturation_time, column);
    out.ok = true;
  }
  catch (const Error &e)
  {
    out.error = e.what();
  }
  return out;
}

Summary summarize(const RunConfig &config, const SeriesTable &table)
{
  Summary s;
  for (const std::string source : {kSourceSimulation, kSourceLinear})
  {
    if (!table.has_source(source))
    {
      continue;
    }
    const double saturation = source == kSourceSimulation ? config.saturation_time() : 0.0;
    for (const auto &col : fitted_columns())
    {
      s.fits.push_back(fit_column(table, source, col, config.fit_t0, config.fit_t1, saturation));
    }
  }
  if (table.has_source(kSourceSimulation))
  {
    simulation_checks(config, table, s);
    const bool isotropic_b = config.b_infinity == Vec3{0.0, 0.0, 0.0};
    if (isotropic_b)
    {
      s.checks.push_back(hierarchy_check(s, kSourceSimulation, "channel_hierarchy_box", false));
    }
  }
  if (table.has_source(kSourceLinear))
  {
    linear_checks(config, s);
  }
  s.pass = !s.checks.empty();
  for (const auto &c : s.checks)
  {
    if (c.gating && !c.pass)
    {
      s.pass = false;
    }
  }
  return s;
}

nlohmann::json summary_json(const RunConfig &config, const Summary &summary)
{
  using nlohmann::json;
  json j;
  j["build_id"] = build_identifier();
  j["config"] = config.to_text();
  j["mode"] = to_string(config.mode);
  j["note"] =
    "Only ||U0||_{H^3} is prescribed; higher Sobolev norms of the data are finite because the "
    "data are band-limited.";
  json cols = json::array();
  for (const auto &info : functional_registry())
  {
    cols.push_back({{"name", info.name}, {"description", info.description}});
  }
  j["columns"] = cols;

  json fits = json::array();
  for (const auto &f : summary.fits)
  {
    json e{{"source", f.source}, {"column", f.column}, {"ok", f.ok}};
    if (f.ok)
    {
      e["exponent"] = f.fit.exponent;
      e["exponent_stderr"] = f.fit.exponent_stderr;
      e["log_prefactor"] = f.fit.log_prefactor;
      e["window"] = {f.fit.window_t0, f.fit.window_t1};
      e["samples"] = f.fit.samples;
      e["r_squared"] = f.fit.r_squared;
      e["saturation_time"] = f.fit.saturation_time;
      e["curvature"] = f.fit.curvature;
      e["curvature_flag"] = f.fit.curvature_flag;
      e["valid"] = f.fit.valid;
      if (!f.fit.note.empty())
      {
        e["note"] = f.fit.note;
      }
    }
    else
    {
      e["error"] = f.error;
    }
    fits.push_back(e);
  }
  j["fits"] = fits;

  json checks = json::array();
  for (const auto &c : summary.checks)
  {
    checks.push_back({{"name", c.name},
                      {"value", c.value},
                      {"threshold", c.threshold},
                      {"pass", c.pass},
                      {"gating", c.gating},
                      {"detail", c.detail}});
  }
  j["checks"] = checks;
  j["pass"] = summary.pass;
  return j;
}

Report run_experiment(const RunConfig &config)
{
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const ModelParams params = config.model();
  Report report{config, SeriesTable::with_registry(), {}, {}};

  if (config.mode == RunMode::linear_quadrature)
  {
    LinearDecayConfig lc;
    lc.k_values = config.k_values;
    lc.spectrum = config.spectrum;
    lc.s = config.s;
    lc.cutoff_radius = config.cutoff_radius;
    lc.shells = config.shells;
    lc.directions = config.directions;
    lc.times = geometric_time_grid(config.t_first, config.t_max, config.per_octave, true);
    append_linear_profile(report.table, linear_decay_profile(lc, params));
  }
  else
  {
    const auto layout = SpectralLayout::create(config.resolution, config.box_length);
    const auto data = make_initial_data(config, layout, params);
    report.info.neutrality_shift = data.neutrality_shift;
    report.info.initial_h3_norm = data.h3_norm;

    IntegratorConfig ic;
    ic.cfl_number = config.cfl;
    ic.t_max = config.t_max;
    ic.sample_interval = config.sample_interval;
    ic.max_steps = config.max_steps;
    ic.gauss_correction = config.gauss_correction;
    auto &table = report.table;
    const auto result = integrate(data.state, ic, params, [&](double t, const State &U) {
      table.append(kSourceSimulation, evaluate_functionals(U, params, t));
    });
    report.info.steps = result.steps;
    report.info.dt = result.dt;
    report.info.gauss_corrections = result.gauss_corrections;
  }

  report.summary = summarize(config, report.table);
  report.info.wall_seconds =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void write_report(const Report &report, const std::string &dir)
{
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path base(dir);
  {
    std::ofstream out(base / "config.txt");
    out << report.config.to_text();
  }
  write_csv_file(report.table, (base / "series.csv").string());
  {
    std::ofstream out(base / "summary.json");
    out << summary_json(report.config, report.summary).dump(2) << '\n';
  }
  {
    nlohmann::json info{{"steps", report.info.steps},
                        {"dt", report.info.dt},
                        {"neutrality_shift", report.info.neutrality_shift},
                        {"initial_h3_norm", report.info.initial_h3_norm},
                        {"wall_seconds", report.info.wall_seconds},
                        {"gauss_corrections", report.info.gauss_corrections}};
    std::ofstream out(base / "run_info.json");
    out << info.dump(2) << '\n';
  }
  if (!fs::exists(base / "summary.json"))
  {
    throw ConfigError("could not write the report into '" + dir + "'");
  }
}

Summary summarize_directory(const std::string &dir, RunConfig *config_out)
{
  const std::filesystem::path base(dir);
  const auto config = RunConfig::load((base / "config.txt").string());
  const auto table = read_csv_file((base / "series.csv").string());
  if (config_out)
  {
    *config_out = config;
  }
  return summarize(config, table);
}

}  // namespace bem
