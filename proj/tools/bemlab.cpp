// SPDX-License-Identifier: Apache-2.0
//
// bemlab: command-line front end of the simulator and diagnostics harness.
// Exit codes: 0 all gating checks passed, 1 some check failed, 2 runtime or usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bem/errors.hpp"
#include "bem/harness/experiment.hpp"
#include "bem/harness/inequality_suite.hpp"

namespace
{

struct CommonFlags
{
  std::string config;
  std::string out = "bemlab-out";
  std::map<std::string, std::string> overrides;
};

void add_common(CLI::App *cmd, CommonFlags &flags)
{
  cmd->add_option("--config", flags.config, "key = value file mirroring RunConfig");
  cmd->add_option("--out", flags.out, "output directory");
  const std::pair<const char *, const char *> keyed[] = {
    {"--resolution", "resolution"}, {"--box-length", "box_length"},
    {"--gamma", "gamma"},           {"--b-infinity", "b_infinity"},
    {"--amplitude", "amplitude"},   {"--tmax", "t_max"},
    {"--seed", "seed"},             {"--mode", "mode"},
  };
  for (const auto &[flag, key] : keyed)
  {
    const std::string k = key;
    cmd->add_option_function<std::string>(
      flag, [&flags, k](const std::string &v) { flags.overrides[k] = v; }, "sets " + k);
  }
}

bem::RunConfig resolve(bem::RunConfig base, const CommonFlags &flags)
{
  if (!flags.config.empty())
  {
    std::ifstream in(flags.config);
    if (!in)
    {
      throw bem::ConfigError("cannot open configuration file '" + flags.config + "'");
    }
    std::stringstream text;
    text << in.rdbuf();
    // Keys in the file override the subcommand defaults; flags override both.
    base.apply(text.str());
  }
  for (const auto &[key, value] : flags.overrides)
  {
    base.set(key, value);
  }
  base.validate();
  return base;
}

void print_summary(const bem::Summary &summary)
{
  for (const auto &c : summary.checks)
  {
    std::cout << (c.pass ? "PASS " : (c.gating ? "FAIL " : "INFO ")) << c.name << " = " << c.value
              << " (threshold " << c.threshold << ")";
    if (!c.detail.empty())
    {
      std::cout << "  " << c.detail;
    }
    std::cout << '\n';
  }
  for (const auto &f : summary.fits)
  {
    std::cout << "fit " << f.source << '/' << f.column << ": ";
    if (f.ok)
    {
      std::cout << "sigma = " << f.fit.exponent << " +- " << f.fit.exponent_stderr
                << (f.fit.valid ? "" : " [past saturation]")
                << (f.fit.curvature_flag ? " [curved]" : "") << '\n';
    }
    else
    {
      std::cout << f.error << '\n';
    }
  }
  std::cout << (summary.pass ? "overall: PASS" : "overall: FAIL") << '\n';
}

int run_and_report(const bem::RunConfig &config, const std::string &out)
{
  const auto report = bem::run_experiment(config);
  bem::write_report(report, out);
  print_summary(report.summary);
  std::cout << "wrote " << out << " (" << report.info.steps << " steps, "
            << report.info.wall_seconds << " s)\n";
  return report.summary.pass ? 0 : 1;
}

bem::RunConfig linear_decay_defaults()
{
  bem::RunConfig c;
  c.mode = bem::RunMode::linear_quadrature;
  c.spectrum = bem::SpectrumClass::flat;
  c.t_max = 1e4;
  c.fit_t0 = 1e2;
  c.fit_t1 = 1e4;
  return c;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Pseudo-spectral simulator and diagnostics for the bipolar Euler-Maxwell system"};
  app.require_subcommand(1);

  CommonFlags sim_flags;
  auto *simulate = app.add_subcommand("simulate", "integrate one run and write its report");
  add_common(simulate, sim_flags);

  CommonFlags lin_flags;
  auto *linear = app.add_subcommand("linear-decay", "linear-semigroup decay profile by quadrature");
  add_common(linear, lin_flags);

  bem::SuiteConfig suite;
  std::string suite_out = "bemlab-out";
  auto *inequalities =
    app.add_subcommand("check-inequalities", "ensemble sweep of the functional inequalities");
  inequalities->add_option("--seed", suite.seed, "ensemble seed");
  inequalities->add_option("--resolution", suite.coarse_resolution, "coarse grid (fine is twice)");
  inequalities->add_option("--count", suite.count, "ensemble size");
  inequalities->add_option("--out", suite_out, "output directory");

  std::string fit_csv;
  std::string fit_config;
  double fit_t0 = -1.0;
  double fit_t1 = -1.0;
  auto *fit = app.add_subcommand("fit", "re-fit the channels of a stored CSV");
  fit->add_option("csv", fit_csv, "series.csv to fit")->required();
  fit->add_option("--config", fit_config, "configuration the CSV was produced with");
  fit->add_option("--t0", fit_t0, "window start");
  fit->add_option("--t1", fit_t1, "window end");

  std::string report_dir;
  auto *report = app.add_subcommand("report", "rebuild summary.json from a stored run");
  report->add_option("dir", report_dir, "directory written by simulate or linear-decay")->required();

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try
  {
    if (*simulate)
    {
      return run_and_report(resolve(bem::RunConfig{}, sim_flags), sim_flags.out);
    }
    if (*linear)
    {
      return run_and_report(resolve(linear_decay_defaults(), lin_flags), lin_flags.out);
    }
    if (*inequalities)
    {
      suite.fine_resolution = 2 * suite.coarse_resolution;
      const auto result = bem::run_inequality_suite(suite);
      std::filesystem::create_directories(suite_out);
      const auto path = std::filesystem::path(suite_out) / "inequalities.json";
      std::ofstream(path) << result.to_json().dump(2) << '\n';
      for (const auto &r : result.lemmas)
      {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.lemma << " max " << r.max_ratio
                  << " refinement " << r.refinement_ratio << '\n';
      }
      std::cout << "wrote " << path.string() << '\n';
      return result.pass ? 0 : 1;
    }
    if (*fit)
    {
      bem::RunConfig config;
      if (!fit_config.empty())
      {
        config = bem::RunConfig::load(fit_config);
      }
      if (fit_t0 >= 0.0)
      {
        config.fit_t0 = fit_t0;
      }
      if (fit_t1 >= 0.0)
      {
        config.fit_t1 = fit_t1;
      }
      config.validate();
      const auto summary = bem::summarize(config, bem::read_csv_file(fit_csv));
      std::cout << bem::summary_json(config, summary)["fits"].dump(2) << '\n';
      return 0;
    }
    if (*report)
    {
      bem::RunConfig config;
      const auto summary = bem::summarize_directory(report_dir, &config);
      const auto path = std::filesystem::path(report_dir) / "summary.json";
      std::ofstream(path) << bem::summary_json(config, summary).dump(2) << '\n';
      print_summary(summary);
      return summary.pass ? 0 : 1;
    }
  }
  catch (const std::exception &e)
  {
    std::cerr << "bemlab: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
