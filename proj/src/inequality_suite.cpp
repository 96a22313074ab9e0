// SPDX-License-Identifier: Apache-2.0

#include "bem/harness/inequality_suite.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "bem/errors.hpp"
#include "bem/inequalities/checks.hpp"
#include "bem/inequalities/ensemble.hpp"
#include "bem/norms/littlewood_paley.hpp"
#include "bem/norms/norms.hpp"

namespace bem
{

namespace
{

using Exponents = std::vector<std::pair<std::string, double>>;

struct Inputs
{
  const ScalarField &f;
  const ScalarField &h;
  const ScalarField &n;
};

struct Entry
{
  std::string lemma;
  Exponents exponents;
  std::function<double(const Inputs &)> ratio;
  bool has_bound = false;
  double bound = 0.0;
};

std::vector<Entry> entries(const SuiteConfig &config)
{
  const ModelParams params(config.gamma);
  std::vector<Entry> out;

  const std::vector<std::array<double, 4>> gn{
    {2.0, 1, 0, 2}, {3.0, 0, 0, 1}, {4.0, 1, 1, 2}, {6.0, 0, 0, 1},
    {kInfinity, 0, 1, 2}, {kInfinity, 1, 2, 3}};
  for (const auto &e : gn)
  {
    const double p = e[0];
    const int alpha = int(e[1]);
    const int m = int(e[2]);
    const int l = int(e[3]);
    out.push_back({"gagliardo_nirenberg",
                   {{"p", p}, {"alpha", alpha}, {"m", m}, {"l", l}},
                   [=](const Inputs &in) { return check_gagliardo_nirenberg(in.f, p, alpha, m, l); }});
  }

  for (int k = 0; k <= 2; ++k)
  {
    out.push_back({"composition_linf",
                   {{"k", k}, {"gamma", config.gamma}},
                   [=](const Inputs &in) { return check_composition(in.n, k, params).ratio_inf; }});
    out.push_back({"composition_l2",
                   {{"k", k}, {"gamma", config.gamma}},
                   [=](const Inputs &in) { return check_composition(in.n, k, params).ratio_l2; }});
  }

  for (int k = 1; k <= 3; ++k)
  {
    out.push_back({"commutator", {{"k", k}},
                   [=](const Inputs &in) { return check_commutator(in.f, in.h, k); }});
  }

  for (double p : {1.2, 1.5, 2.0})
  {
    out.push_back({"riesz_embedding", {{"p", p}},
                   [=](const Inputs &in) { return check_riesz_embedding(in.f, p); }});
  }
  for (double p : {1.0, 1.5, 2.0})
  {
    out.push_back({"besov_embedding", {{"p", p}},
                   [=](const Inputs &in) { return check_besov_embedding(in.f, p); }});
  }

  for (int l = 0; l <= 2; ++l)
  {
    for (double s : {0.5, 1.0, 1.5})
    {
      out.push_back({"interpolation_sobolev",
                     {{"l", l}, {"s", s}},
                     [=](const Inputs &in) {
                       return check_interpolation(in.f, l, s, NegativeSpace::sobolev);
                     },
                     true, 1.0 + config.interpolation_tolerance});
      out.push_back({"interpolation_besov",
                     {{"l", l}, {"s", s}},
                     [=](const Inputs &in) {
                       return check_interpolation(in.f, l, s, NegativeSpace::besov);
                     },
                     true, config.besov_interpolation_bound});
    }
  }
  return out;
}

// Largest ratio of every entry over the ensemble on one grid; NaN or infinity is kept so
// that it shows up in the report.
std::vector<double> sweep(const SuiteConfig &config, const std::vector<Entry> &list,
                          int resolution)
{
  const auto layout = SpectralLayout::create(resolution, 2.0 * std::numbers::pi);
  std::array<FieldEnsemble, 3> ensembles{
    FieldEnsemble({config.seed, config.count, 0.0, config.max_mode, true}),
    FieldEnsemble({config.seed, config.count, 1.0, config.max_mode, true}),
    FieldEnsemble({config.seed, config.count, 2.0, config.max_mode, true})};
  std::vector<double> worst(list.size(), 0.0);
  for (int i = 0; i < config.count; ++i)
  {
    const auto f = ensembles[i % 3].member(i, layout);
    const auto h = ensembles[(i + 1) % 3].member(i + config.count, layout);
    const auto n = (config.composition_amplitude / h3_norm(f)) * f;
    const Inputs in{f, h, n};
    for (std::size_t e = 0; e < list.size(); ++e)
    {
      const double r = list[e].ratio(in);
      if (!std::isfinite(r) || !std::isfinite(worst[e]))
      {
        worst[e] = std::isfinite(worst[e]) ? r : worst[e];
      }
      else
      {
        worst[e] = std::max(worst[e], r);
      }
    }
  }
  return worst;
}

}  // namespace

const LemmaResult &SuiteReport::get(const std::string &lemma, const Exponents &exponents) const
{
  for (const auto &r : lemmas)
  {
    if (r.lemma == lemma && r.exponents == exponents)
    {
      return r;
    }
  }
  throw ConfigError("no suite entry for " + lemma);
}

SuiteReport run_inequality_suite(const SuiteConfig &config)
{
  if (config.count < 1)
  {
    throw ConfigError("suite ensemble must not be empty");
  }
  const auto list = entries(config);
  const auto coarse = sweep(config, list, config.coarse_resolution);
  const auto fine = sweep(config, list, config.fine_resolution);

  SuiteReport report;
  report.config = config;
  report.pass = true;
  for (std::size_t e = 0; e < list.size(); ++e)
  {
    LemmaResult r;
    r.lemma = list[e].lemma;
    r.exponents = list[e].exponents;
    r.ensemble_size = config.count;
    r.max_ratio_coarse = coarse[e];
    r.max_ratio = fine[e];
    r.finite = std::isfinite(coarse[e]) && std::isfinite(fine[e]);
    r.refinement_ratio = coarse[e] > 0.0 ? fine[e] / coarse[e] : (fine[e] == 0.0 ? 1.0 : kInfinity);
    r.has_bound = list[e].has_bound;
    r.bound = list[e].bound;
    r.pass = r.finite && r.refinement_ratio <= config.refinement_tolerance &&
             (!r.has_bound || (r.max_ratio <= r.bound && r.max_ratio_coarse <= r.bound));
    report.pass = report.pass && r.pass;
    report.lemmas.push_back(std::move(r));
  }

  for (double L : config.endpoint_boxes)
  {
    const int N = int(std::lround(L));
    const auto layout = SpectralLayout::create(N, L);
    const auto f = centered_bump(layout, config.endpoint_width);
    const double l1 = lp_norm(f, 1.0);
    report.endpoint.push_back(
      {L, N, homogeneous_sobolev_norm(f, -1.5) / l1, besov_norm(f, 1.5) / l1});
  }
  return report;
}

nlohmann::json SuiteReport::to_json() const
{
  using nlohmann::json;
  json j;
  j["seed"] = config.seed;
  j["ensemble_size"] = config.count;
  j["resolutions"] = {config.coarse_resolution, config.fine_resolution};
  j["max_mode"] = config.max_mode;
  j["refinement_tolerance"] = config.refinement_tolerance;
  json lemmas = json::array();
  for (const auto &r : this->lemmas)
  {
    json ex = json::object();
    for (const auto &[k, v] : r.exponents)
    {
      ex[k] = std::isinf(v) ? json("inf") : json(v);
    }
    json e{{"lemma", r.lemma},
           {"exponents", ex},
           {"ensemble_size", r.ensemble_size},
           {"max_ratio", r.max_ratio},
           {"max_ratio_coarse", r.max_ratio_coarse},
           {"refinement_ratio", r.refinement_ratio},
           {"finite", r.finite},
           {"pass", r.pass}};
    if (r.has_bound)
    {
      e["bound"] = r.bound;
    }
    lemmas.push_back(e);
  }
  j["lemmas"] = lemmas;
  json ep = json::array();
  for (const auto &e : endpoint)
  {
    ep.push_back({{"box_length", e.box_length},
                  {"resolution", e.resolution},
                  {"sobolev_ratio", e.sobolev_ratio},
                  {"besov_ratio", e.besov_ratio}});
  }
  j["endpoint_sweep"] = {
    {"field", "centered Gaussian bump minus its mean, p = 1, s = 3/2"},
    {"besov_embedding_constant", LittlewoodPaley::embedding_constant(1.5)},
    {"boxes", ep}};
  j["pass"] = pass;
  return j;
}

}  // namespace bem
