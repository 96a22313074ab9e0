// SPDX-License-Identifier: Apache-2.0

#include "bem/harness/run_config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "bem/errors.hpp"

namespace bem
{

namespace
{

std::string trim(const std::string &s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
  {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string &key, const std::string &v)
{
  std::size_t used = 0;
  double x = 0.0;
  try
  {
    x = std::stod(v, &used);
  }
  catch (const std::exception &)
  {
    throw ConfigError("key '" + key + "': '" + v + "' is not a number");
  }
  if (used != v.size())
  {
    throw ConfigError("key '" + key + "': trailing characters in '" + v + "'");
  }
  return x;
}

long to_long(const std::string &key, const std::string &v)
{
  const double x = to_double(key, v);
  if (x != std::floor(x))
  {
    throw ConfigError("key '" + key + "' expects an integer, got '" + v + "'");
  }
  return long(x);
}

bool to_bool(const std::string &key, const std::string &v)
{
  if (v == "true" || v == "1" || v == "yes" || v == "on")
  {
    return true;
  }
  if (v == "false" || v == "0" || v == "no" || v == "off")
  {
    return false;
  }
  throw ConfigError("key '" + key + "' expects a boolean, got '" + v + "'");
}

std::vector<std::string> split(const std::string &v, char sep)
{
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, sep))
  {
    out.push_back(trim(item));
  }
  return out;
}

std::string fmt(double x)
{
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

std::string to_string(DataKind kind)
{
  return kind == DataKind::gaussian_bumps ? "gaussian_bumps" : "band_limited_random";
}

std::string to_string(SpectrumClass spectrum)
{
  return spectrum == SpectrumClass::flat ? "flat" : "gaussian";
}

std::string to_string(RunMode mode)
{
  switch (mode)
  {
  case RunMode::nonlinear:
    return "nonlinear";
  case RunMode::linear:
    return "linear";
  case RunMode::linear_quadrature:
    return "linear_quadrature";
  }
  return "nonlinear";
}

double data_class_order(double p)
{
  if (!(p >= 1.0 && p <= 2.0))
  {
    throw ExponentOutOfRange("data class exponent p must lie in [1, 2]");
  }
  return 3.0 * (1.0 / p - 0.5);
}

void RunConfig::validate() const
{
  if (resolution < 8 || resolution % 2 != 0)
  {
    throw ConfigError("resolution must be even and >= 8");
  }
  if (!(box_length > 0.0))
  {
    throw ConfigError("box length must be positive");
  }
  if (box_length / resolution > 1.5)
  {
    throw ConfigError("grid spacing L / resolution must not exceed 1.5");
  }
  if (!(gamma >= 1.0))
  {
    throw ConfigError("gamma must be >= 1");
  }
  if (!(amplitude > 0.0 && amplitude <= 0.05))
  {
    throw ConfigError("amplitude must lie in (0, 0.05]");
  }
  if (!(s >= 0.0 && s <= 1.5))
  {
    throw ConfigError("data class index s must lie in [0, 1.5]");
  }
  if (!(cutoff_radius > 0.0))
  {
    throw ConfigError("cutoff radius must be positive");
  }
  if (!(t_max >= 0.0) || !(sample_interval > 0.0))
  {
    throw ConfigError("t_max must be non-negative and sample_interval positive");
  }
  if (!(cfl > 0.0 && cfl <= 1.0))
  {
    throw ConfigError("cfl must lie in (0, 1]");
  }
  if (!(fit_t1 > fit_t0) || fit_t0 < 0.0)
  {
    throw ConfigError("fit window must satisfy 0 <= fit_t0 < fit_t1");
  }
  if (shells < 2 || directions < 1 || per_octave < 1 || !(t_first > 0.0))
  {
    throw ConfigError("invalid quadrature settings");
  }
  for (int k : k_values)
  {
    if (k < 0)
    {
      throw ConfigError("k_values must be non-negative");
    }
  }
}

void RunConfig::set(const std::string &key, const std::string &raw)
{
  const std::string v = trim(raw);
  static const std::map<std::string, std::function<void(RunConfig &, const std::string &,
                                                        const std::string &)>>
    setters = {
      {"resolution", [](RunConfig &c, auto &k, auto &x) { c.resolution = int(to_long(k, x)); }},
      {"box_length", [](RunConfig &c, auto &k, auto &x) { c.box_length = to_double(k, x); }},
      {"gamma", [](RunConfig &c, auto &k, auto &x) { c.gamma = to_double(k, x); }},
      {"b_infinity",
       [](RunConfig &c, auto &k, auto &x) {
         const auto parts = split(x, ',');
         if (parts.size() != 3)
         {
           throw ConfigError("b_infinity expects three comma-separated numbers");
         }
         for (int a = 0; a < 3; ++a)
         {
           c.b_infinity[a] = to_double(k, parts[a]);
         }
       }},
      {"amplitude", [](RunConfig &c, auto &k, auto &x) { c.amplitude = to_double(k, x); }},
      {"data_kind",
       [](RunConfig &c, auto &, auto &x) {
         if (x == "gaussian_bumps")
         {
           c.data_kind = DataKind::gaussian_bumps;
         }
         else if (x == "band_limited_random")
         {
           c.data_kind = DataKind::band_limited_random;
         }
         else
         {
           throw ConfigError("unknown data_kind '" + x + "'");
         }
       }},
      {"s", [](RunConfig &c, auto &k, auto &x) { c.s = to_double(k, x); }},
      {"p", [](RunConfig &c, auto &k, auto &x) { c.s = data_class_order(to_double(k, x)); }},
      {"cutoff_radius", [](RunConfig &c, auto &k, auto &x) { c.cutoff_radius = to_double(k, x); }},
      {"spectrum",
       [](RunConfig &c, auto &, auto &x) {
         if (x == "flat")
         {
           c.spectrum = SpectrumClass::flat;
         }
         else if (x == "gaussian")
         {
           c.spectrum = SpectrumClass::gaussian;
         }
         else
         {
           throw ConfigError("unknown spectrum '" + x + "'");
         }
       }},
      {"transverse_electric",
       [](RunConfig &c, auto &k, auto &x) { c.transverse_electric = to_bool(k, x); }},
      {"t_max", [](RunConfig &c, auto &k, auto &x) { c.t_max = to_double(k, x); }},
      {"sample_interval",
       [](RunConfig &c, auto &k, auto &x) { c.sample_interval = to_double(k, x); }},
      {"cfl", [](RunConfig &c, auto &k, auto &x) { c.cfl = to_double(k, x); }},
      {"max_steps", [](RunConfig &c, auto &k, auto &x) { c.max_steps = to_long(k, x); }},
      {"seed",
       [](RunConfig &c, auto &k, auto &x) {
         const long v = to_long(k, x);
         if (v < 0)
         {
           throw ConfigError("seed must be non-negative");
         }
         c.seed = std::uint64_t(v);
       }},
      {"mode",
       [](RunConfig &c, auto &, auto &x) {
         if (x == "nonlinear")
         {
           c.mode = RunMode::nonlinear;
         }
         else if (x == "linear")
         {
           c.mode = RunMode::linear;
         }
         else if (x == "linear_quadrature")
         {
           c.mode = RunMode::linear_quadrature;
         }
         else
         {
           throw ConfigError("unknown mode '" + x + "'");
         }
       }},
      {"gauss_correction",
       [](RunConfig &c, auto &k, auto &x) { c.gauss_correction = to_bool(k, x); }},
      {"fit_t0", [](RunConfig &c, auto &k, auto &x) { c.fit_t0 = to_double(k, x); }},
      {"fit_t1", [](RunConfig &c, auto &k, auto &x) { c.fit_t1 = to_double(k, x); }},
      {"shells", [](RunConfig &c, auto &k, auto &x) { c.shells = int(to_long(k, x)); }},
      {"directions", [](RunConfig &c, auto &k, auto &x) { c.directions = int(to_long(k, x)); }},
      {"per_octave", [](RunConfig &c, auto &k, auto &x) { c.per_octave = int(to_long(k, x)); }},
      {"t_first", [](RunConfig &c, auto &k, auto &x) { c.t_first = to_double(k, x); }},
      {"k_values",
       [](RunConfig &c, auto &k, auto &x) {
         c.k_values.clear();
         for (const auto &part : split(x, ','))
         {
           c.k_values.push_back(int(to_long(k, part)));
         }
       }},
      {"energy_tolerance",
       [](RunConfig &c, auto &k, auto &x) { c.energy_tolerance = to_double(k, x); }},
      {"dissipation_bound",
       [](RunConfig &c, auto &k, auto &x) { c.dissipation_bound = to_double(k, x); }},
      {"divb_tolerance", [](RunConfig &c, auto &k, auto &x) { c.divb_tolerance = to_double(k, x); }},
      {"gauss_growth_tolerance",
       [](RunConfig &c, auto &k, auto &x) { c.gauss_growth_tolerance = to_double(k, x); }},
    };
  const auto it = setters.find(key);
  if (it == setters.end())
  {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
  it->second(*this, key, v);
}

std::string RunConfig::to_text() const
{
  std::ostringstream os;
  os << "resolution = " << resolution << '\n'
     << "box_length = " << fmt(box_length) << '\n'
     << "gamma = " << fmt(gamma) << '\n'
     << "b_infinity = " << fmt(b_infinity[0]) << ',' << fmt(b_infinity[1]) << ','
     << fmt(b_infinity[2]) << '\n'
     << "amplitude = " << fmt(amplitude) << '\n'
     << "data_kind = " << to_string(data_kind) << '\n'
     << "s = " << fmt(s) << '\n'
     << "cutoff_radius = " << fmt(cutoff_radius) << '\n'
     << "spectrum = " << to_string(spectrum) << '\n'
     << "transverse_electric = " << (transverse_electric ? "true" : "false") << '\n'
     << "t_max = " << fmt(t_max) << '\n'
     << "sample_interval = " << fmt(sample_interval) << '\n'
     << "cfl = " << fmt(cfl) << '\n'
     << "max_steps = " << max_steps << '\n'
     << "seed = " << seed << '\n'
     << "mode = " << to_string(mode) << '\n'
     << "gauss_correction = " << (gauss_correction ? "true" : "false") << '\n'
     << "fit_t0 = " << fmt(fit_t0) << '\n'
     << "fit_t1 = " << fmt(fit_t1) << '\n'
     << "shells = " << shells << '\n'
     << "directions = " << directions << '\n'
     << "per_octave = " << per_octave << '\n'
     << "t_first = " << fmt(t_first) << '\n'
     << "k_values = ";
  for (std::size_t i = 0; i < k_values.size(); ++i)
  {
    os << (i ? "," : "") << k_values[i];
  }
  os << '\n'
     << "energy_tolerance = " << fmt(energy_tolerance) << '\n'
     << "dissipation_bound = " << fmt(dissipation_bound) << '\n'
     << "divb_tolerance = " << fmt(divb_tolerance) << '\n'
     << "gauss_growth_tolerance = " << fmt(gauss_growth_tolerance) << '\n';
  return os.str();
}

RunConfig RunConfig::parse(const std::string &text)
{
  RunConfig c;
  c.apply(text);
  return c;
}

void RunConfig::apply(const std::string &text)
{
  std::istringstream is(text);
  std::string line;
  int number = 0;
  while (std::getline(is, line))
  {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos)
    {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty())
    {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
    {
      throw ConfigError("line " + std::to_string(number) + ": expected key = value");
    }
    set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

RunConfig RunConfig::load(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ConfigError("cannot open configuration file '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace bem
