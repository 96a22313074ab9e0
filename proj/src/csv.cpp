// SPDX-License-Identifier: Apache-2.0

#include "bem/harness/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "bem/errors.hpp"

namespace bem
{

namespace
{

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format(double x)
{
  if (std::isnan(x))
  {
    return "nan";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse(const std::string &cell, std::size_t line)
{
  if (cell == "nan")
  {
    return kNaN;
  }
  errno = 0;
  char *end = nullptr;
  const double x = std::strtod(cell.c_str(), &end);
  if (end == cell.c_str() || *end != '\0')
  {
    throw ConfigError("CSV line " + std::to_string(line) + ": bad number '" + cell + "'");
  }
  return x;
}

std::vector<std::string> split_row(const std::string &line)
{
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ','))
  {
    if (!cell.empty() && cell.back() == '\r')
    {
      cell.pop_back();
    }
    cells.push_back(cell);
  }
  return cells;
}

}  // namespace

SeriesTable SeriesTable::with_registry()
{
  SeriesTable table;
  for (const auto &info : functional_registry())
  {
    table.columns.push_back(info.name);
  }
  return table;
}

void SeriesTable::append(const std::string &row_source, const FunctionalSample &sample)
{
  if (sample.values.size() != columns.size())
  {
    throw ConfigError("sample does not match the table columns");
  }
  source.push_back(row_source);
  t.push_back(sample.t);
  values.push_back(sample.values);
}

std::size_t SeriesTable::column_index(const std::string &name) const
{
  for (std::size_t c = 0; c < columns.size(); ++c)
  {
    if (columns[c] == name)
    {
      return c;
    }
  }
  throw ConfigError("no column '" + name + "'");
}

bool SeriesTable::has_source(const std::string &row_source) const
{
  for (const auto &s : source)
  {
    if (s == row_source)
    {
      return true;
    }
  }
  return false;
}

std::vector<double> SeriesTable::times(const std::string &row_source) const
{
  std::vector<double> out;
  for (std::size_t r = 0; r < rows(); ++r)
  {
    if (source[r] == row_source)
    {
      out.push_back(t[r]);
    }
  }
  return out;
}

std::vector<double> SeriesTable::column(const std::string &name,
                                        const std::string &row_source) const
{
  const std::size_t c = column_index(name);
  std::vector<double> out;
  for (std::size_t r = 0; r < rows(); ++r)
  {
    if (source[r] == row_source)
    {
      out.push_back(values[r][c]);
    }
  }
  return out;
}

void append_linear_profile(SeriesTable &table, const LinearDecayProfile &profile)
{
  const std::size_t first = table.rows();
  for (double time : profile.times)
  {
    table.source.push_back(kSourceLinear);
    table.t.push_back(time);
    table.values.emplace_back(table.columns.size(), kNaN);
  }
  for (const auto &series : profile.series)
  {
    if (series.k > 1)
    {
      continue;
    }
    const std::string name = (series.k == 0 ? "L2_" : "H1_") + series.channel;
    bool found = false;
    for (const auto &c : table.columns)
    {
      found = found || c == name;
    }
    if (!found)
    {
      continue;
    }
    const std::size_t c = table.column_index(name);
    for (std::size_t i = 0; i < series.values.size(); ++i)
    {
      table.values[first + i][c] = series.values[i];
    }
  }
}

void write_csv(const SeriesTable &table, std::ostream &out)
{
  out << "source,t";
  for (const auto &c : table.columns)
  {
    out << ',' << c;
  }
  out << '\n';
  for (std::size_t r = 0; r < table.rows(); ++r)
  {
    out << table.source[r] << ',' << format(table.t[r]);
    for (double x : table.values[r])
    {
      out << ',' << format(x);
    }
    out << '\n';
  }
}

SeriesTable read_csv(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line))
  {
    throw ConfigError("empty CSV input");
  }
  auto header = split_row(line);
  if (header.size() < 2 || header[0] != "source" || header[1] != "t")
  {
    throw ConfigError("CSV header must start with 'source,t'");
  }
  SeriesTable table;
  table.columns.assign(header.begin() + 2, header.end());
  std::size_t number = 1;
  while (std::getline(in, line))
  {
    ++number;
    if (line.empty() || line == "\r")
    {
      continue;
    }
    const auto cells = split_row(line);
    if (cells.size() != header.size())
    {
      throw ConfigError("CSV line " + std::to_string(number) + " has " +
                        std::to_string(cells.size()) + " cells, expected " +
                        std::to_string(header.size()));
    }
    table.source.push_back(cells[0]);
    table.t.push_back(parse(cells[1], number));
    std::vector<double> row(cells.size() - 2);
    for (std::size_t c = 2; c < cells.size(); ++c)
    {
      row[c - 2] = parse(cells[c], number);
    }
    table.values.push_back(std::move(row));
  }
  return table;
}

void write_csv_file(const SeriesTable &table, const std::string &path)
{
  std::ofstream out(path);
  if (!out)
  {
    throw ConfigError("cannot write '" + path + "'");
  }
  write_csv(table, out);
}

SeriesTable read_csv_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ConfigError("cannot read '" + path + "'");
  }
  return read_csv(in);
}

}  // namespace bem
