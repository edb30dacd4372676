#include "rpm/golden.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rpm/errors.hpp"

#ifndef RPM_DEFAULT_GOLDEN_DIR
#define RPM_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace rpm {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\r')) cell.pop_back();
    std::size_t b = 0;
    while (b < cell.size() && cell[b] == ' ') ++b;
    out.push_back(cell.substr(b));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string mantissa(const std::string& printed) {
  std::string s = printed;
  if (const auto e = s.find_first_of("eE"); e != std::string::npos) s = s.substr(0, e);
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s = s.substr(1);
  return s;
}

}  // namespace

std::size_t GoldenTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw InvalidArgument("table " + std::to_string(id) + " has no column '" + name + "'");
}

const std::string& GoldenTable::cell(std::size_t row, const std::string& name) const {
  if (row >= rows.size()) throw InvalidArgument("row out of range");
  const std::size_t c = column(name);
  if (c >= rows[row].size()) throw InvalidArgument("short row in table " + std::to_string(id));
  return rows[row][c];
}

std::string default_golden_dir() {
  if (const char* env = std::getenv("RPM_GOLDEN_DIR"); env && *env) return env;
  return RPM_DEFAULT_GOLDEN_DIR;
}

GoldenTable load_golden(int id, const std::string& dir) {
  if (id < 1 || id > 6) throw InvalidArgument("no table " + std::to_string(id));
  const std::string path = dir + "/table" + std::to_string(id) + ".csv";
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  GoldenTable t;
  t.id = id;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (t.header.empty()) {
        const auto b = line.find_first_not_of("# ");
        t.header = b == std::string::npos ? "" : line.substr(b);
      }
      continue;
    }
    if (t.columns.empty()) {
      t.columns = split(line);
      continue;
    }
    auto row = split(line);
    if (row.size() != t.columns.size())
      throw ParseError(path + ": expected " + std::to_string(t.columns.size()) + " cells in '" + line + "'");
    t.rows.push_back(std::move(row));
  }
  if (t.columns.empty()) throw ParseError(path + ": no column header");
  return t;
}

int decimal_places(const std::string& printed) {
  const std::string m = mantissa(printed);
  const auto dot = m.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(m.size() - dot - 1);
}

int significant_digits(const std::string& printed) {
  int n = 0;
  bool leading = true;
  for (char c : mantissa(printed)) {
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++n;
  }
  return n;
}

bool matches_printed(const BigReal& x, const std::string& printed, int slack) {
  const int digits = std::max(x.digits(), significant_digits(printed) + 10);
  const BigReal p = BigReal::parse(printed, digits);
  return abs(x.with_digits(digits) - p) <= pow10(-(decimal_places(printed) - slack), digits);
}

int agreeing_digits(const BigReal& x, const std::string& printed) {
  const int sig = significant_digits(printed);
  const int digits = std::max(x.digits(), sig + 10);
  const BigReal p = BigReal::parse(printed, digits);
  if (p.is_zero()) return 0;
  const BigReal rel = abs((x.with_digits(digits) - p) / p);
  if (rel.is_zero()) return sig;
  const double lg = log10(rel).to_double();
  return std::clamp(static_cast<int>(std::floor(-lg)), 0, sig);
}

}  // namespace rpm
