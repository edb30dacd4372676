#pragma once

// Published table values kept as decimal strings, one CSV file per table.

#include <string>
#include <vector>

#include "rpm/big_real.hpp"

namespace rpm {

struct GoldenTable {
  int id = 0;
  std::string header;  // the leading '#' comment line, without the '#'
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  /// Index of a named column; throws InvalidArgument if absent.
  std::size_t column(const std::string& name) const;
  const std::string& cell(std::size_t row, const std::string& name) const;
};

/// $RPM_GOLDEN_DIR if set, else the directory configured at build time.
std::string default_golden_dir();

/// Reads <dir>/table<id>.csv. Throws InvalidArgument for an unknown id and
/// ParseError for a malformed file.
GoldenTable load_golden(int id, const std::string& dir = default_golden_dir());

/// Digits after the decimal point of a printed value.
int decimal_places(const std::string& printed);
/// Significant digits of a printed value.
int significant_digits(const std::string& printed);

/// |x - printed| <= 10^-(decimal_places - slack).
bool matches_printed(const BigReal& x, const std::string& printed, int slack = 0);

/// Number of leading significant digits on which x and the printed value
/// agree: floor(-log10 |x/p - 1|), capped at the printed significant digits.
int agreeing_digits(const BigReal& x, const std::string& printed);

}  // namespace rpm
