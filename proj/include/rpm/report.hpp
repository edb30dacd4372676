#pragma once

// Rendering of results as JSON, CSV or aligned text. Every number is carried
// as a decimal string at full working precision.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rpm/perturbation.hpp"
#include "rpm/solver.hpp"

namespace rpm {

enum class Format { json, csv, text };

Format parse_format(std::string_view text);
std::string to_string(Format f);

struct Report {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  /// Structured payload (sequences, brackets, series); JSON output only.
  nlohmann::json detail = nlohmann::json::object();

  void add_row(std::vector<std::string> row);
};

std::string render(const Report& report, Format format);

/// Canonical JSON: sorted keys, two-space indent, trailing newline. Parsing
/// the result and re-emitting it reproduces it byte for byte.
std::string to_json_text(const Report& report);
Report report_from_json(std::string_view text);

nlohmann::json to_json(const HankelProblem& problem);
HankelProblem problem_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RootSequence& seq);
RootSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EigenBracket& bracket);
nlohmann::json to_json(const PerturbationSeries& series);

/// Full-precision decimal of x.
std::string decimal(const BigReal& x);

}  // namespace rpm
