#include "rpm/report.hpp"

#include <algorithm>
#include <sstream>

#include "rpm/errors.hpp"

namespace rpm {

using nlohmann::json;

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw ParseError("format must be json, csv or text");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "text";
}

void Report::add_row(std::vector<std::string> row) {
  row.resize(columns.size());
  rows.push_back(std::move(row));
}

std::string decimal(const BigReal& x) { return x.to_string(); }

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Report& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << csv_cell(r.columns[i]);
  os << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << "\n";
  }
  return os.str();
}

std::string render_text(const Report& r) {
  std::vector<std::size_t> width(r.columns.size());
  for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
  for (const auto& row : r.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  if (!r.title.empty()) os << r.title << "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size(), ' ');
    }
    os << s << "\n";
  };
  line(r.columns);
  for (const auto& row : r.rows) line(row);
  for (const auto& n : r.notes) os << n << "\n";
  return os.str();
}

SequenceStatus parse_status(const std::string& s) {
  if (s == "converged") return SequenceStatus::converged;
  if (s == "drifting") return SequenceStatus::drifting;
  if (s == "lost") return SequenceStatus::lost;
  throw ParseError("unknown sequence status '" + s + "'");
}

Unknown parse_unknown(const std::string& s) {
  if (s == "energy" || s == "E") return Unknown::energy;
  if (s == "depth" || s == "v0") return Unknown::depth;
  throw ParseError("unknown solve-for '" + s + "'");
}

}  // namespace

std::string to_json_text(const Report& r) {
  json j;
  j["title"] = r.title;
  j["columns"] = r.columns;
  j["rows"] = r.rows;
  j["notes"] = r.notes;
  j["detail"] = r.detail;
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid report: ") + e.what());
  }
  Report r;
  try {
    r.title = j.at("title").get<std::string>();
    r.columns = j.at("columns").get<std::vector<std::string>>();
    r.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.detail = j.at("detail");
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid report: ") + e.what());
  }
  return r;
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::json: return to_json_text(report);
    case Format::csv: return render_csv(report);
    case Format::text: return render_text(report);
  }
  return render_text(report);
}

json to_json(const HankelProblem& p) {
  return json{{"potential", p.potential.name()},
              {"geometry", p.geometry.name()},
              {"ansatz", to_string(p.ansatz)},
              {"offset", p.offset},
              {"unknown", to_string(p.unknown)},
              {"fixed", p.fixed_value.to_string()}};
}

HankelProblem problem_from_json(const json& j) {
  HankelProblem p;
  p.geometry = Geometry::parse(j.at("geometry").get<std::string>());
  p.potential = PotentialSpec::parse(j.at("potential").get<std::string>(), p.geometry.kind);
  p.ansatz = parse_ansatz(j.at("ansatz").get<std::string>());
  p.offset = j.at("offset").get<int>();
  p.unknown = parse_unknown(j.at("unknown").get<std::string>());
  p.fixed_value = Rational::parse(j.at("fixed").get<std::string>());
  return p;
}

json to_json(const RootSequence& seq) {
  json entries = json::array();
  for (const auto& e : seq.entries) entries.push_back(json{{"D", e.dimension}, {"root", decimal(e.root)}});
  json j{{"problem", to_json(seq.problem)},
         {"entries", entries},
         {"est_correct_digits", seq.est_correct_digits},
         {"status", to_string(seq.status)},
         {"digits", seq.digits},
         {"missing", seq.missing}};
  j["converged"] = seq.converged ? json(decimal(*seq.converged)) : json(nullptr);
  return j;
}

RootSequence sequence_from_json(const json& j) {
  try {
    RootSequence seq;
    seq.problem = problem_from_json(j.at("problem"));
    seq.digits = j.at("digits").get<int>();
    const int digits = std::max(seq.digits, 1);
    for (const auto& e : j.at("entries"))
      seq.entries.push_back({e.at("D").get<int>(), BigReal::parse(e.at("root").get<std::string>(), digits)});
    if (!j.at("converged").is_null()) seq.converged = BigReal::parse(j.at("converged").get<std::string>(), digits);
    seq.est_correct_digits = j.at("est_correct_digits").get<int>();
    seq.status = parse_status(j.at("status").get<std::string>());
    seq.missing = j.at("missing").get<std::vector<int>>();
    return seq;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid sequence: ") + e.what());
  }
}

json to_json(const EigenBracket& b) {
  json j{{"n", b.n},
         {"partial", b.partial},
         {"lower_sequence", to_json(b.lower_sequence)},
         {"upper_sequence", to_json(b.upper_sequence)}};
  j["lower"] = b.lower ? json(decimal(*b.lower)) : json(nullptr);
  j["upper"] = b.upper ? json(decimal(*b.upper)) : json(nullptr);
  const auto w = b.width();
  j["width"] = w ? json(w->to_string(6)) : json(nullptr);
  return j;
}

json to_json(const PerturbationSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(c.to_string());
  json j{{"potential", s.potential.name()},
         {"geometry", s.geometry.name()},
         {"n", s.n},
         {"v0_base", s.v0_base.to_string()},
         {"coeffs", coeffs},
         {"branch", s.branch_id},
         {"dimension", s.dimension},
         {"slope_check", s.coeffs.empty() ? std::string("none") : to_string(slope_sign_check(s))}};
  j["defining_polynomial"] = s.defining_polynomial ? json(to_string(*s.defining_polynomial)) : json(nullptr);
  j["stable_from"] = s.stable_from ? json(*s.stable_from) : json(nullptr);
  return j;
}

}  // namespace rpm
