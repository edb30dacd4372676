#include "rpm/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

#include "rpm/errors.hpp"
#include "rpm/golden.hpp"
#include "rpm/perturbation.hpp"
#include "rpm/reference.hpp"

namespace rpm {

using nlohmann::json;

int RunConfig::resolved_digits() const {
  if (digits) return *digits;
  if (const char* env = std::getenv("RPM_DIGITS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end == '\0' && v > 0) return static_cast<int>(v);
    if (std::string(env) != "auto") throw ParseError("RPM_DIGITS must be a positive integer or 'auto'");
  }
  return auto_digits(d_max);
}

namespace {

Geometry geometry_or(const RunConfig& c, const std::string& fallback) {
  return Geometry::parse(c.geometry.empty() ? fallback : c.geometry);
}

PotentialSpec potential_or(const RunConfig& c, const std::string& fallback, GeometryKind kind) {
  return PotentialSpec::parse(c.potential.empty() ? fallback : c.potential, kind);
}

SolverOptions solver_options(const RunConfig& c) {
  SolverOptions o;
  o.digits = c.resolved_digits();
  o.scan_dimension = c.d_min;
  return o;
}

std::vector<std::string> read_targets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open targets file " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

/// Runs jobs on up to hardware_concurrency threads; results keep job order.
template <class T>
std::vector<T> parallel_map(const std::vector<std::function<T()>>& jobs) {
  std::vector<T> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      try {
        out[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<RootSequence> labeled_only(std::vector<LabeledSequence> ls) {
  std::vector<RootSequence> out;
  for (auto& l : ls)
    if (l.n > 0) out.push_back(std::move(l.sequence));
  return out;
}

// Adds computed-vs-printed columns for one golden row.
void compare_row(Report& r, std::vector<std::string> key, const std::optional<RootSequence>& seq,
                 const std::string& printed, bool& mismatch, BigReal& worst) {
  std::vector<std::string> row = std::move(key);
  if (!seq || seq->empty()) {
    row.insert(row.end(), {"", printed, "", "0", "0", "missing", "no"});
    mismatch = true;
    r.add_row(std::move(row));
    return;
  }
  const BigReal& v = seq->value();
  const bool ok = matches_printed(v, printed);
  if (!ok) mismatch = true;
  const int digits = std::max(v.digits(), significant_digits(printed) + 10);
  const BigReal d = abs(v.with_digits(digits) - BigReal::parse(printed, digits));
  if (d > worst) worst = d;
  row.insert(row.end(), {decimal(v), printed, d.to_string(3), std::to_string(agreeing_digits(v, printed)),
                         std::to_string(seq->est_correct_digits), to_string(seq->status), ok ? "yes" : "no"});
  r.add_row(std::move(row));
}

const std::vector<std::string> kCompareColumns = {"v0",           "printed", "abs_delta", "agree_digits",
                                                  "est_digits",   "status",  "match"};

std::size_t row_limit(const RunConfig& c, std::size_t available) {
  if (!c.rows) return available;
  if (*c.rows < 1) throw InvalidArgument("--rows must be positive");
  return std::min<std::size_t>(available, static_cast<std::size_t>(*c.rows));
}

CommandResult table_ladder(const RunConfig& c, const GoldenTable& g) {
  // Table 1: odd rows are the odd-parity ladder, even rows the even one.
  const std::size_t rows = row_limit(c, g.rows.size());
  const int odd = static_cast<int>((rows + 1) / 2), even = static_cast<int>(rows / 2);
  const SolverOptions o = solver_options(c);
  const PotentialSpec p = PotentialSpec::gaussian();
  std::vector<std::function<std::vector<RootSequence>()>> jobs;
  jobs.push_back([&] { return labeled_only(critical_parameters(p, Geometry::parity(1), Ansatz::g, odd, c.d_max, o)); });
  if (even > 0)
    jobs.push_back(
        [&] { return labeled_only(critical_parameters(p, Geometry::parity(0), Ansatz::g, even, c.d_max, o)); });
  auto ladders = parallel_map(jobs);
  CommandResult res;
  Report& r = res.report;
  r.title = "table 1: " + g.header;
  r.columns = {"n", "parity"};
  r.columns.insert(r.columns.end(), kCompareColumns.begin(), kCompareColumns.end());
  bool mismatch = false;
  BigReal worst(0L, o.digits);
  json seqs = json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    const int s = i % 2 == 0 ? 1 : 0;
    const std::size_t k = i / 2;
    const auto& ladder = ladders[s == 1 ? 0 : 1];
    std::optional<RootSequence> seq;
    if (k < ladder.size()) seq = ladder[k];
    if (seq) seqs.push_back(to_json(*seq));
    compare_row(r, {g.rows[i][0], std::to_string(s)}, seq, g.cell(i, "v0"), mismatch, worst);
  }
  r.detail["sequences"] = seqs;
  r.notes.push_back("max abs_delta " + worst.to_string(3));
  res.exit_code = mismatch ? exit_mismatch : exit_ok;
  return res;
}

CommandResult table_by_l(const RunConfig& c, const GoldenTable& g, const PotentialSpec& p, Ansatz ansatz) {
  const std::size_t rows = row_limit(c, g.rows.size());
  const bool has_l = std::find(g.columns.begin(), g.columns.end(), "l") != g.columns.end();
  std::map<int, int> need;  // l -> deepest n
  std::vector<std::pair<int, int>> keys;
  for (std::size_t i = 0; i < rows; ++i) {
    const int l = has_l ? std::stoi(g.cell(i, "l")) : 0;
    const int n = has_l ? std::stoi(g.cell(i, "n")) : static_cast<int>(i) + 1;
    keys.emplace_back(l, n);
    need[l] = std::max(need[l], n);
  }
  const SolverOptions o = solver_options(c);
  std::vector<int> ls;
  std::vector<std::function<std::vector<RootSequence>()>> jobs;
  for (const auto& [l, n] : need) {
    ls.push_back(l);
    jobs.push_back([&, l = l, n = n] { return labeled_only(critical_parameters(p, Geometry::central(l), ansatz, n, c.d_max, o)); });
  }
  auto results = parallel_map(jobs);
  CommandResult res;
  Report& r = res.report;
  r.title = "table " + std::to_string(g.id) + ": " + g.header;
  r.columns = has_l ? std::vector<std::string>{"l", "n"} : std::vector<std::string>{"state"};
  r.columns.insert(r.columns.end(), kCompareColumns.begin(), kCompareColumns.end());
  bool mismatch = false;
  BigReal worst(0L, o.digits);
  json seqs = json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    const auto [l, n] = keys[i];
    const auto& list = results[std::find(ls.begin(), ls.end(), l) - ls.begin()];
    std::optional<RootSequence> seq;
    if (n - 1 < static_cast<int>(list.size())) seq = list[n - 1];
    if (seq) seqs.push_back(to_json(*seq));
    std::vector<std::string> key = has_l ? std::vector<std::string>{g.rows[i][0], g.rows[i][1]}
                                         : std::vector<std::string>{g.rows[i][0]};
    compare_row(r, key, seq, g.cell(i, "v0"), mismatch, worst);
  }
  r.detail["sequences"] = seqs;
  r.notes.push_back("max abs_delta " + worst.to_string(3));
  res.exit_code = mismatch ? exit_mismatch : exit_ok;
  return res;
}

CommandResult table_large_l(const RunConfig& c, const GoldenTable& g, const PotentialSpec& p) {
  const std::size_t rows = row_limit(c, g.rows.size());
  const SolverOptions o = solver_options(c);
  std::vector<std::function<std::optional<RootSequence>()>> jobs;
  for (std::size_t i = 0; i < rows; ++i) {
    const int l = std::stoi(g.cell(i, "l"));
    jobs.push_back([&, l]() -> std::optional<RootSequence> {
      auto s = labeled_only(critical_parameters(p, Geometry::central(l), Ansatz::f, 1, c.d_max, o));
      if (s.empty()) return std::nullopt;
      return s.front();
    });
  }
  auto results = parallel_map(jobs);
  CommandResult res;
  Report& r = res.report;
  r.title = "table " + std::to_string(g.id) + ": " + g.header;
  r.columns = {"l", "v0", "printed", "abs_delta", "est_digits", "status", "wkb", "le_wkb", "printed_le_wkb",
               "variational", "le_variational", "printed_le_variational", "match"};
  bool mismatch = false;
  BigReal worst(0L, o.digits);
  json seqs = json::array();
  const Family family = p.family;
  for (std::size_t i = 0; i < rows; ++i) {
    const int l = std::stoi(g.cell(i, "l"));
    const std::string& printed = g.cell(i, "v0");
    const auto& seq = results[i];
    std::vector<std::string> row{g.cell(i, "l")};
    if (!seq) {
      mismatch = true;
      row.insert(row.end(), {"", printed, "", "0", "missing"});
      row.resize(r.columns.size());
      row.back() = "no";
      r.add_row(std::move(row));
      continue;
    }
    seqs.push_back(to_json(*seq));
    const BigReal& v = seq->value();
    const BigReal wkb = wkb_critical(l, o.digits);
    const BigReal var = variational_critical(family, l, o.digits);
    const BigReal le_w = log_error(v, wkb);
    const BigReal le_v = log_error(v, var);
    const std::string pw = g.cell(i, "le_wkb"), pv = g.cell(i, "le_variational");
    // log errors are printed to one decimal; +-0.05 is the rounding band
    const BigReal band = BigReal::parse("0.05", o.digits) + pow10(-10, o.digits);
    const bool ok = matches_printed(v, printed) && abs(le_w - BigReal::parse(pw, o.digits)) <= band &&
                    abs(le_v - BigReal::parse(pv, o.digits)) <= band && matches_printed(wkb, g.cell(i, "wkb")) &&
                    matches_printed(var, g.cell(i, "variational"));
    if (!ok) mismatch = true;
    const int digits = std::max(v.digits(), significant_digits(printed) + 10);
    const BigReal d = abs(v.with_digits(digits) - BigReal::parse(printed, digits));
    if (d > worst) worst = d;
    row.insert(row.end(), {decimal(v), printed, d.to_string(3), std::to_string(seq->est_correct_digits),
                           to_string(seq->status), wkb.to_fixed(1), le_w.to_fixed(2), pw, var.to_fixed(1),
                           le_v.to_fixed(2), pv, ok ? "yes" : "no"});
    r.add_row(std::move(row));
  }
  r.detail["sequences"] = seqs;
  r.notes.push_back("max abs_delta " + worst.to_string(3));
  res.exit_code = mismatch ? exit_mismatch : exit_ok;
  return res;
}

}  // namespace

CommandResult cmd_critical(const RunConfig& c) {
  if (c.count < 1) throw InvalidArgument("--n must be positive");
  const Geometry geometry = geometry_or(c, "parity=1");
  const PotentialSpec potential = potential_or(c, "gaussian", geometry.kind);
  const Ansatz ansatz = parse_ansatz(c.ansatz);
  const int offset = c.offsets.empty() ? 0 : c.offsets.front();
  const SolverOptions o = solver_options(c);
  auto found = critical_parameters(potential, geometry, ansatz, c.count, c.d_max, o, offset);
  std::vector<std::string> targets;
  if (!c.targets_file.empty()) targets = read_targets(c.targets_file);

  CommandResult res;
  Report& r = res.report;
  r.title = "critical depths: " + potential.name() + " " + geometry.name() + " ansatz=" + to_string(ansatz) +
            " D<=" + std::to_string(c.d_max) + " digits=" + std::to_string(o.digits);
  r.columns = {"n", "v0", "est_digits", "status"};
  if (!targets.empty()) r.columns.insert(r.columns.end(), {"target", "agree_digits"});
  json seqs = json::array();
  int labeled = 0;
  bool partial = false;
  for (const auto& l : found) {
    if (l.n > 0) ++labeled;
    if (l.sequence.status != SequenceStatus::converged) partial = true;
    std::vector<std::string> row{std::to_string(l.n), l.sequence.empty() ? "" : decimal(l.sequence.value()),
                                 std::to_string(l.sequence.est_correct_digits), to_string(l.sequence.status)};
    if (!targets.empty()) {
      const std::size_t k = static_cast<std::size_t>(l.n) - 1;
      if (l.n > 0 && k < targets.size() && !l.sequence.empty()) {
        row.push_back(targets[k]);
        row.push_back(std::to_string(agreeing_digits(l.sequence.value(), targets[k])));
      }
    }
    r.add_row(std::move(row));
    json j = to_json(l.sequence);
    j["n"] = l.n;
    seqs.push_back(j);
  }
  if (labeled < c.count) {
    partial = true;
    r.notes.push_back("found " + std::to_string(labeled) + " of " + std::to_string(c.count) + " critical depths");
  }
  r.detail["sequences"] = seqs;
  res.exit_code = partial ? exit_partial : exit_ok;
  return res;
}

CommandResult cmd_eigen(const RunConfig& c) {
  if (c.v0.empty()) throw InvalidArgument("--v0 is required");
  const Geometry geometry = geometry_or(c, "parity=" + std::to_string(c.state % 2));
  const PotentialSpec potential = potential_or(c, "rational:m=2", geometry.kind);
  const Rational v0 = Rational::parse(c.v0);
  const EigenBracket b = eigenvalue_bracket(potential, geometry, v0, c.state, c.d_max, solver_options(c));
  CommandResult res;
  Report& r = res.report;
  r.title = "eigenvalue bracket: " + potential.name() + " " + geometry.name() + " v0=" + v0.to_string() +
            " state=" + std::to_string(c.state) + " D<=" + std::to_string(c.d_max);
  r.columns = {"state", "lower", "upper", "width", "partial"};
  const auto w = b.width();
  r.add_row({std::to_string(b.n), b.lower ? decimal(*b.lower) : "", b.upper ? decimal(*b.upper) : "",
             w ? w->to_string(6) : "", b.partial ? "yes" : "no"});
  r.detail["bracket"] = to_json(b);
  res.exit_code = b.partial ? exit_partial : exit_ok;
  return res;
}

CommandResult cmd_perturb(const RunConfig& c) {
  if (c.v0.empty()) throw InvalidArgument("--v0 is required");
  const Geometry geometry = geometry_or(c, "parity=0");
  const PotentialSpec potential = potential_or(c, "rational:m=2", geometry.kind);
  PerturbationOptions po;
  po.dimension = c.d_max;
  po.offset = c.offsets.empty() ? 0 : c.offsets.front();
  po.ansatz = parse_ansatz(c.ansatz);
  const Rational base = Rational::parse(c.v0);
  const auto branches = perturb_at_threshold(potential, geometry, base, c.order, po);
  CommandResult res;
  Report& r = res.report;
  r.title = "threshold expansion: " + potential.name() + " " + geometry.name() + " v0=" + base.to_string() +
            " order=" + std::to_string(c.order) + " D=" + std::to_string(c.d_max);
  r.columns = {"branch", "stable_from", "slope_check"};
  for (int k = 1; k <= c.order; ++k) r.columns.push_back("E" + std::to_string(k));
  json list = json::array();
  bool partial = false;
  for (const auto& s : branches) {
    std::vector<std::string> row{std::to_string(s.branch_id), s.stable_from ? std::to_string(*s.stable_from) : "",
                                 s.coeffs.empty() ? "" : to_string(slope_sign_check(s))};
    for (const auto& q : s.coeffs) row.push_back(q.to_string());
    if (!s.complete(c.order)) partial = true;
    r.add_row(std::move(row));
    if (s.defining_polynomial)
      r.notes.push_back("branch " + std::to_string(s.branch_id) + ": next coefficient is a root of " +
                        to_string(*s.defining_polynomial));
    list.push_back(to_json(s));
  }
  r.detail["branches"] = list;
  res.exit_code = partial ? exit_partial : exit_ok;
  return res;
}

CommandResult cmd_table(const RunConfig& c) {
  const GoldenTable g = load_golden(c.table, c.golden_dir.empty() ? default_golden_dir() : c.golden_dir);
  switch (c.table) {
    case 1: return table_ladder(c, g);
    case 2: return table_by_l(c, g, PotentialSpec::yukawa(), Ansatz::g);
    case 3: return table_by_l(c, g, PotentialSpec::yukawa(), Ansatz::f);
    case 4: return table_by_l(c, g, PotentialSpec::gaussian(GeometryKind::central_field), Ansatz::f);
    case 5: return table_large_l(c, g, PotentialSpec::yukawa());
    case 6: return table_large_l(c, g, PotentialSpec::gaussian(GeometryKind::central_field));
  }
  throw InvalidArgument("no table " + std::to_string(c.table));
}

CommandResult run_command(const RunConfig& c) {
  if (c.command == "critical") return cmd_critical(c);
  if (c.command == "eigen") return cmd_eigen(c);
  if (c.command == "perturb") return cmd_perturb(c);
  if (c.command == "table") return cmd_table(c);
  throw InvalidArgument("unknown command '" + c.command + "'");
}

}  // namespace rpm
