#pragma once

/**
 * @file io.hpp
 * @brief Function-spec and majorant-spec parsing, run configuration and
 *        report emission (JSON and CSV summary).
 *
 * JSON numbers are written with 17 significant digits so a report or a
 * configuration reloads bit for bit.  Non-finite numbers are written as null.
 */

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "slicereg/errors.hpp"
#include "slicereg/majorant.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/sampling.hpp"
#include "slicereg/slice_series.hpp"
#include "slicereg/verify.hpp"

namespace slicereg {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON text

namespace detail {

inline std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_json(std::ostream& os, const Json& j, int indent, int depth) {
  const std::string pad(std::size_t(indent * (depth + 1)), ' ');
  const std::string close(std::size_t(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(key).dump() << ": ";
        write_json(os, value, indent, depth + 1);
      }
      os << '\n' << close << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      if (flat) {
        os << '[';
        for (std::size_t n = 0; n < j.size(); ++n) {
          if (n) os << ", ";
          write_json(os, j[n], indent, depth + 1);
        }
        os << ']';
        return;
      }
      os << "[\n";
      for (std::size_t n = 0; n < j.size(); ++n) {
        if (n) os << ",\n";
        os << pad;
        write_json(os, j[n], indent, depth + 1);
      }
      os << '\n' << close << ']';
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

/// 1-based line of a byte offset in `text`.
inline std::size_t line_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + std::size_t(std::count(text.begin(), text.begin() + std::ptrdiff_t(offset), '\n'));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ":" + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": " +
                     e.what());
  }
}

}  // namespace detail

/// Deterministic JSON text: 2-space indent, %.17g numbers, trailing newline.
inline std::string to_json_text(const Json& j) {
  std::ostringstream os;
  detail::write_json(os, j, 2, 0);
  os << '\n';
  return os.str();
}

inline Json quat_to_json(const Quat& q) { return Json::array({q.x0, q.x1, q.x2, q.x3}); }

inline Quat quat_from_json(const Json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 4) throw ParseError(context + ": expected a 4-tuple");
  double c[4];
  for (std::size_t n = 0; n < 4; ++n) {
    if (!j[n].is_number()) throw ParseError(context + ": component " + std::to_string(n) + " is not a number");
    c[n] = j[n].get<double>();
  }
  return {c[0], c[1], c[2], c[3]};
}

// ---------------------------------------------------------------------------
// Function specs

inline Json series_to_json(const SliceSeries& f) {
  Json a = Json::array();
  for (const Quat& c : f.coefficients()) a.push_back(quat_to_json(c));
  return a;
}

inline SliceSeries series_from_json(const Json& j, const std::string& context) {
  if (!j.is_array()) throw ParseError(context + ": expected a list of coefficient 4-tuples");
  std::vector<Quat> coeffs;
  for (std::size_t n = 0; n < j.size(); ++n) {
    coeffs.push_back(quat_from_json(j[n], context + ", coefficient " + std::to_string(n)));
  }
  if (coeffs.empty()) throw ValidationError(context + ": a series needs at least one coefficient");
  try {
    return SliceSeries(std::move(coeffs));
  } catch (const ValidationError& e) {
    throw ValidationError(context + ": " + e.what());
  }
}

/// Parses {"name": [[x0,x1,x2,x3], ...], ...} (coefficients by ascending degree).
inline Corpus parse_function_spec(const std::string& text, const std::string& origin = "<input>") {
  const Json j = detail::parse_json_text(text, origin);
  if (!j.is_object()) throw ParseError(origin + ":1: function spec must be a JSON object");
  Corpus corpus;
  for (const auto& [name, value] : j.items()) {
    SliceSeries f = series_from_json(value, origin + ": entry '" + name + "'");
    const std::size_t d = f.degree();
    corpus.push_back({name, std::move(f), "file", d});
  }
  return corpus;
}

inline Corpus load_function_spec(const std::string& path) {
  return parse_function_spec(detail::read_file(path), path);
}

inline Json corpus_to_json(const Corpus& corpus) {
  Json j = Json::object();
  for (const auto& e : corpus) j[e.name] = series_to_json(e.series);
  return j;
}

// ---------------------------------------------------------------------------
// Majorant specs

inline Json majorant_to_json(const Majorant& w) {
  return std::visit(
      [](const auto& n) -> Json {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Majorant::Power>) {
          return Json{{"kind", "power"}, {"alpha", n.alpha}, {"scale", n.scale}};
        } else if constexpr (std::is_same_v<N, Majorant::Sum>) {
          return Json{{"kind", "sum"}, {"terms", Json::array({majorant_to_json(*n.first), majorant_to_json(*n.second)})}};
        } else if constexpr (std::is_same_v<N, Majorant::Scaled>) {
          return Json{{"kind", "scaled"}, {"factor", n.factor}, {"base", majorant_to_json(*n.base)}};
        } else {
          return Json{{"kind", "tabulated"}, {"grid", n.grid}, {"values", n.values}};
        }
      },
      w.node());
}

inline Majorant parse_majorant(std::string_view text);

inline Majorant majorant_from_json(const Json& j) {
  if (j.is_string()) return parse_majorant(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("majorant spec needs a string \"kind\"");
  }
  const auto num = [&j](const char* key, double fallback, bool required) {
    if (!j.contains(key)) {
      if (required) throw ParseError(std::string("majorant spec is missing \"") + key + "\"");
      return fallback;
    }
    if (!j[key].is_number()) throw ParseError(std::string("majorant field \"") + key + "\" is not a number");
    return j[key].get<double>();
  };
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "power") return Majorant::power(num("alpha", 0.0, true), num("scale", 1.0, false));
  if (kind == "sum") {
    if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].size() != 2) {
      throw ParseError("sum majorant needs \"terms\" with two entries");
    }
    return Majorant::sum(majorant_from_json(j["terms"][0]), majorant_from_json(j["terms"][1]));
  }
  if (kind == "scaled") {
    if (!j.contains("base")) throw ParseError("scaled majorant needs \"base\"");
    return Majorant::scaled(num("factor", 0.0, true), majorant_from_json(j["base"]));
  }
  if (kind == "tabulated") {
    try {
      return Majorant::tabulated(j.at("grid").get<std::vector<double>>(), j.at("values").get<std::vector<double>>());
    } catch (const Json::exception& e) {
      throw ParseError(std::string("tabulated majorant: ") + e.what());
    }
  }
  throw ParseError("unknown majorant kind '" + kind + "'");
}

namespace detail {

inline double parse_number(std::string_view s, const std::string& context) {
  const std::string str(s);
  char* end = nullptr;
  const double v = std::strtod(str.c_str(), &end);
  if (str.empty() || end != str.c_str() + str.size()) {
    throw ParseError(context + ": '" + str + "' is not a number");
  }
  return v;
}

/// Splits "a;b" at the top-level separator.
inline std::pair<std::string_view, std::string_view> split_top(std::string_view s, char sep) {
  int depth = 0;
  for (std::size_t n = 0; n < s.size(); ++n) {
    if (s[n] == '(') ++depth;
    else if (s[n] == ')') --depth;
    else if (s[n] == sep && depth == 0) return {s.substr(0, n), s.substr(n + 1)};
  }
  throw ParseError("expected '" + std::string(1, sep) + "' in '" + std::string(s) + "'");
}

}  // namespace detail

/// "power:a", "power:a:c", "sum(x;y)", "scaled(c;x)".
inline Majorant parse_majorant(std::string_view text) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string_view s = trim(text);
  const std::string ctx = "majorant '" + std::string(s) + "'";
  const auto inner = [&](std::string_view prefix) {
    if (s.size() < prefix.size() + 1 || s.back() != ')') throw ParseError(ctx + ": missing ')'");
    return s.substr(prefix.size(), s.size() - prefix.size() - 1);
  };
  if (s.starts_with("power:")) {
    const std::string_view rest = s.substr(6);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) return Majorant::power(detail::parse_number(rest, ctx));
    return Majorant::power(detail::parse_number(rest.substr(0, colon), ctx),
                           detail::parse_number(rest.substr(colon + 1), ctx));
  }
  if (s.starts_with("sum(")) {
    const auto [a, b] = detail::split_top(inner("sum("), ';');
    return Majorant::sum(parse_majorant(a), parse_majorant(b));
  }
  if (s.starts_with("scaled(")) {
    const auto [c, b] = detail::split_top(inner("scaled("), ';');
    return Majorant::scaled(detail::parse_number(trim(c), ctx), parse_majorant(b));
  }
  throw ParseError(ctx + ": expected power:a[:c], sum(x;y) or scaled(c;x)");
}

// ---------------------------------------------------------------------------
// Small CLI value parsers

/// "x0,x1,x2,x3" (fewer components are padded with zeros).
inline Quat parse_quaternion(std::string_view text) {
  double c[4] = {0, 0, 0, 0};
  std::size_t n = 0;
  std::string_view rest = text;
  while (true) {
    if (n == 4) throw ParseError("quaternion '" + std::string(text) + "' has more than 4 components");
    const auto comma = rest.find(',');
    c[n++] = detail::parse_number(rest.substr(0, comma), "quaternion");
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return {c[0], c[1], c[2], c[3]};
}

/// "x,y,z" normalized to a unit imaginary.
inline ImaginaryUnit parse_unit(std::string_view text) {
  const Quat q = parse_quaternion("0," + std::string(text));
  if (q.x3 == 0.0 && std::count(text.begin(), text.end(), ',') != 2) {
    throw ParseError("imaginary unit '" + std::string(text) + "' needs three components");
  }
  try {
    return ImaginaryUnit::normalized(q.x1, q.x2, q.x3);
  } catch (const Error& e) {
    throw ParseError("imaginary unit '" + std::string(text) + "': " + e.what());
  }
}

/// "name=x,y,z" as used by --slice.
inline std::pair<std::string, ImaginaryUnit> parse_slice_assignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ParseError("slice '" + std::string(text) + "' must look like i=x,y,z");
  }
  return {std::string(text.substr(0, eq)), parse_unit(text.substr(eq + 1))};
}

inline std::vector<std::string> split_list(std::string_view text, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// ---------------------------------------------------------------------------
// Run configuration

enum class ReportFormat { json, csv };

inline ReportFormat parse_format(std::string_view s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv" || s == "csv-summary") return ReportFormat::csv;
  throw ParseError("unknown format '" + std::string(s) + "' (json or csv)");
}

inline const char* to_string(ReportFormat f) { return f == ReportFormat::json ? "json" : "csv"; }

struct RunConfig {
  std::string corpus = "builtin";  // "builtin" or a function-spec path
  SuiteSettings settings{};
  std::vector<std::string> suites = suite_names();
  std::string output;              // empty: standard output
  ReportFormat format = ReportFormat::json;

  Corpus load_corpus() const {
    return corpus == "builtin" ? default_corpus(settings.plan.seed) : load_function_spec(corpus);
  }
};

inline Json plan_to_json(const SamplePlan& p) {
  return Json{{"n_pairs", p.n_pairs},
              {"n_points", p.n_points},
              {"min_separation", p.min_separation},
              {"max_radius", p.max_radius},
              {"seed", p.seed}};
}

inline Json config_to_json(const RunConfig& c) {
  const SuiteSettings& s = c.settings;
  Json tol{{"window_K", s.window_K},          {"slice_slack", s.slice_slack},
           {"inclusion_tol", s.inclusion_tol}, {"exact_tol", s.exact_tol},
           {"intrinsic_tol", s.intrinsic_tol}, {"quadrature_tol", s.quadrature_tol},
           {"growth_slack", s.growth_slack},   {"zero_floor", s.zero_floor},
           {"cone_slack", s.cone_slack}};
  return Json{{"corpus", c.corpus},
              {"omega", majorant_to_json(s.omega)},
              {"omega1", majorant_to_json(s.omega1)},
              {"omega2", majorant_to_json(s.omega2)},
              {"slices", {{"i", quat_to_json(s.i)}, {"k", quat_to_json(s.k)}}},
              {"a", quat_to_json(s.a)},
              {"plan", plan_to_json(s.plan)},
              {"nodes", s.nodes},
              {"random_slice_pairs", s.random_slice_pairs},
              {"growth_points", s.growth_points},
              {"configurations", s.configurations},
              {"trend_degrees", s.trend_degrees},
              {"tolerances", tol},
              {"suites", c.suites},
              {"output", c.output},
              {"format", to_string(c.format)}};
}

namespace detail {

template <class T>
void read_field(const Json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j[key].get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("config field \"") + key + "\": " + e.what());
  }
}

inline ImaginaryUnit unit_from_json(const Json& j, const std::string& context) {
  const Quat q = quat_from_json(j, context);
  try {
    return ImaginaryUnit::from_quaternion(q);
  } catch (const Error& e) {
    throw ValidationError(context + ": " + e.what());
  }
}

}  // namespace detail

/// Fields absent from `j` keep their defaults.
inline RunConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  RunConfig c;
  SuiteSettings& s = c.settings;
  detail::read_field(j, "corpus", c.corpus);
  if (j.contains("omega")) s.omega = majorant_from_json(j["omega"]);
  if (j.contains("omega1")) s.omega1 = majorant_from_json(j["omega1"]);
  if (j.contains("omega2")) s.omega2 = majorant_from_json(j["omega2"]);
  if (j.contains("slices")) {
    const Json& sl = j["slices"];
    if (sl.contains("i")) s.i = detail::unit_from_json(sl["i"], "slices.i");
    if (sl.contains("k")) s.k = detail::unit_from_json(sl["k"], "slices.k");
  }
  if (j.contains("a")) s.a = quat_from_json(j["a"], "a");
  if (j.contains("plan")) {
    const Json& p = j["plan"];
    detail::read_field(p, "n_pairs", s.plan.n_pairs);
    detail::read_field(p, "n_points", s.plan.n_points);
    detail::read_field(p, "min_separation", s.plan.min_separation);
    detail::read_field(p, "max_radius", s.plan.max_radius);
    detail::read_field(p, "seed", s.plan.seed);
  }
  detail::read_field(j, "nodes", s.nodes);
  detail::read_field(j, "random_slice_pairs", s.random_slice_pairs);
  detail::read_field(j, "growth_points", s.growth_points);
  detail::read_field(j, "configurations", s.configurations);
  detail::read_field(j, "trend_degrees", s.trend_degrees);
  if (j.contains("tolerances")) {
    const Json& t = j["tolerances"];
    detail::read_field(t, "window_K", s.window_K);
    detail::read_field(t, "slice_slack", s.slice_slack);
    detail::read_field(t, "inclusion_tol", s.inclusion_tol);
    detail::read_field(t, "exact_tol", s.exact_tol);
    detail::read_field(t, "intrinsic_tol", s.intrinsic_tol);
    detail::read_field(t, "quadrature_tol", s.quadrature_tol);
    detail::read_field(t, "growth_slack", s.growth_slack);
    detail::read_field(t, "zero_floor", s.zero_floor);
    detail::read_field(t, "cone_slack", s.cone_slack);
  }
  detail::read_field(j, "suites", c.suites);
  for (const auto& name : c.suites) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
      throw ValidationError("unknown suite '" + name + "'");
    }
  }
  detail::read_field(j, "output", c.output);
  if (j.contains("format")) c.format = parse_format(j["format"].get<std::string>());
  s.plan.validate();
  return c;
}

inline RunConfig load_config(const std::string& path) {
  return config_from_json(detail::parse_json_text(detail::read_file(path), path));
}

// ---------------------------------------------------------------------------
// Reports

inline Json record_to_json(const FunctionRecord& r) {
  Json values = Json::object();
  for (const auto& [k, v] : r.values) values[k] = v;
  Json witnesses = Json::object();
  for (const auto& [k, q] : r.witnesses) witnesses[k] = quat_to_json(q);
  return Json{{"name", r.name},       {"pass", r.pass},         {"values", values},
              {"witnesses", witnesses}, {"samples", r.samples}, {"skipped", r.skipped},
              {"flags", r.flags}};
}

inline Json report_to_json(const VerificationReport& rep) {
  Json tol = Json::object();
  for (const auto& [k, v] : rep.tolerances) tol[k] = v;
  Json records = Json::array();
  for (const auto& r : rep.records) records.push_back(record_to_json(r));
  Json j{{"suite", rep.suite}, {"pass", rep.pass}, {"tolerances", tol}, {"records", records}};
  if (!rep.error.empty()) j["error"] = rep.error;
  return j;
}

/// The report document: seed, configuration, overall pass and the reports.
inline Json reports_document(const std::vector<VerificationReport>& reports, const RunConfig& config) {
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(report_to_json(r));
  return Json{{"seed", config.settings.plan.seed},
              {"config", config_to_json(config)},
              {"pass", all_pass(reports)},
              {"reports", list}};
}

namespace detail {

inline double number_or_nan(const Json& j) {
  return j.is_number() ? j.get<double>() : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace detail

inline FunctionRecord record_from_json(const Json& j) {
  FunctionRecord r;
  try {
    r.name = j.at("name").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    for (const auto& [k, v] : j.at("values").items()) r.values.emplace_back(k, detail::number_or_nan(v));
    for (const auto& [k, v] : j.at("witnesses").items()) r.witnesses.emplace_back(k, quat_from_json(v, k));
    r.samples = j.at("samples").get<std::size_t>();
    r.skipped = j.at("skipped").get<std::size_t>();
    r.flags = j.at("flags").get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("report record: ") + e.what());
  }
  return r;
}

inline VerificationReport report_from_json(const Json& j) {
  VerificationReport rep;
  try {
    rep.suite = j.at("suite").get<std::string>();
    rep.pass = j.at("pass").get<bool>();
    for (const auto& [k, v] : j.at("tolerances").items()) rep.tolerances.emplace_back(k, detail::number_or_nan(v));
    for (const auto& r : j.at("records")) rep.records.push_back(record_from_json(r));
    if (j.contains("error")) rep.error = j["error"].get<std::string>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  return rep;
}

/// Reads a report document written by emit_report in JSON form.
inline std::pair<std::vector<VerificationReport>, RunConfig> load_reports(const std::string& path) {
  const Json doc = detail::parse_json_text(detail::read_file(path), path);
  if (!doc.is_object() || !doc.contains("reports")) throw ParseError(path + ": not a report document");
  std::vector<VerificationReport> reports;
  for (const auto& r : doc["reports"]) reports.push_back(report_from_json(r));
  RunConfig config = doc.contains("config") ? config_from_json(doc["config"]) : RunConfig{};
  return {std::move(reports), std::move(config)};
}

/// Value shown in the CSV summary for each suite.
inline const char* main_constant(const std::string& suite) {
  if (suite == "inclusion_chain") return "factor";
  if (suite == "algebraic_closure") return "sum_bound_ratio";
  if (suite == "intrinsic_invariance") return "difference";
  if (suite == "slice_independence") return "max_ratio";
  if (suite == "modulus_membership") return "violations";
  if (suite == "norm_equivalences") return "spread";
  if (suite == "derivative_characterizations") return "ratio_full";
  if (suite == "poisson_properties") return "rotation_residual";
  if (suite == "poisson_characterization") return "C_def";
  if (suite == "cone_corollary") return "worst_excess_same_sign";
  return "";
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace detail

inline std::string reports_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "suite,function,pass,constant,value,witness\n";
  for (const auto& rep : reports) {
    if (rep.records.empty()) {
      os << detail::csv_field(rep.suite) << ",," << (rep.pass ? "true" : "false") << ",error,,"
         << detail::csv_field(rep.error) << '\n';
      continue;
    }
    const std::string key = main_constant(rep.suite);
    for (const auto& r : rep.records) {
      std::string value;
      if (!key.empty() && r.has(key)) value = detail::format_double(r.get(key));
      std::string witness;
      if (!r.witnesses.empty()) {
        const Quat& q = r.witnesses.front().second;
        witness = detail::format_double(q.x0) + " " + detail::format_double(q.x1) + " " +
                  detail::format_double(q.x2) + " " + detail::format_double(q.x3);
      }
      os << detail::csv_field(rep.suite) << ',' << detail::csv_field(r.name) << ','
         << (r.pass ? "true" : "false") << ',' << key << ',' << value << ',' << witness << '\n';
    }
  }
  return os.str();
}

inline std::string render_reports(const std::vector<VerificationReport>& reports, const RunConfig& config,
                                  ReportFormat format) {
  return format == ReportFormat::json ? to_json_text(reports_document(reports, config)) : reports_csv(reports);
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot write " + path);
  out << text;
  if (!out) throw IOError("write failed for " + path);
}

/// Writes the reports; returns the exit status (0 iff every suite passes).
inline int emit_report(const std::vector<VerificationReport>& reports, const std::string& path,
                       ReportFormat format, const RunConfig& config = {}) {
  write_text(path, render_reports(reports, config, format));
  return all_pass(reports) ? 0 : 1;
}

}  // namespace slicereg
