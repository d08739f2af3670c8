// Command-line front end: evaluation, *-algebra, majorant certificates,
// norm estimates and verification suites.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slicereg.hpp"

namespace {

using namespace slicereg;

struct Globals {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> pairs;
  std::optional<std::size_t> points;
  std::optional<int> nodes;
  std::vector<std::string> slices;
  std::string omega;
  std::string omega2;
  std::string suites;
  std::string corpus;
  std::string out;
  std::string format;
};

RunConfig resolve_config(const Globals& g) {
  RunConfig c;
  std::string path = g.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("SLICEREG_CONFIG")) path = env;
  }
  if (!path.empty()) c = load_config(path);
  SuiteSettings& s = c.settings;
  if (g.seed) s.plan.seed = *g.seed;
  if (g.pairs) s.plan.n_pairs = *g.pairs;
  if (g.points) s.plan.n_points = *g.points;
  if (g.nodes) s.nodes = *g.nodes;
  for (const auto& text : g.slices) {
    const auto [name, unit] = parse_slice_assignment(text);
    if (name == "i") s.i = unit;
    else if (name == "k") s.k = unit;
    else throw ParseError("unknown slice name '" + name + "' (use i or k)");
  }
  if (!g.omega.empty()) {
    s.omega = parse_majorant(g.omega);
    s.omega1 = s.omega;
    s.omega2 = s.omega;
  }
  if (!g.omega2.empty()) s.omega2 = parse_majorant(g.omega2);
  if (!g.suites.empty()) {
    c.suites = split_list(g.suites);
    for (const auto& name : c.suites) {
      if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
        throw ValidationError("unknown suite '" + name + "'");
      }
    }
  }
  if (!g.corpus.empty()) c.corpus = g.corpus;
  if (!g.out.empty()) c.output = g.out;
  if (!g.format.empty()) c.format = parse_format(g.format);
  s.plan.validate();
  return c;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else write_text(path, text);
}

const CorpusEntry& find_function(const Corpus& corpus, const std::string& name) {
  for (const auto& e : corpus) {
    if (e.name == name) return e;
  }
  throw ValidationError("no function named '" + name + "' in the corpus");
}

Json estimate_json(const NormEstimate& e) {
  return Json{{"value", e.value},
              {"argmax", Json::array({quat_to_json(e.argmax.first), quat_to_json(e.argmax.second)})},
              {"samples_used", e.samples_used}};
}

int run_eval(const RunConfig& c, const std::string& name, const std::vector<std::string>& points) {
  const Corpus corpus = c.load_corpus();
  Json out = Json::array();
  for (const auto& e : corpus) {
    if (!name.empty() && e.name != name) continue;
    Json values = Json::array();
    for (const auto& p : points) {
      const Quat q = parse_quaternion(p);
      values.push_back(Json{{"q", quat_to_json(q)}, {"value", quat_to_json(evaluate(e.series, q))}});
    }
    out.push_back(Json{{"function", e.name}, {"points", values}});
  }
  if (!name.empty() && out.empty()) find_function(corpus, name);
  write_output(c.output, to_json_text(out));
  return 0;
}

int run_star(const RunConfig& c, const std::string& lhs, const std::string& rhs, const std::string& inverse,
             std::size_t degree) {
  const Corpus corpus = c.load_corpus();
  Corpus result;
  if (!inverse.empty()) {
    const auto& f = find_function(corpus, inverse);
    result.push_back({inverse + "_inverse", star_inverse(f.series, degree), "derived", degree});
  } else {
    if (lhs.empty() || rhs.empty()) throw ValidationError("star needs --lhs and --rhs, or --inverse");
    const auto& f = find_function(corpus, lhs);
    const auto& g = find_function(corpus, rhs);
    const SliceSeries p = star_product(f.series, g.series);
    result.push_back({lhs + "_star_" + rhs, p, "derived", p.degree()});
  }
  write_output(c.output, to_json_text(corpus_to_json(result)));
  return 0;
}

int run_majorant_check(const RunConfig& c) {
  const RegularityCertificate cert = check_regular(c.settings.omega);
  Json out{{"majorant", c.settings.omega.describe()},
           {"is_regular", cert.is_regular},
           {"verdict", to_string(cert.verdict)},
           {"empirical_C", cert.empirical_C},
           {"worst_x", cert.worst_x},
           {"grid_size", cert.grid_size},
           {"level_maxima", cert.level_maxima}};
  write_output(c.output, to_json_text(out));
  return cert.is_regular ? 0 : 1;
}

int run_norm(const RunConfig& c, const std::string& estimator, const std::string& name) {
  const Corpus corpus = c.load_corpus();
  const SuiteSettings& s = c.settings;
  Json out = Json::array();
  for (const auto& e : corpus) {
    if (!name.empty() && e.name != name) continue;
    Json j{{"function", e.name}, {"estimator", estimator}};
    if (estimator == "slice") j["estimate"] = estimate_json(slice_norm(e.series, s.omega, s.i, s.plan));
    else if (estimator == "component")
      j["estimate"] = estimate_json(component_norm(e.series, s.omega1, s.omega2, s.i, s.plan));
    else if (estimator == "global") j["estimate"] = estimate_json(global_norm(e.series, s.omega, s.plan));
    else if (estimator == "boundary") j["estimate"] = estimate_json(boundary_norm(e.series, s.omega, s.i, s.plan));
    else if (estimator == "boundary-modulus")
      j["estimate"] = estimate_json(boundary_modulus_norm(e.series, s.omega, s.i, s.plan));
    else if (estimator == "derivative")
      j["estimate"] = estimate_json(derivative_ratio(e.series, s.omega, s.i, DerivativeMode::full, s.plan));
    else if (estimator == "global-derivative")
      j["estimate"] = estimate_json(global_derivative_ratio(e.series, s.omega, s.plan));
    else if (estimator == "seminorms") {
      const Splitting sp = split(e.series, s.i);
      for (const auto& [label, comp] : {std::pair{"F", &sp.F}, std::pair{"G", &sp.G}}) {
        const Seminorms n = seminorms_N(*comp, s.omega, s.i, s.plan, s.nodes);
        j[label] = Json{{"N1", n.N1}, {"N2", n.N2}, {"N3", n.N3}};
      }
    } else {
      throw ValidationError("unknown estimator '" + estimator + "'");
    }
    out.push_back(j);
  }
  if (!name.empty() && out.empty()) find_function(corpus, name);
  write_output(c.output, to_json_text(out));
  return 0;
}

int run_verify(const RunConfig& c) {
  const auto reports = run_suites(c.suites, c.load_corpus(), c.settings);
  write_output(c.output, render_reports(reports, c, c.format));
  for (const auto& r : reports) {
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.suite << (r.error.empty() ? "" : ": " + r.error) << '\n';
  }
  return all_pass(reports) ? 0 : 1;
}

int run_report(const std::string& input, const std::string& out, const std::string& format) {
  const auto [reports, config] = load_reports(input);
  write_output(out, render_reports(reports, config, format.empty() ? ReportFormat::csv : parse_format(format)));
  return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice regular functions: Lipschitz-type norms and property suites"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_path, "JSON run configuration (default: $SLICEREG_CONFIG)");
  app.add_option("--seed", g.seed, "Sampling seed");
  app.add_option("--pairs", g.pairs, "Number of sampled pairs");
  app.add_option("--points", g.points, "Number of sampled points");
  app.add_option("--nodes", g.nodes, "Poisson quadrature nodes");
  app.add_option("--slice", g.slices, "Slice unit, e.g. i=0,0,1 or k=1,0,0");
  app.add_option("--omega", g.omega, "Majorant, e.g. power:0.5 or sum(power:0.5;power:0.25)");
  app.add_option("--omega2", g.omega2, "Second majorant for two-majorant norms");
  app.add_option("--corpus", g.corpus, "Function-spec file (default: built-in corpus)");
  app.add_option("--out", g.out, "Output path (default: standard output)");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv", "csv-summary"}));

  std::string fn_name;
  std::vector<std::string> eval_points;
  auto* eval = app.add_subcommand("eval", "Evaluate corpus functions at points");
  eval->add_option("--function", fn_name, "Function name (default: all)");
  eval->add_option("--point", eval_points, "Point x0,x1,x2,x3")->required();

  std::string lhs, rhs, inverse;
  std::size_t degree = 16;
  auto* star = app.add_subcommand("star", "*-product or *-inverse, written as a function spec");
  star->add_option("--lhs", lhs, "Left factor");
  star->add_option("--rhs", rhs, "Right factor");
  star->add_option("--inverse", inverse, "Function to invert");
  star->add_option("--degree", degree, "Truncation degree of the inverse");

  auto* majorant = app.add_subcommand("majorant-check", "Regularity certificate for --omega");

  std::string estimator = "slice";
  auto* norm_cmd = app.add_subcommand("norm", "Sampled norm or seminorm estimate");
  norm_cmd->add_option("--estimator", estimator, "slice, component, global, boundary, boundary-modulus, "
                                                 "derivative, global-derivative or seminorms");
  norm_cmd->add_option("--function", fn_name, "Function name (default: all)");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", g.suites, "Comma-separated suite names (default: all)");

  std::string report_in;
  auto* report = app.add_subcommand("report", "Re-render a JSON report document");
  report->add_option("--in", report_in, "JSON report document")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*report) return run_report(report_in, g.out, g.format);
    const RunConfig config = resolve_config(g);
    if (*eval) return run_eval(config, fn_name, eval_points);
    if (*star) return run_star(config, lhs, rhs, inverse, degree);
    if (*majorant) return run_majorant_check(config);
    if (*norm_cmd) return run_norm(config, estimator, fn_name);
    if (*verify) return run_verify(config);
  } catch (const slicereg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
