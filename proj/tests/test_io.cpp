#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "slicereg/io.hpp"

using namespace slicereg;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("slicereg_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

VerificationReport sample_report(bool pass) {
  VerificationReport rep;
  rep.suite = "inclusion_chain";
  FunctionRecord r;
  r.name = "identity";
  r.set("factor", 0.1 + 0.2);
  r.set("C3", std::numeric_limits<double>::infinity());
  r.witness("global.x", Quat(0.5, -0.25, 0.0, 1.0 / 3.0));
  r.samples = 42;
  r.skipped = 1;
  r.flags = {"intrinsic"};
  r.require(pass, "global_exceeds_6C3");
  rep.records.push_back(r);
  rep.tolerances = {{"inclusion_tol", 0.02}};
  rep.finalize();
  return rep;
}

}  // namespace

TEST(FunctionSpec, IdentityEntry) {
  const Corpus c = parse_function_spec(R"({"id": [[0,0,0,0],[1,0,0,0]]})");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].name, "id");
  const Quat q{0.1, 0.2, -0.3, 0.4};
  EXPECT_EQ(evaluate(c[0].series, q), q);
}

TEST(FunctionSpec, PreservesEntryOrder) {
  const Corpus c = parse_function_spec(R"({"zeta": [[1,0,0,0]], "alpha": [[0,1,0,0]]})");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].name, "zeta");
  EXPECT_EQ(c[1].name, "alpha");
}

TEST(FunctionSpec, EmptyListIsValidationError) {
  EXPECT_THROW(parse_function_spec(R"({"f": []})"), ValidationError);
}

TEST(FunctionSpec, NonNumericFieldIsParseError) {
  try {
    parse_function_spec("{\n  \"f\": [[0,0,0,0],\n        [1,\"x\",0,0]]\n}", "spec.json");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("entry 'f'"), std::string::npos) << msg;
    EXPECT_NE(msg.find("coefficient 1"), std::string::npos) << msg;
  }
}

TEST(FunctionSpec, MalformedJsonReportsLine) {
  try {
    parse_function_spec("{\n  \"f\": [[0,0,0,0],\n  oops\n}", "spec.json");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("spec.json:3"), std::string::npos) << e.what();
  }
}

TEST(FunctionSpec, WrongShapes) {
  EXPECT_THROW(parse_function_spec("[1,2]"), ParseError);
  EXPECT_THROW(parse_function_spec(R"({"f": [[0,0,0]]})"), ParseError);
  EXPECT_THROW(parse_function_spec(R"({"f": 3})"), ParseError);
}

TEST(FunctionSpec, LoadMissingFileIsIOError) {
  EXPECT_THROW(load_function_spec("/nonexistent/functions.json"), IOError);
}

TEST(FunctionSpec, CorpusRoundTrip) {
  const Corpus c = default_corpus();
  const Corpus back = parse_function_spec(to_json_text(corpus_to_json(c)));
  ASSERT_EQ(back.size(), c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    EXPECT_EQ(back[k].name, c[k].name);
    EXPECT_EQ(back[k].series, c[k].series) << c[k].name;
  }
}

TEST(JsonText, SeventeenDigitsAndNull) {
  EXPECT_EQ(detail::format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(detail::format_double(std::numeric_limits<double>::infinity()), "null");
  EXPECT_EQ(detail::format_double(std::nan("")), "null");
  EXPECT_EQ(to_json_text(Json{{"a", Json::array({1, 2})}}), "{\n  \"a\": [1, 2]\n}\n");
}

TEST(MajorantSpec, StringForms) {
  EXPECT_EQ(parse_majorant("power:0.5").describe(), "power:0.5");
  EXPECT_EQ(parse_majorant(" power:0.25:3 ").describe(), "power:0.25:3");
  EXPECT_EQ(parse_majorant("sum(power:0.5;power:0.25)").describe(), "sum(power:0.5;power:0.25)");
  EXPECT_EQ(parse_majorant("scaled(2;sum(power:0.5;power:1))").describe(), "scaled(2;sum(power:0.5;power:1))");
  EXPECT_THROW(parse_majorant("power:abc"), ParseError);
  EXPECT_THROW(parse_majorant("sum(power:0.5)"), ParseError);
  EXPECT_THROW(parse_majorant("scaled(2;power:0.5"), ParseError);
  EXPECT_THROW(parse_majorant("log:1"), ParseError);
  EXPECT_THROW(parse_majorant("power:0"), DomainError);
}

TEST(MajorantSpec, JsonRoundTrip) {
  const std::vector<Majorant> cases{
      Majorant::power(0.5), Majorant::power(0.25, 3.0),
      Majorant::sum(Majorant::power(0.5), Majorant::scaled(2.0, Majorant::power(0.75))),
      Majorant::tabulated({0.0, 0.5, 2.0}, {0.0, 0.7, 1.4})};
  for (const auto& w : cases) {
    const Majorant back = majorant_from_json(detail::parse_json_text(to_json_text(majorant_to_json(w)), "m"));
    EXPECT_EQ(back.describe(), w.describe());
    for (double t : {0.0, 0.1, 0.5, 1.3, 2.0}) EXPECT_EQ(back(t), w(t)) << w.describe();
  }
  EXPECT_EQ(majorant_from_json(Json("power:0.5")).describe(), "power:0.5");
  EXPECT_THROW(majorant_from_json(Json{{"kind", "power"}}), ParseError);
  EXPECT_THROW(majorant_from_json(Json{{"kind", "cubic"}}), ParseError);
}

TEST(CliValues, QuaternionsUnitsAndLists) {
  EXPECT_EQ(parse_quaternion("1,2,3,4"), Quat(1, 2, 3, 4));
  EXPECT_EQ(parse_quaternion("0.5"), Quat{0.5});
  EXPECT_EQ(parse_quaternion("0,1"), kE1);
  EXPECT_THROW(parse_quaternion("1,2,3,4,5"), ParseError);
  EXPECT_THROW(parse_quaternion("1,,2"), ParseError);
  EXPECT_EQ(parse_unit("0,0,2").as_quaternion(), kE3);
  EXPECT_THROW(parse_unit("0,0,0"), ParseError);
  EXPECT_THROW(parse_unit("1,0"), ParseError);
  const auto [name, unit] = parse_slice_assignment("k=0,1,0");
  EXPECT_EQ(name, "k");
  EXPECT_EQ(unit.as_quaternion(), kE2);
  EXPECT_THROW(parse_slice_assignment("0,1,0"), ParseError);
  EXPECT_EQ(split_list("a,b,,c"), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(parse_format("csv-summary"), ReportFormat::csv);
  EXPECT_EQ(parse_format("json"), ReportFormat::json);
  EXPECT_THROW(parse_format("xml"), ParseError);
}

TEST(Config, DefaultsRoundTrip) {
  const RunConfig c;
  const std::string text = to_json_text(config_to_json(c));
  const RunConfig back = config_from_json(detail::parse_json_text(text, "config"));
  EXPECT_EQ(to_json_text(config_to_json(back)), text);
  EXPECT_EQ(back.settings.plan, c.settings.plan);
  EXPECT_EQ(back.suites, suite_names());
}

TEST(Config, CustomValuesRoundTrip) {
  RunConfig c;
  c.corpus = "functions.json";
  c.settings.omega = Majorant::sum(Majorant::power(0.5), Majorant::power(0.25, 2.0));
  c.settings.omega2 = Majorant::power(0.3);
  c.settings.i = ImaginaryUnit::normalized(1.0, 2.0, 3.0);
  c.settings.a = Quat(0.1, 0.2, 0.3, 0.4);
  c.settings.plan.n_pairs = 1234;
  c.settings.plan.seed = 99;
  c.settings.plan.min_separation = 1.0 / 3.0;
  c.settings.nodes = 2048;
  c.settings.window_K = 7.5;
  c.settings.trend_degrees = {4, 8};
  c.suites = {"cone_corollary", "inclusion_chain"};
  c.format = ReportFormat::csv;
  const std::string text = to_json_text(config_to_json(c));
  const RunConfig back = config_from_json(detail::parse_json_text(text, "config"));
  EXPECT_EQ(to_json_text(config_to_json(back)), text);
  EXPECT_EQ(back.settings.plan, c.settings.plan);
  EXPECT_EQ(back.settings.i, c.settings.i);
  EXPECT_EQ(back.settings.a, c.settings.a);
  EXPECT_EQ(back.settings.omega.describe(), c.settings.omega.describe());
  EXPECT_EQ(back.suites, c.suites);
}

TEST(Config, PartialAndInvalid) {
  const RunConfig c = config_from_json(Json{{"plan", {{"n_pairs", 50}}}});
  EXPECT_EQ(c.settings.plan.n_pairs, 50u);
  EXPECT_EQ(c.settings.plan.n_points, SamplePlan{}.n_points);
  EXPECT_THROW(config_from_json(Json{{"suites", {"bogus"}}}), ValidationError);
  EXPECT_THROW(config_from_json(Json{{"plan", {{"n_pairs", 0}}}}), DegeneratePlan);
  EXPECT_THROW(config_from_json(Json{{"plan", {{"n_pairs", "many"}}}}), ParseError);
  EXPECT_THROW(config_from_json(Json{{"slices", {{"i", {0, 0, 0, 0}}}}}), ValidationError);
  EXPECT_THROW(config_from_json(Json::array()), ParseError);
}

TEST(Config, LoadFromFile) {
  TempDir dir;
  RunConfig c;
  c.settings.plan.seed = 7;
  write_text(dir.file("config.json"), to_json_text(config_to_json(c)));
  EXPECT_EQ(load_config(dir.file("config.json")).settings.plan.seed, 7u);
  EXPECT_THROW(load_config(dir.file("missing.json")), IOError);
}

TEST(Reports, EmptyListIsValidDocument) {
  TempDir dir;
  EXPECT_EQ(emit_report({}, dir.file("r.json"), ReportFormat::json), 0);
  const Json doc = detail::parse_json_text(slurp(dir.file("r.json")), "r.json");
  EXPECT_TRUE(doc["pass"].get<bool>());
  EXPECT_TRUE(doc["reports"].empty());
  EXPECT_EQ(doc["seed"].get<std::uint64_t>(), SamplePlan{}.seed);
  EXPECT_EQ(emit_report({}, dir.file("r.csv"), ReportFormat::csv), 0);
  EXPECT_EQ(slurp(dir.file("r.csv")), "suite,function,pass,constant,value,witness\n");
}

TEST(Reports, FailingSuiteGivesExitOneAndRow) {
  TempDir dir;
  EXPECT_EQ(emit_report({sample_report(true), sample_report(false)}, dir.file("r.csv"), ReportFormat::csv), 1);
  const std::string csv = slurp(dir.file("r.csv"));
  EXPECT_NE(csv.find("inclusion_chain,identity,false,factor,0.30000000000000004,0.5 -0.25 0 0.33333333333333331"),
            std::string::npos)
      << csv;
  EXPECT_NE(csv.find("inclusion_chain,identity,true,"), std::string::npos);
}

TEST(Reports, ErrorReportRow) {
  VerificationReport rep;
  rep.suite = "cone_corollary";
  rep.error = "boom, again";
  rep.finalize();
  EXPECT_EQ(reports_csv({rep}),
            "suite,function,pass,constant,value,witness\ncone_corollary,,false,error,,\"boom, again\"\n");
}

TEST(Reports, JsonMirrorsFieldsAndReloads) {
  TempDir dir;
  RunConfig config;
  config.settings.plan.seed = 5;
  const std::vector<VerificationReport> reports{sample_report(false)};
  emit_report(reports, dir.file("r.json"), ReportFormat::json, config);
  const std::string text = slurp(dir.file("r.json"));
  const Json doc = detail::parse_json_text(text, "r.json");
  EXPECT_EQ(doc["seed"].get<std::uint64_t>(), 5u);
  EXPECT_FALSE(doc["pass"].get<bool>());
  const Json& rec = doc["reports"][0]["records"][0];
  EXPECT_EQ(rec["name"], "identity");
  EXPECT_TRUE(rec["values"]["C3"].is_null());
  EXPECT_EQ(rec["samples"], 42);

  const auto [back, back_config] = load_reports(dir.file("r.json"));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back_config.settings.plan.seed, 5u);
  EXPECT_FALSE(back[0].pass);
  const FunctionRecord& r = back[0].records[0];
  EXPECT_EQ(r.get("factor"), 0.1 + 0.2);
  EXPECT_TRUE(std::isnan(r.get("C3")));
  EXPECT_EQ(r.witnesses[0].second, reports[0].records[0].witnesses[0].second);
  EXPECT_EQ(r.flags, reports[0].records[0].flags);
  EXPECT_EQ(render_reports(back, back_config, ReportFormat::json), text);
}

TEST(Reports, SameSeedGivesIdenticalFiles) {
  TempDir dir;
  RunConfig config;
  config.settings.plan.n_pairs = 500;
  config.settings.plan.n_points = 100;
  const Corpus corpus = config.load_corpus();
  const std::vector<std::string> suites{"inclusion_chain", "modulus_membership"};
  emit_report(run_suites(suites, corpus, config.settings), dir.file("a.json"), ReportFormat::json, config);
  emit_report(run_suites(suites, corpus, config.settings), dir.file("b.json"), ReportFormat::json, config);
  EXPECT_EQ(slurp(dir.file("a.json")), slurp(dir.file("b.json")));
}

TEST(Reports, UnwritablePathIsIOError) {
  EXPECT_THROW(emit_report({}, "/nonexistent/dir/r.json", ReportFormat::json), IOError);
}
