#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "chatelet_tools/batch.hpp"
#include "chatelet_tools/report.hpp"
#include "chatelet_tools/repro.hpp"
#include "chatelet_tools/selftest.hpp"
#include "chatelet_tools/surface_io.hpp"
#include "corpus.hpp"

using namespace chatelet;
using namespace chatelet::tools;

namespace {

std::string rejection(const std::string& text) {
  try {
    (void)build_surface(parse_input_text(text));
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("chatelet_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(SurfaceInput, ParsesCanonically) {
  const SurfaceInput s = parse_input_text(R"({"a": "5", "c": "6/10", "P": ["1", "0", 7, "0", "5"]})");
  EXPECT_EQ(s.c, "3/5");
  EXPECT_EQ(s.P[2], "7");
  EXPECT_EQ(build_surface(s).to_string(), chatelet::testing::counterexample().to_string());
}

TEST(SurfaceInput, RejectionsNameTheInvariant) {
  EXPECT_EQ(rejection(R"({"a": "4", "c": "1", "P": ["1", "0", "0", "0", "1"]})"), "a is a rational square");
  EXPECT_EQ(rejection(R"({"a": "3", "c": "1", "P": ["1", "0", "0", "1", "0"]})"), "degree-4 quartic required");
  EXPECT_EQ(rejection(R"({"a": "3", "c": "0", "P": ["1", "0", "0", "0", "1"]})"), "c must be nonzero");
  EXPECT_EQ(rejection(R"({"a": "3", "c": "1", "P": ["0", "0", "1", "0", "1"]})"), "P must be squarefree");
  EXPECT_NE(rejection(R"({"a": "3", "c": "1", "P": ["1", "0", "1"]})").find("degree-4 quartic required"),
            std::string::npos);
  EXPECT_NE(rejection(R"({"a": "3", "c": "1"})").find("missing key 'P'"), std::string::npos);
  EXPECT_NE(rejection(R"({"a": "x", "c": "1", "P": ["1", "0", "0", "0", "1"]})").find("a:"), std::string::npos);
  EXPECT_NE(rejection("not json").find("malformed"), std::string::npos);
}

TEST(SurfaceInput, EchoRoundTrips) {
  for (const auto& [name, X] : chatelet::testing::load_corpus()) {
    const SurfaceInput input = input_of(X);
    const Json doc = document("analyze", input);
    EXPECT_EQ(parse_input(nlohmann::json::parse(doc["surface"].dump())), input) << name;
  }
}

TEST(Report, JsonIsDeterministic) {
  const ChateletSurface X = chatelet::testing::counterexample();
  const std::string a = to_json(analyze(X)).dump();
  const std::string b = to_json(analyze(X)).dump();
  EXPECT_EQ(a, b);
  const Json j = to_json(bm_verdict(X, Field{29}));
  EXPECT_EQ(j["verdict"], "obstruction");
  EXPECT_EQ(j["brauer"]["generators"][0]["symbol"], "(5, t^2 + (7+sqrt(29))/10)");
}

TEST(Batch, EmptyDirectoryGivesHeaderOnly) {
  const auto dir = scratch_dir("empty");
  const std::string csv = batch_csv(dir);
  EXPECT_EQ(csv, std::string(kBatchFormat) + "\nfile,pattern,galois,brauer_Q,adelic_Q,blocking,problematic,verdicts,flags,error\n");
}

TEST(Batch, CorpusRows) {
  const std::string csv = batch_csv(CHATELET_CORPUS_DIR);
  EXPECT_NE(csv.find("p4_counterexample_sqrt29.surface,4,D4,0,empty,3,29,29:obstruction,php_failure_over=29,"),
            std::string::npos);
  EXPECT_NE(csv.find("p4_v4_t4_plus_1.surface,4,V4,0,nonempty,,-1;2;-2,"), std::string::npos);
  EXPECT_EQ(csv, batch_csv(CHATELET_CORPUS_DIR));
}

TEST(Batch, ErrorsAreRecorded) {
  const auto dir = scratch_dir("errors");
  std::ofstream(dir / "a_bad.surface") << R"({"a": "4", "c": "1", "P": ["1", "0", "0", "0", "1"]})";
  std::ofstream(dir / "b_good.surface") << R"({"a": "5", "c": "3/5", "P": ["1", "0", "7", "0", "5"]})";
  const std::string csv = batch_csv(dir);
  EXPECT_NE(csv.find("a_bad.surface,,,,,,,,,a is a rational square\n"), std::string::npos);
  EXPECT_NE(csv.find("b_good.surface,4,D4"), std::string::npos);
  EXPECT_LT(csv.find("a_bad"), csv.find("b_good"));
}

TEST(Repro, AllStepsHold) {
  const ReproResult r = reproduce_counterexample();
  for (const auto& s : r.steps) EXPECT_TRUE(s.ok) << s.name;
  EXPECT_TRUE(r.ok());
}

TEST(Repro, CorruptedSymbolsFail) {
  const ReproResult r = reproduce_counterexample(ReproOptions{true});
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure()->name, "(5, 10) is nonsplit at 5");
}

TEST(Selftest, PairsFlagIsExact) {
  SelftestResult r;
  product_formula_sweep(SelftestOptions{37, 5}, r);
  EXPECT_EQ(r.product_formula_pairs, 37);
  EXPECT_TRUE(r.ok());
}
