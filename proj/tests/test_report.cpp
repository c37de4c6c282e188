#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracle.hpp"

using namespace ehrkit;
using ehrkit::testing::corpus_dir;

namespace {

PolytopeFile load(const std::string& stem) { return load_polytope(corpus_dir() + "/" + stem + ".json"); }

}  // namespace

TEST(Report, P2Summary) {
  const json r = analyze(load("p2"));
  EXPECT_EQ(r["codenominator"], 2);
  EXPECT_EQ(r["series"]["zrational"]["m"], 3);
  EXPECT_EQ(r["series"]["zrational"]["numerator"].dump(), R"({"0":"1","1/2":"1","1":"1"})");
  EXPECT_EQ(r["gorenstein"]["r"]["gorenstein_point"].dump(), "[4,1]");
  EXPECT_TRUE(r["htilde"].is_null());
  EXPECT_TRUE(r["decomposition"].is_null());
}

TEST(Report, SeriesRoundTripAgainstCounts) {
  // every reported numerator expands back to the sampled counts
  for (const char* stem : {"p1", "delta_p3", "nabla"}) {
    const PolytopeFile f = load(stem);
    const json r = analyze(f);
    for (const auto& [key, s] : r["series"].items()) {
      const RationalSeriesForm form{frac_poly_from_json(s["numerator"]), parse_rational(s["pole_exponent"].get<std::string>()),
                                    s["pole_order"].get<int>()};
      const std::int64_t g = s["gamma"];
      const auto e = series_expand(form, Rational(20, g));
      const auto counts = ehrkit::testing::brute_counts(f.polytope, g, 20);
      for (std::int64_t n = 0; n <= 20; ++n) {
        auto it = e.find(Rational(n, g));
        EXPECT_EQ(it == e.end() ? Rational(0) : it->second, counts[static_cast<std::size_t>(n)]) << stem << " " << key;
      }
    }
  }
}

TEST(Report, Deterministic) {
  EXPECT_EQ(analyze(load("delta_p3")).dump(), analyze(load("delta_p3")).dump());
}

TEST(Report, GoldenDiff) {
  const json expected = json::parse(R"({"a": 1, "b": {"c": "x"}})");
  EXPECT_TRUE(golden_diff(expected, json::parse(R"({"a": 1, "b": {"c": "x", "d": 2}, "e": 3})")).empty());
  const auto diff = golden_diff(expected, json::parse(R"({"a": 2, "b": {}})"));
  ASSERT_EQ(diff.size(), 2u);
  EXPECT_NE(diff[0].find("a: expected 1, got 2"), std::string::npos);
  EXPECT_NE(diff[1].find("b.c: missing"), std::string::npos);
}

TEST(Report, CorpusRunner) {
  namespace fs = std::filesystem;
  std::ostringstream out;
  EXPECT_EQ(run_corpus(corpus_dir(), out), 0) << out.str();

  const fs::path tmp = fs::temp_directory_path() / "ehrkit_corpus_test";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  std::ostringstream empty;
  EXPECT_EQ(run_corpus(tmp.string(), empty), 0);
  EXPECT_NE(empty.str().find("0 entries, 0 failed"), std::string::npos);

  fs::copy_file(corpus_dir() + "/p2.json", tmp / "p2.json");
  std::ofstream(tmp / "p2.golden.json") << R"({"expect": {"codenominator": 3}})";
  std::ostringstream bad;
  EXPECT_EQ(run_corpus(tmp.string(), bad), 1);
  EXPECT_NE(bad.str().find("codenominator: expected 3, got 2"), std::string::npos);
  fs::remove_all(tmp);
}
