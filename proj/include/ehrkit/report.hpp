#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ehrkit/decomposition.hpp"
#include "ehrkit/gorenstein.hpp"

namespace ehrkit {

struct AnalysisOptions {
  // Scale for the zrational series; minimal when absent.
  std::optional<std::int64_t> m;
  CountOptions count;
};

// Full report. Sections whose hypotheses fail (h~, decompositions) are null.
json analyze(const PolytopeFile& file, const AnalysisOptions& opts = {});

std::string render_text(const json& report);

json to_json(const QuasiPolynomial& q);
json to_json(const PeriodReport& p);

// Paths (e.g. "series.zrational.m") where `expected` is not a subset of
// `actual`, with both values.
std::vector<std::string> golden_diff(const json& expected, const json& actual, const std::string& path = "");

// Runs every <name>.json in dir against <name>.golden.json. Golden files hold
// {"options": {"m": ...}, "expect": {...}}. Returns the number of failures.
int run_corpus(const std::string& dir, std::ostream& out, const CountOptions& count = {});

}  // namespace ehrkit
