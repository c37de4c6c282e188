#include "ehrkit/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ehrkit/error.hpp"

namespace ehrkit {

namespace {

json int_rows(const HPolytope& h) {
  json rows = json::array();
  for (const auto& row : h.rows()) rows.push_back(row);
  return rows;
}

json series_section(const HPolytope& h, const SeriesKind& kind, const CountOptions& opts, QuasiPolynomial& quasi) {
  const RationalSeriesForm closed = build_series(h, kind, opts);
  const RationalSeriesForm open = build_open_series(h, kind, opts);
  const Rational total(kind.m * (h.dim() + 1), kind.gamma);
  json out;
  out["gamma"] = kind.gamma;
  out["m"] = kind.m;
  out["numerator"] = to_json(closed.numerator);
  out["pole_exponent"] = to_string(closed.pole_exponent);
  out["pole_order"] = closed.pole_order;
  out["text"] = to_string(closed);
  out["reduced"] = to_json(cancel_common_factors(closed, kind));
  out["open_numerator"] = to_json(open.numerator);
  out["reciprocity"] = open.numerator == closed.numerator.reflect(total);
  out["codegree"] = to_string(rational_codegree(closed.numerator, kind, h.dim()));
  quasi = extract_quasipolynomial(closed, h, kind, opts);
  return out;
}

json htilde_section(const HPolytope& h, const CountOptions& opts) {
  if (!h.is_lattice() || !h.contains_origin()) return nullptr;
  const BoundaryData bd = build_htilde(h, 0, opts);
  json out;
  out["r"] = bd.r;
  out["k"] = bd.k;
  out["htilde"] = to_json(bd.htilde);
  out["text"] = to_string(bd.htilde);
  out["boundary_counts_agree"] = htilde_from_boundary_counts(h, opts) == bd.htilde;
  out["refined_grid_agrees"] = build_htilde(h, 2 * bd.r, opts).htilde == bd.htilde;
  const ClassicalHStar hs = classical_hstar(h, opts);
  out["psi_is_hstar"] = op_psi(bd.htilde) == hs.series.numerator;
  if (bd.r % bd.k == 0) out["correction_factor"] = verify_correction_factor(bd.r, bd.k, h.dim());
  if (h.origin_position() == OriginPosition::Interior) {
    out["palindromic"] = is_palindromic(bd.htilde, Rational(h.dim()));
  }
  const BoundarySplit split = boundary_split(h, opts);
  out["split_a"] = to_json(split.a);
  out["split_b"] = to_json(split.b);
  return out;
}

json decomposition_section(const HPolytope& h, const CountOptions& opts) {
  if (interior_lattice_points(h, opts).empty()) return nullptr;
  return to_json(rational_betke_mcmullen(h, opts));
}

std::string poly_line(const json& poly) { return to_string(frac_poly_from_json(poly)); }

}  // namespace

json to_json(const QuasiPolynomial& q) {
  json out;
  out["step"] = to_string(q.step);
  out["period_terms"] = q.period_terms;
  json cons = json::array();
  for (const RatVector& c : q.constituents) cons.push_back(rational_vector_json(c));
  out["constituents"] = cons;
  return out;
}

json to_json(const PeriodReport& p) {
  json out;
  out["period"] = to_string(p.period);
  out["bound"] = p.bound;
  out["collapse"] = p.collapse;
  return out;
}

json analyze(const PolytopeFile& file, const AnalysisOptions& opts) {
  const HPolytope& h = file.polytope;
  json out;
  out["name"] = file.name;
  out["dim"] = h.dim();
  out["rows"] = int_rows(h);
  out["normalized"] = h.normalized();
  json verts = json::array();
  for (const RatVector& v : h.vertices()) verts.push_back(rational_vector_json(v));
  out["vertices"] = verts;
  out["origin"] = std::string(to_string(h.origin_position()));
  out["lattice"] = h.is_lattice();
  out["codenominator"] = codenominator(h);
  out["denominator"] = denominator(h);
  const auto l = is_l_reflexive(h);
  out["l_reflexive"] = l ? json(*l) : json(nullptr);
  out["volume"] = to_string(volume(h));

  json series = json::object();
  json quasi = json::object();
  json periods = json::object();
  for (SeriesTag tag : {SeriesTag::Classical, SeriesTag::ZRational, SeriesTag::Refined}) {
    const SeriesKind kind = make_kind(h, tag, tag == SeriesTag::ZRational ? opts.m : std::nullopt);
    QuasiPolynomial q;
    const std::string key(to_string(tag));
    series[key] = series_section(h, kind, opts.count, q);
    quasi[key] = to_json(q);
    periods[key] = to_json(period_report(h, q));
  }
  out["series"] = series;
  out["quasipolynomial"] = quasi;
  out["periods"] = periods;

  const ClassicalHStar hs = classical_hstar(h, opts.count);
  json hstar;
  hstar["k"] = hs.k;
  hstar["numerator"] = to_json(hs.series.numerator);
  hstar["reduced"] = to_json(hs.reduced);
  hstar["int_cross_checked"] = hs.cross_checked;
  out["hstar"] = hstar;

  const GorensteinSummary g = classify(h, opts.count);
  out["gorenstein"] = {{"r", to_json(g.at_r)}, {"2r", to_json(g.at_2r)}};
  out["htilde"] = htilde_section(h, opts.count);
  out["decomposition"] = decomposition_section(h, opts.count);
  return out;
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os << "polytope " << report["name"].get<std::string>() << " (d = " << report["dim"] << ")\n";
  os << "  r = " << report["codenominator"] << ", k = " << report["denominator"]
     << ", origin " << report["origin"].get<std::string>() << (report["lattice"].get<bool>() ? ", lattice" : "")
     << ", volume " << report["volume"].get<std::string>() << "\n";
  for (const auto& [key, s] : report["series"].items()) {
    const json& p = report["periods"][key];
    os << key << " (gamma = " << s["gamma"] << ", m = " << s["m"] << ")\n";
    os << "  series   " << s["text"].get<std::string>() << "\n";
    os << "  reduced  " << s["reduced"]["text"].get<std::string>() << "\n";
    os << "  open     " << poly_line(s["open_numerator"]) << "\n";
    os << "  reciprocity " << (s["reciprocity"].get<bool>() ? "holds" : "FAILS") << ", codegree "
       << s["codegree"].get<std::string>() << "\n";
    os << "  period " << p["period"].get<std::string>() << ", collapse: " << (p["collapse"].get<bool>() ? "yes" : "no")
       << " (bound " << p["bound"] << ")\n";
  }
  const auto k = report["hstar"]["k"].get<std::int64_t>();
  os << "h* " << poly_line(report["hstar"]["numerator"]) << " over (1 - " << (k == 1 ? "t" : "t^" + std::to_string(k))
     << ")^" << report["dim"].get<int>() + 1 << "; reduced " << report["hstar"]["reduced"]["text"].get<std::string>() << "\n";
  for (const char* key : {"r", "2r"}) {
    const json& c = report["gorenstein"][key];
    os << "gorenstein gamma = " << c["gamma"] << ": " << (c["is_gorenstein"].get<bool>() ? "yes" : "no");
    if (!c["gorenstein_point"].is_null()) os << ", point " << c["gorenstein_point"].dump();
    os << "\n";
  }
  if (!report["htilde"].is_null()) os << "h~ " << report["htilde"]["text"].get<std::string>() << "\n";
  if (!report["decomposition"].is_null()) {
    const json& dcmp = report["decomposition"];
    os << "decomposition k = " << dcmp["k"] << ": a = " << dcmp["a_text"].get<std::string>()
       << ", b = " << dcmp["b_text"].get<std::string>() << "\n";
  }
  return os.str();
}

std::vector<std::string> golden_diff(const json& expected, const json& actual, const std::string& path) {
  std::vector<std::string> out;
  const std::string where = path.empty() ? "<root>" : path;
  if (expected.is_object()) {
    if (!actual.is_object()) {
      out.push_back(where + ": expected an object, got " + actual.dump());
      return out;
    }
    for (const auto& [key, value] : expected.items()) {
      const std::string sub = path.empty() ? key : path + "." + key;
      if (!actual.contains(key)) {
        out.push_back(sub + ": missing (expected " + value.dump() + ")");
        continue;
      }
      auto nested = golden_diff(value, actual[key], sub);
      out.insert(out.end(), nested.begin(), nested.end());
    }
    return out;
  }
  if (expected != actual) out.push_back(where + ": expected " + expected.dump() + ", got " + actual.dump());
  return out;
}

int run_corpus(const std::string& dir, std::ostream& out, const CountOptions& count) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error(ErrorCode::ParseError, "corpus directory " + dir + " not found");
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && entry.path().extension() == ".json" &&
        name.find(".golden.") == std::string::npos) {
      inputs.push_back(entry.path());
    }
  }
  std::sort(inputs.begin(), inputs.end());
  int failures = 0;
  for (const fs::path& input : inputs) {
    const std::string stem = input.stem().string();
    const fs::path golden_path = input.parent_path() / (stem + ".golden.json");
    std::vector<std::string> problems;
    try {
      if (!fs::exists(golden_path)) throw Error(ErrorCode::ParseError, "missing " + golden_path.filename().string());
      std::ifstream in(golden_path);
      json golden;
      try {
        golden = json::parse(in);
      } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, golden_path.filename().string() + ": " + e.what());
      }
      AnalysisOptions opts;
      opts.count = count;
      if (golden.contains("options") && golden["options"].contains("m")) {
        opts.m = golden["options"]["m"].get<std::int64_t>();
      }
      const json report = analyze(load_polytope(input.string()), opts);
      problems = golden_diff(golden.value("expect", json::object()), report);
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
    out << (problems.empty() ? "PASS " : "FAIL ") << stem << "\n";
    for (const std::string& p : problems) out << "  " << p << "\n";
    if (!problems.empty()) ++failures;
  }
  out << inputs.size() << " entries, " << failures << " failed\n";
  return failures;
}

}  // namespace ehrkit
