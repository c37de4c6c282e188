// ehrkit: command-line front end.
//
// Exit codes: 0 success, 1 corpus mismatch, 2 parse error, 3 invalid polytope
// (unbounded or not full-dimensional), 4 point budget exhausted, 5 any other
// failed precondition.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ehrkit/error.hpp"
#include "ehrkit/report.hpp"

using namespace ehrkit;

namespace {

struct Globals {
  bool json_out = false;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> budget;

  CountOptions count() const {
    CountOptions c;
    if (budget) c.budget = *budget;
    return c;
  }
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return 2;
    case ErrorCode::NotFullDimensional:
    case ErrorCode::Unbounded: return 3;
    case ErrorCode::BudgetExceeded: return 4;
    default: return 5;
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string lambda_poly(const RatVector& c) {
  std::vector<std::pair<Rational, Rational>> items;
  for (Index i = 0; i < c.size(); ++i) items.emplace_back(Rational(i), c(i));
  std::string s = to_string(FracPoly::from_items(items));
  std::string out;
  for (char ch : s) {
    if (ch == 't') {
      out += "l";
    } else {
      out += ch;
    }
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rational Ehrhart theory toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json_out, "Machine-readable JSON output");
  app.add_option("--m", g.m, "Scale m with (m/gamma)P a lattice polytope")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "Maximum number of enumerated lattice points")->check(CLI::PositiveNumber);

  std::string file;
  std::string kind_text = "zrational";
  std::string dilate_text;
  std::string region_text = "closed";
  std::string gamma_text = "r";
  bool open = false;
  bool text_out = false;
  bool rational = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report");
  analyze_cmd->add_option("file", file, "Polytope JSON file")->required();

  auto* count_cmd = app.add_subcommand("count", "Count lattice points in a dilate");
  count_cmd->add_option("file", file)->required();
  count_cmd->add_option("--dilate", dilate_text, "Dilation factor p/q")->required();
  count_cmd->add_option("--region", region_text, "closed, open or boundary");

  auto* series_cmd = app.add_subcommand("series", "Rational Ehrhart series");
  series_cmd->add_option("file", file)->required();
  series_cmd->add_option("--kind", kind_text, "classical, zrational or refined");
  series_cmd->add_flag("--open", open, "Series of the interior");
  series_cmd->add_flag("--text", text_out, "Text output (default)");

  auto* quasi_cmd = app.add_subcommand("quasipoly", "Quasipolynomial constituents");
  quasi_cmd->add_option("file", file)->required();
  quasi_cmd->add_option("--kind", kind_text);

  auto* period_cmd = app.add_subcommand("period", "Minimal period and collapse");
  period_cmd->add_option("file", file)->required();
  period_cmd->add_option("--kind", kind_text);

  auto* gor_cmd = app.add_subcommand("gorenstein", "Rational Gorenstein certificate");
  gor_cmd->add_option("file", file)->required();
  gor_cmd->add_option("--gamma", gamma_text, "r, 2r or a positive integer");

  auto* dec_cmd = app.add_subcommand("decompose", "Symmetric decomposition of h*");
  dec_cmd->add_option("file", file)->required();
  dec_cmd->add_flag("--rational", rational, "Rational version for non-lattice polytopes");

  auto* ht_cmd = app.add_subcommand("htilde", "Boundary polynomial h~");
  ht_cmd->add_option("file", file)->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "Check a golden corpus directory");
  corpus_cmd->add_option("dir", file, "Corpus directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const CountOptions copts = g.count();
    if (corpus_cmd->parsed()) {
      return run_corpus(file, std::cout, copts) == 0 ? 0 : 1;
    }

    const PolytopeFile pf = load_polytope(file);
    const HPolytope& h = pf.polytope;

    if (analyze_cmd->parsed()) {
      AnalysisOptions opts;
      opts.m = g.m;
      opts.count = copts;
      const json report = analyze(pf, opts);
      if (g.json_out) {
        emit(report);
      } else {
        std::cout << render_text(report);
      }
      return 0;
    }

    if (count_cmd->parsed()) {
      const std::int64_t n = count(h, parse_rational(dilate_text), parse_region(region_text), copts);
      if (g.json_out) {
        emit({{"dilate", to_string(parse_rational(dilate_text))}, {"region", region_text}, {"count", n}});
      } else {
        std::cout << n << "\n";
      }
      return 0;
    }

    if (series_cmd->parsed() || quasi_cmd->parsed() || period_cmd->parsed()) {
      const SeriesKind kind = make_kind(h, parse_series_tag(kind_text), g.m);
      const RationalSeriesForm s = open ? build_open_series(h, kind, copts) : build_series(h, kind, copts);
      if (series_cmd->parsed()) {
        const FactoredSeries reduced = cancel_common_factors(s, kind);
        if (g.json_out && !text_out) {
          json out = to_json(s);
          out["kind"] = kind_text;
          out["gamma"] = kind.gamma;
          out["m"] = kind.m;
          out["open"] = open;
          if (!open) out["reduced"] = to_json(reduced);
          emit(out);
        } else {
          std::cout << to_string(s) << "\n";
          if (!open) std::cout << "= " << to_string(reduced) << "\n";
        }
        return 0;
      }
      const QuasiPolynomial q = extract_quasipolynomial(s, h, kind, copts);
      if (quasi_cmd->parsed()) {
        if (g.json_out) {
          emit(to_json(q));
        } else {
          std::cout << "step " << to_string(q.step) << ", " << q.period_terms << " constituents (l = n * step)\n";
          for (std::size_t j = 0; j < q.constituents.size(); ++j) {
            std::cout << "  n = " << j << " mod " << q.period_terms << ": " << lambda_poly(q.constituents[j]) << "\n";
          }
        }
        return 0;
      }
      const PeriodReport p = period_report(h, q);
      if (g.json_out) {
        emit(to_json(p));
      } else {
        std::cout << "period " << to_string(p.period) << ", collapse: " << yes_no(p.collapse) << " (bound " << p.bound
                  << ")\n";
      }
      return 0;
    }

    if (gor_cmd->parsed()) {
      const std::int64_t r = codenominator(h);
      std::int64_t gamma = 0;
      if (gamma_text == "r") {
        gamma = r;
      } else if (gamma_text == "2r") {
        gamma = 2 * r;
      } else {
        const Rational v = parse_rational(gamma_text);
        if (!is_integer(v) || v < 1) throw Error(ErrorCode::InvalidArgument, "--gamma must be r, 2r or a positive integer");
        gamma = to_int64(v);
      }
      const GorensteinCertificate c = gorenstein_certificate(h, gamma, copts);
      if (g.json_out) {
        emit(to_json(c));
        return 0;
      }
      std::cout << "gamma = " << gamma << " (r = " << r << ", m = " << c.m << ")\n";
      std::cout << (c.is_gorenstein ? "" : "not ") << gamma << "-rational Gorenstein";
      if (c.gorenstein_point) {
        std::cout << ", Gorenstein point (";
        for (Index i = 0; i < c.gorenstein_point->size(); ++i) std::cout << (i ? "," : "") << (*c.gorenstein_point)(i);
        std::cout << ")";
      }
      std::cout << "\n";
      for (const auto& [cond, verdict] : c.witnesses) {
        std::cout << "  " << to_string(cond) << ": " << yes_no(verdict)
                  << (cond == Condition::CountShift ? " (sampled consistency check)" : "") << "\n";
      }
      return 0;
    }

    if (dec_cmd->parsed()) {
      const SymmetricDecomposition dcmp = rational ? rational_betke_mcmullen(h, copts) : betke_mcmullen(h, copts);
      if (g.json_out) {
        emit(to_json(dcmp));
        return 0;
      }
      std::cout << "a(t) = " << to_string(dcmp.a) << "\n";
      std::cout << "b(t) = " << to_string(dcmp.b) << "\n";
      std::cout << "h*(t) = " << to_string(dcmp.hstar) << " over (1 - " << (dcmp.k == 1 ? "t" : "t^" + std::to_string(dcmp.k)) << ")^" << h.dim() + 1 << "\n";
      for (const std::string& v : dcmp.verified) std::cout << "  verified: " << v << "\n";
      return 0;
    }

    if (ht_cmd->parsed()) {
      const BoundaryData bd = build_htilde(h, 0, copts);
      const bool combinatorial = htilde_from_boundary_counts(h, copts) == bd.htilde;
      const bool psi = op_psi(bd.htilde) == classical_hstar(h, copts).series.numerator;
      if (g.json_out) {
        emit({{"htilde", to_json(bd.htilde)},
              {"r", bd.r},
              {"k", bd.k},
              {"exact_division", true},
              {"boundary_counts_agree", combinatorial},
              {"psi_is_hstar", psi}});
        return 0;
      }
      std::cout << "h~(t) = " << to_string(bd.htilde) << "  (r = " << bd.r << ", k = " << bd.k << ")\n";
      std::cout << "  exact division of Zh*_k by the correction factor: ok\n";
      std::cout << "  boundary counts agree: " << yes_no(combinatorial) << "\n";
      std::cout << "  Psi(h~) = h*: " << yes_no(psi) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "ehrkit: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "ehrkit: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
