#include "cli.hpp"

#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "burau/bounds.hpp"
#include "burau/braid.hpp"
#include "burau/error.hpp"
#include "burau/fox.hpp"
#include "burau/freegroup.hpp"
#include "burau/serialize.hpp"
#include "burau/spectral.hpp"

namespace burau::cli {

namespace {

struct RunConfig {
  int strands = 0;
  std::string braid_text;
  int grid = 1024;
  bool no_refine = false;
  std::string format;
  int iters = 8;
  std::size_t budget = kDefaultLengthBudget;
  bool reduced = false;
  std::optional<double> lambda;
  std::string lambda_poly;
  std::uint64_t seed = VerifyOptions{}.seed;
  Tolerances tol;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(Complex c) {
  std::string im = fmt(c.imag());
  if (im.front() != '-') im = "+" + im;
  return fmt(c.real()) + im + "i";
}

std::string permutation_text(const Permutation& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
  return s + ")";
}

// Everything a command produces: human-readable lines, a JSON results block
// and free-form diagnostics.
struct Outcome {
  std::ostringstream text;
  json results = json::object();
  std::vector<std::string> diagnostics;
  std::string csv;
  int status = kSuccess;
};

json config_json(const RunConfig& cfg) {
  return {{"grid", cfg.grid},
          {"refine", !cfg.no_refine},
          {"iters", cfg.iters},
          {"budget", cfg.budget},
          {"seed", cfg.seed},
          {"tolerances",
           {{"root", cfg.tol.root_convergence},
            {"compare", cfg.tol.comparison},
            {"certificate", cfg.tol.certificate},
            {"refine", cfg.tol.refinement_interval},
            {"unit_root_gap", cfg.tol.unit_root_gap}}}};
}

std::string matrix_text(const IntLaurentMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += "[";
    for (std::size_t j = 0; j < m.size(); ++j) s += (j ? ", " : "") + to_string(m(i, j));
    s += "]\n";
  }
  return s;
}

void cmd_matrix(const RunConfig&, const BraidWord& w, Outcome& o) {
  const auto b = burau_matrix(w);
  o.text << matrix_text(b.matrix);
  o.results["matrix"] = to_json(b);
}

void cmd_reduced(const RunConfig&, const BraidWord& w, Outcome& o) {
  const auto r = reduced_burau(w);
  o.text << matrix_text(r.matrix);
  o.results["matrix"] = to_json(r);
}

void cmd_charpoly(const RunConfig& cfg, const BraidWord& w, Outcome& o) {
  const auto full = burau_matrix(w);
  const auto p = cfg.reduced ? charpoly(reduced_burau(full).matrix) : charpoly(full.matrix);
  const std::string rendered = to_string(p, "X");
  o.text << rendered << "\n";
  o.results["flavor"] = cfg.reduced ? "reduced" : "full";
  o.results["charpoly"] = to_json(p);
  o.results["rendered"] = rendered;
}

void cmd_alexander(const RunConfig&, const BraidWord& w, Outcome& o) {
  const auto p = alexander_polynomial(w);
  const std::string rendered = to_string(p, "x", "t", true);
  o.text << rendered << "\n";
  o.results["alexander"] = to_json(p);
  o.results["rendered"] = rendered;
}

void cmd_entropy_bound(const RunConfig& cfg, const BraidWord& w, Outcome& o) {
  const auto e = entropy_lower_bound(w, cfg.grid, !cfg.no_refine, cfg.tol);
  o.text << "entropy lower bound: " << fmt(e.bound) << "\n"
         << "sweep max R: " << fmt(e.sweep.best.radius) << "\n"
         << "argmax theta: " << fmt(e.sweep.best.theta) << "\n"
         << "argmax t: " << fmt(e.sweep.best.t) << "\n";
  for (const auto& s : e.spots) o.text << "R at " << s.label << ": " << fmt(s.radius) << "\n";
  o.results["entropy_bound"] = to_json(e);
  o.diagnostics = e.sweep.diagnostics;
}

void cmd_sweep(const RunConfig& cfg, const BraidWord& w, Outcome& o) {
  const auto s = sweep_unit_circle(burau_matrix(w).matrix, cfg.grid, !cfg.no_refine, cfg.tol);
  std::ostringstream csv;
  write_csv(csv, s);
  o.csv = csv.str();
  o.text << "grid: " << s.grid << "\n"
         << "grid max R: " << fmt(s.grid_max()) << "\n"
         << "max R: " << fmt(s.best.radius) << "\n"
         << "argmax theta: " << fmt(s.best.theta) << "\n"
         << "argmax t: " << fmt(s.best.t) << "\n"
         << "refinement iterations: " << s.refinement_iterations << "\n";
  o.results["sweep"] = to_json(s);
  o.diagnostics = s.diagnostics;
}

void cmd_growth(const RunConfig& cfg, const BraidWord& w, Outcome& o) {
  const auto alpha = artin_action(w);
  const auto g = growth_rate_estimate(alpha, cfg.iters, cfg.budget, cfg.tol);
  for (const auto& s : g.steps) {
    o.text << "p=" << s.power << " norm=" << s.norm << " norm^(1/p)=" << fmt(s.estimate)
           << (s.cancelled ? " cancellation" : "") << "\n";
  }
  if (g.budget_exhausted) o.text << "length budget exhausted; sequence is partial\n";
  if (g.exact_growth_rate) {
    o.text << "no cancellation; growth rate = spectral radius of occurrence matrix = " << fmt(*g.exact_growth_rate) << "\n";
  } else {
    o.text << "cancellation observed or not witnessed; no exact growth rate claimed\n";
  }
  o.results["occurrence_matrix"] = to_json(occurrence_matrix(alpha));
  o.results["growth"] = to_json(g);
  if (g.budget_exhausted) o.diagnostics.push_back("length budget exhausted");
}

void cmd_verify(const RunConfig& cfg, const BraidWord& w, Outcome& o) {
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.grid = cfg.grid;
  opts.tol = cfg.tol;
  opts.lambda = cfg.lambda;
  if (!cfg.lambda_poly.empty()) {
    std::istringstream in(cfg.lambda_poly);
    std::vector<Complex> descending;
    std::string tok;
    while (in >> tok) {
      try {
        descending.emplace_back(std::stod(tok), 0.0);
      } catch (const std::exception&) {
        throw ParseError("bad --lambda-poly coefficient '" + tok + "'");
      }
    }
    if (descending.size() < 2) throw ParseError("--lambda-poly needs a polynomial of degree >= 1");
    const auto root = greatest_real_root(ComplexPolynomial(std::vector<Complex>(descending.rbegin(), descending.rend())), cfg.tol);
    if (!root) throw ParseError("--lambda-poly has no real root");
    opts.lambda = *root;
  }
  json checks = json::array();
  bool all = true;
  for (const auto& c : verify_invariants(w, opts)) {
    o.text << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    all = all && c.passed;
  }
  if (opts.lambda) o.results["lambda"] = *opts.lambda;
  o.results["checks"] = std::move(checks);
  o.results["all_passed"] = all;
  if (!all) o.status = kCheckFailed;
}

struct Command {
  const char* name;
  const char* help;
  std::function<void(const RunConfig&, const BraidWord&, Outcome&)> run;
  const char* default_format;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burau matrices, growth rates and entropy lower bounds for braids", "burau"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<Command> commands = {
      {"matrix", "Full Burau matrix", cmd_matrix, "text"},
      {"reduced", "Reduced Burau matrix", cmd_reduced, "text"},
      {"charpoly", "Characteristic polynomial det(X I - B)", cmd_charpoly, "text"},
      {"alexander", "det(B^r - x I)", cmd_alexander, "text"},
      {"entropy-bound", "ln of the unit-circle supremum of R(B(t))", cmd_entropy_bound, "text"},
      {"sweep", "Spectral radius of B(t) around the unit circle", cmd_sweep, "csv"},
      {"growth", "Occurrence-matrix growth sequence", cmd_growth, "text"},
      {"verify", "Invariant suite over the braid", cmd_verify, "text"},
  };

  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("-n,--strands", cfg.strands, "Number of strands")->required()->check(CLI::Range(2, 64));
    sub->add_option("braid", cfg.braid_text, "Braid word, e.g. '1 -2' or 's1 s2^-1'")->required()->allow_extra_args(false);
    sub->add_option("--grid", cfg.grid, "Unit-circle grid size")->check(CLI::Range(8, 1 << 24));
    sub->add_flag("--no-refine", cfg.no_refine, "Skip golden-section refinement of the sweep maximum");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--iters", cfg.iters, "Largest power for the growth sequence")->check(CLI::Range(1, 64));
    sub->add_option("--budget", cfg.budget, "Total image length budget for growth iteration");
    sub->add_option("--seed", cfg.seed, "Seed for randomised checks in verify");
    sub->add_option("--tol-root", cfg.tol.root_convergence, "Root iteration convergence threshold");
    sub->add_option("--tol-compare", cfg.tol.comparison, "Floating comparison tolerance");
    sub->add_option("--tol-cert", cfg.tol.certificate, "Vanishing-resultant threshold");
    sub->add_option("--tol-refine", cfg.tol.refinement_interval, "Refinement bracket width");
    if (std::string(c.name) == "charpoly") sub->add_flag("--reduced", cfg.reduced, "Use the reduced matrix");
    if (std::string(c.name) == "verify") {
      sub->add_option("--lambda", cfg.lambda, "Report the strict gap between lambda and the unit-circle supremum");
      sub->add_option("--lambda-poly", cfg.lambda_poly,
                      "Take lambda as the greatest real root of this polynomial (coefficients, highest first)");
    }
    subs.push_back(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  std::size_t which = 0;
  while (which < subs.size() && !subs[which]->parsed()) ++which;
  const Command& command = commands[which];
  const std::string format = cfg.format.empty() ? command.default_format : cfg.format;

  try {
    const BraidWord w = parse_braid(cfg.braid_text, cfg.strands);
    Outcome o;
    command.run(cfg, w, o);
    if (format == "json") {
      json report = {{"command", command.name},
                     {"braid", to_string(w)},
                     {"strands", w.strands()},
                     {"exponent_sum", exponent_sum(w)},
                     {"permutation", permutation(w)},
                     {"results", o.results},
                     {"config", config_json(cfg)},
                     {"diagnostics", o.diagnostics}};
      out << report.dump(2) << "\n";
    } else if (format == "csv") {
      if (o.csv.empty()) {
        err << "burau: --format csv is only available for sweep\n";
        return kUsageError;
      }
      out << o.csv;
    } else {
      out << "braid: " << (w.empty() ? "(identity)" : to_string(w)) << " on " << w.strands()
          << " strands, exponent sum " << exponent_sum(w) << ", permutation " << permutation_text(permutation(w)) << "\n";
      out << o.text.str();
      for (const auto& d : o.diagnostics) out << "diagnostic: " << d << "\n";
    }
    return o.status;
  } catch (const ParseError& e) {
    err << "burau: parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ArgumentError& e) {
    err << "burau: " << e.what() << "\n";
    return kUsageError;
  } catch (const DimensionError& e) {
    err << "burau: " << e.what() << "\n";
    return kUsageError;
  } catch (const ConvergenceError& e) {
    err << "burau: numerical failure: " << e.what() << "\n";
    return kNonConvergence;
  } catch (const Error& e) {
    err << "burau: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace burau::cli
