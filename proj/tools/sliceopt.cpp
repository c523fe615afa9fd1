// Command-line front end: solve, check and generate instances.
//
// Exit codes: 0 solved (or verify passed), 1 invalid input, 2 infeasible,
// 3 unsupported inertia, 4 enumeration budget exceeded, 5 verify failed,
// 6 exact mode found no certificate.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sliceopt/exact.hpp"
#include "sliceopt/generate.hpp"
#include "sliceopt/instance.hpp"
#include "sliceopt/motzkin.hpp"
#include "sliceopt/oracle.hpp"
#include "sliceopt/quadform.hpp"

namespace {

using namespace sliceopt;

enum Exit { ok = 0, bad_input = 1, infeasible = 2, unsupported = 3, budget = 4, verify_failed = 5, no_certificate = 6 };

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

Rational parse_epsilon(const std::string& text) {
  try {
    Rational e = parse_rational(text);
    if (e <= 0) throw InvalidInput("epsilon must be positive");
    return e;
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(std::string("bad --epsilon: ") + e.what());
  }
}

struct Settings {
  std::string mode = "fptas";
  std::string epsilon;
  std::uint64_t budget = EnumerationOptions{}.budget;
  std::string cover = "points";
  std::string out;
  std::string report;
  std::string instance;
};

DriverOptions driver_options(const Settings& s) {
  DriverOptions opts;
  opts.cover.enumeration.budget = s.budget;
  opts.cover.strategy = s.cover == "cells" ? CoverStrategy::cells : CoverStrategy::points;
  return opts;
}

// The objective as an exact evaluator, with the raw (possibly non-symmetric) Q.
Evaluator objective(const InstanceFile& inst) {
  if (inst.objective == Objective::motzkin) return [](const Point& x) -> Value { return Rational(motzkin_value(x)); };
  IntMatrix q = *inst.q;
  return [q](const Point& x) -> Value { return Rational(eval_f(q, x)); };
}

int exit_for(const SolveReport& r) { return r.status == SolveStatus::solved ? ok : infeasible; }

int run_solve(const Settings& s) {
  const InstanceFile inst = parse_instance(read_file(s.instance));
  const Polytope p = inst.polytope();
  const Rational eps = !s.epsilon.empty() ? parse_epsilon(s.epsilon) : inst.epsilon.value_or(make_rational(1, 4));
  const DriverOptions opts = driver_options(s);
  const Evaluator f = objective(inst);

  if (s.mode == "verify") {
    if (s.report.empty()) throw InvalidInput("verify needs --report");
    SolveReport report = parse_report(read_file(s.report));
    auto opt = brute_force_min(p, f, opts.cover.enumeration);
    if (!opt) {
      bool pass = report.status == SolveStatus::infeasible;
      std::cout << "verdict: " << (pass ? "pass" : "fail") << " (P has no integer point)\n";
      return pass ? ok : verify_failed;
    }
    Verdict v = verify_epsilon(report, p, f, *opt, eps);
    std::cout << "verdict: " << (v.pass ? "pass" : "fail") << "\ncase: " << to_string(v.tag)
              << "\noptimum: " << to_string(v.optimum) << " at " << to_string(opt->x)
              << "\nreported: " << to_string(v.reported) << "\nepsilon: " << to_string(eps) << "\n";
    if (v.slack) std::cout << "slack: " << to_string(*v.slack) << "\n";
    if (!v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
    return v.pass ? ok : verify_failed;
  }

  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  std::vector<std::string> notes;
  if (s.mode == "oracle") {
    auto opt = brute_force_min(p, f, opts.cover.enumeration);
    report.mode = "oracle";
    report.exact = true;
    report.epsilon = 0;
    if (opt) {
      report.status = SolveStatus::solved;
      report.x = opt->x;
      report.value = opt->value;
    }
  } else if (inst.objective == Objective::motzkin) {
    if (s.mode != "fptas") throw InvalidInput("the motzkin objective supports modes fptas, oracle and verify");
    report = motzkin_solve(p, eps, opts);
  } else {
    bool doubled = false;
    const SymMatrix q = SymMatrix::symmetrized(*inst.q, &doubled);
    if (doubled) notes.push_back("Q is not symmetric; solved with Q + Q^T");
    if (s.mode == "fptas") {
      report = fptas_quadform(q, p, eps, opts);
    } else if (s.mode == "exact") {
      auto r = exact_solve(q, p, opts.cover.enumeration);
      if (!r) {
        std::cerr << "exact: the optimum sign admits no exact certificate; use --mode fptas or dim3\n";
        return no_certificate;
      }
      report = *r;
    } else if (s.mode == "dim3") {
      if (inst.n != 3) throw InvalidInput("dim3 needs n = 3");
      report = solve_dim3(q, p, eps, opts);
    } else {
      throw InvalidInput("unknown mode " + s.mode);
    }
    if (report.status == SolveStatus::solved) report.value = f(report.x);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.notes.insert(report.notes.begin(), notes.begin(), notes.end());
  write_output(s.out, serialize_report(report, ms));
  return exit_for(report);
}

InertiaFilter parse_filter(const std::string& text, Inertia& exact) {
  if (text == "any") return InertiaFilter::any;
  if (text == "one-negative") return InertiaFilter::one_negative;
  if (text == "one-positive") return InertiaFilter::one_positive;
  int a, b, c;
  char x, y;
  std::istringstream in(text);
  if (in >> a >> x >> b >> y >> c && x == ',' && y == ',' && in.eof()) {
    exact = Inertia{a, b, c};
    return InertiaFilter::exact;
  }
  throw InvalidInput("bad --inertia " + text + " (any, one-negative, one-positive or p,n,z)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer minimization of indefinite quadratic forms over polytopes"};
  app.require_subcommand(0, 1);

  Settings s;
  app.add_option("instance", s.instance, "Instance JSON file");
  app.add_option("--mode", s.mode, "fptas | exact | dim3 | oracle | verify")
      ->check(CLI::IsMember({"fptas", "exact", "dim3", "oracle", "verify"}));
  app.add_option("--epsilon", s.epsilon, "Accuracy as a rational \"p/q\" (overrides the instance)");
  app.add_option("--budget", s.budget, "Enumeration cap on integer bounding-box cells");
  app.add_option("--cover", s.cover, "Slice cover strategy")->check(CLI::IsMember({"points", "cells"}));
  app.add_option("--out", s.out, "Report file (default stdout)");
  app.add_option("--report", s.report, "Report to check in verify mode");

  GenerateOptions gen;
  std::string inertia_text = "any", gen_eps, gen_out;
  auto* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("--n", gen.n, "Dimension (1..4)");
  generate->add_option("--inertia", inertia_text, "any | one-negative | one-positive | p,n,z");
  generate->add_option("--coef", gen.coefficient_bound, "Bound on |Q_ij|");
  generate->add_option("--box", gen.box_bound, "Box half-width");
  generate->add_option("--epsilon", gen_eps, "Epsilon stored in the instance");
  generate->add_option("--out", gen_out, "Instance file (default stdout)");

  std::string k_text = "2", motzkin_eps = "1/4", motzkin_out;
  auto* motzkin = app.add_subcommand("motzkin", "Minimize the Motzkin polynomial over [-K, K]^2");
  motzkin->add_option("--k", k_text, "Box half-width K >= 1");
  motzkin->add_option("--epsilon", motzkin_eps, "Accuracy");
  motzkin->add_option("--out", motzkin_out, "Report file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      gen.filter = parse_filter(inertia_text, gen.inertia);
      if (!gen_eps.empty()) gen.epsilon = parse_epsilon(gen_eps);
      write_output(gen_out, serialize_instance(generate_instance(gen)));
      return ok;
    }
    if (motzkin->parsed()) {
      Integer k;
      try {
        k = parse_integer(k_text);
      } catch (const std::invalid_argument& e) {
        throw InvalidInput(std::string("bad --k: ") + e.what());
      }
      const auto start = std::chrono::steady_clock::now();
      SolveReport r = motzkin_demo(k, parse_epsilon(motzkin_eps));
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      write_output(motzkin_out, serialize_report(r, ms));
      return exit_for(r);
    }
    if (s.instance.empty()) {
      std::cerr << app.help();
      return bad_input;
    }
    return run_solve(s);
  } catch (const ParseError& e) {
    if (e.line() > 0)
      std::cerr << s.instance << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    else
      std::cerr << s.instance << ": " << e.path() << ": " << e.what() << "\n";
    return bad_input;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const UnsupportedInertia& e) {
    std::cerr << "unsupported inertia: " << e.what() << "\n";
    return unsupported;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return budget;
  } catch (const UnboundedPolytope& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  }
}
