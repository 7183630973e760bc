#include "lgq/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "lgq/errors.hpp"
#include "lgq/suites.hpp"

namespace lgq::cli {

namespace {

constexpr int kMaxN = 7;
constexpr std::size_t kPairsPerBudgetUnit = 50000;

struct Flags {
  int n = 1;
  std::string format = "json";
  std::string out;
  std::optional<int> budget;
  std::uint64_t seed = 0;
  bool timings = false;
  bool strict = false;
  std::string chart;
  bool all_charts = false;
  std::string klass;
};

int budget_from_env() {
  const char* v = std::getenv("LGQ_BUDGET");
  if (!v || !*v) return -1;
  try {
    std::size_t used = 0;
    int b = std::stoi(v, &used);
    if (used != std::string(v).size() || b < 0) throw UsageError("");
    return b;
  } catch (const std::exception&) {
    throw UsageError("LGQ_BUDGET must be a nonnegative integer, got '" + std::string(v) + "'");
  }
}

suites::Context make_context(const Flags& f) {
  if (f.n < 1 || f.n > kMaxN) throw UsageError("--n must be between 1 and " + std::to_string(kMaxN));
  suites::Context ctx;
  ctx.n = f.n;
  ctx.seed = f.seed;
  int budget = f.budget ? *f.budget : budget_from_env();
  if (f.budget && *f.budget < 0) throw UsageError("--budget must be nonnegative");
  if (budget >= 0) {
    ctx.theta_budget = budget;
    ctx.groebner.max_pairs = std::max<std::size_t>(1, static_cast<std::size_t>(budget) * kPairsPerBudgetUnit);
  }
  return ctx;
}

std::vector<std::string> canonical_args(const std::string& command, const Flags& f, const suites::Context& ctx) {
  return {command,
          "n=" + std::to_string(ctx.n),
          "budget=" + std::to_string(ctx.theta_budget),
          "seed=" + std::to_string(ctx.seed),
          "strict=" + std::to_string(f.strict),
          "chart=" + (f.all_charts ? std::string("all") : f.chart),
          "class=" + f.klass};
}

void run_criterion(report::Report& r, const suites::Context& ctx, int number) {
  suites::run_guarded(r, ctx, suites::criteria().at(static_cast<std::size_t>(number - 1)));
}

report::Report build(const std::string& command, const Flags& f, suites::Context ctx) {
  report::Report r;
  r.command = command;
  r.strict = f.strict;
  r.run_id = report::make_run_id(canonical_args(command, f, ctx));
  r.notes = suites::standard_notes(command);
  if (ctx.n != 1) r.notes.push_back("Results for n >= 2 are derived and experimental.");

  if (command == "qh") {
    run_criterion(r, ctx, 1);
    run_criterion(r, ctx, 2);
  } else if (command == "potential") {
    run_criterion(r, ctx, 3);
  } else if (command == "compactify") {
    suites::run_guarded(r, ctx, {4, "Compactification", suites::compactify_identity});
  } else if (command == "critical") {
    suites::run_guarded(r, ctx, {4, "Critical points", suites::critical_points});
    run_criterion(r, ctx, 5);
  } else if (command == "gm") {
    if (!f.klass.empty()) {
      suites::reduce_user_class(r, ctx, f.klass);
    } else {
      run_criterion(r, ctx, 6);
      run_criterion(r, ctx, 7);
    }
  } else if (command == "pairing") {
    run_criterion(r, ctx, 8);
    run_criterion(r, ctx, 9);
    run_criterion(r, ctx, 10);
  } else if (command == "tame") {
    if (ctx.n != 1) throw UsageError("tame requires --n 1");
    if (!f.chart.empty() && f.all_charts) throw UsageError("--chart and --all are exclusive");
    if (!f.chart.empty())
      suites::tameness_chart(r, ctx, f.chart);
    else
      run_criterion(r, ctx, 11);
  } else if (command == "verify-all") {
    if (ctx.n != 1) throw UsageError("verify-all runs the n = 1 acceptance suite; use --n 1");
    ctx.criterion_ids = true;
    for (const auto& c : suites::criteria()) suites::run_guarded(r, ctx, c);
  }
  return r;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadric Landau-Ginzburg verification toolkit", "lgq"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&f](CLI::App* s) {
    s->add_option("--n", f.n, "Quadric Q_{2n+1}")->capture_default_str();
    s->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
    s->add_option("--out", f.out, "Write the report here instead of standard output");
    s->add_option("--budget", f.budget, "Theta-degree budget; also scales the Groebner pair budget");
    s->add_option("--seed", f.seed, "Seed for randomized checks")->capture_default_str();
    s->add_flag("--timings", f.timings, "Include runtime_ms per check");
    s->add_flag("--strict", f.strict, "Experimental failures fail the run");
  };
  const std::vector<std::pair<std::string, std::string>> commands{
      {"qh", "Quantum multiplication table and initial conditions"},
      {"potential", "Standard potential and its integration property"},
      {"compactify", "Partial compactification identity"},
      {"critical", "Critical points and Milnor-ring basis"},
      {"gm", "Gauss-Manin reduction and connection matrices"},
      {"pairing", "V-filtration, pairing constraints and canonicity"},
      {"tame", "Chart-by-chart tameness analysis"},
      {"verify-all", "Run every acceptance criterion"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* s = app.add_subcommand(name, help);
    common(s);
    if (name == "tame") {
      s->add_option("--chart", f.chart, "Chart ijk, e.g. 010");
      s->add_flag("--all", f.all_charts, "All charts (default)");
    }
    if (name == "gm") s->add_option("--class", f.klass, "Reduce this Laurent polynomial in D1..D_{2n+1}");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "lgq: " << e.what() << "\n";
    return kUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::string text;
  report::Status status;
  try {
    suites::Context ctx = make_context(f);
    report::Report r = build(command, f, ctx);
    report::RenderOptions ro{f.timings};
    text = f.format == "md" ? report::to_markdown(r, ro) : report::to_json(r, ro);
    status = r.overall();
  } catch (const UsageError& e) {
    err << "lgq: usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "lgq: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceBudgetExceeded& e) {
    err << "lgq: budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "lgq: " << e.what() << "\n";
    return kFail;
  }

  if (f.out.empty()) {
    out << text;
  } else {
    std::ofstream file(f.out, std::ios::binary);
    if (!(file << text) || !file.flush()) {
      err << "lgq: cannot write '" << f.out << "'\n";
      return kIo;
    }
  }
  return status == report::Status::Fail ? kFail : kPass;
}

int run_command(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_command(args, std::cout, std::cerr);
}

}  // namespace lgq::cli
