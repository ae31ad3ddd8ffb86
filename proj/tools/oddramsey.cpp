// oddramsey: constructions, exhaustive verification, and the constructive
// solvers from the command line.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddramsey/oddramsey.hpp"

using namespace oddramsey;
using nlohmann::json;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

struct Run {
  std::string command;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string manifest_path;
  json parameters = json::object();
  json inputs = json::object();
  json outputs = json::object();
  std::string outcome;
};

Run run;

std::string read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  run.inputs[path] = fnv1a(text);
  return text;
}

ColouredGraph load(const std::string& path) {
  auto g = parse_occ(read_input(path));
  require_valid(g);
  return g;
}

void emit(const std::string& path, const std::string& text) {
  run.outputs[path] = fnv1a(text);
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path);
  out << text;
}

std::string parity_line(const ColouredGraph& g, const CyclePath& c) {
  auto p = cycle_parity(g, c);
  std::string out = "parity";
  for (Colour k = 1; k <= g.r(); ++k) out += " " + std::to_string(k) + ":" + (p.test(k) ? "odd" : "even");
  return out;
}

// Re-checks a cycle against the graph before it is printed.
void check_witness(const ColouredGraph& g, const CyclePath& c, bool require_even) {
  if (!is_hamilton_cycle(g, c)) throw InternalError("computed cycle is not a Hamilton cycle");
  if (require_even && !is_even_coloured(g, c)) throw InternalError("computed cycle is not even-coloured");
}

// ---- construct ----

struct ConstructArgs {
  int m = 2, t = 1, n = 4, k = 1, r = 2, min_degree = -1;
  double c = 0.5, p = 0.5;
  std::string out = "-";
  std::string format = "occ";
};

int finish_construct(const ColouredGraph& g, const ConstructArgs& a) {
  emit(a.out, a.format == "json" ? to_json(g).dump() + "\n" : to_occ(g));
  run.outcome = "n=" + std::to_string(g.n()) + " r=" + std::to_string(g.r()) + " edges=" + std::to_string(g.edge_count());
  return kOk;
}

// ---- verify / exact ----

int cmd_verify(const std::string& in, std::uint64_t max_cycles, double max_seconds) {
  auto g = load(in);
  SearchBudget budget;
  if (max_cycles) budget.max_cycles = max_cycles;
  if (max_seconds > 0) budget.max_seconds = max_seconds;
  budget.parallel_width = run.jobs;
  auto res = find_even_coloured_hc(g, budget);
  switch (res.status) {
    case SearchStatus::None:
      std::cout << "NO-EVEN-HC\n";
      run.outcome = "no even Hamilton cycle; " + std::to_string(res.cycles_examined) + " cycles";
      return kOk;
    case SearchStatus::Witness:
      check_witness(g, *res.witness, true);
      std::cout << "EVEN-HC " << format_cycle(*res.witness) << "\n";
      run.outcome = "witness";
      return kFound;
    case SearchStatus::BudgetExhausted:
      break;
  }
  std::cout << "BUDGET-EXHAUSTED after " << res.cycles_examined << " cycles\n";
  run.outcome = "budget exhausted";
  return kBudget;
}

int cmd_exact(int n, const std::string& in, std::uint64_t max_nodes, double max_seconds) {
  ExactBudget budget;
  if (max_nodes) budget.max_nodes = max_nodes;
  if (max_seconds > 0) budget.max_seconds = max_seconds;
  auto res = in.empty() ? exact_odd_ramsey(n, budget) : exact_odd_ramsey(load(in), budget);
  if (res.exact()) {
    std::cout << "r_odd = " << res.lower << "\n";
    run.outcome = "exact " + std::to_string(res.lower);
    return kOk;
  }
  std::cout << "r_odd in [" << res.lower << ", " << res.upper << "] after " << res.nodes << " nodes\n";
  run.outcome = "bracket";
  return kBudget;
}

// ---- solve ----

int cmd_solve(const std::string& in, bool best_effort, bool audit, bool trace) {
  auto g = load(in);
  auto rep = solve_complete_report(g, {.best_effort = best_effort});
  check_witness(g, rep.cycle, false);
  if (trace)
    for (const auto& line : rep.trace) std::cout << "trace " << line << "\n";
  std::cout << "cycle " << format_cycle(rep.cycle) << "\n" << parity_line(g, rep.cycle) << "\n";
  if (audit)
    for (const auto& a : rep.audit)
      std::cout << "audit " << a.check << " " << (a.ok ? "ok" : "FAILED") << (a.detail.empty() ? "" : " " + a.detail)
                << "\n";
  const auto odd = odd_colour_classes(g, rep.cycle).size();
  run.outcome = std::to_string(odd) + " odd classes, " + std::to_string(rep.violations()) + " audit violations";
  return odd <= 1 && rep.violations() == 0 ? kOk : kFound;
}

// ---- dirac ----

const char* branch_name(DiracBranch b) {
  switch (b) {
    case DiracBranch::OddC4: return "odd-c4";
    case DiracBranch::OddC6: return "odd-c6";
    case DiracBranch::TwoClasses: return "two-classes";
  }
  return "?";
}

int cmd_dirac_solve(const std::string& in) {
  auto g = load(in);
  auto res = even_hc_super_dirac_report(g);
  check_witness(g, res.cycle, true);
  std::cout << "branch " << branch_name(res.branch) << "\n";
  if (res.odd_cycle) std::cout << "odd-cycle " << format_cycle(*res.odd_cycle) << "\n";
  std::cout << "cycle " << format_cycle(res.cycle) << "\n";
  run.outcome = branch_name(res.branch);
  return kOk;
}

int cmd_dirac_classify(const std::string& in) {
  auto g = load(in);
  auto rep = classify_agreement(g);
  if (rep.odd_c4) {
    std::cout << "odd-c4 " << format_cycle(*rep.odd_c4) << "\n";
    run.outcome = "odd C4";
    return kOk;
  }
  if (rep.odd_c6) {
    std::cout << "odd-c6 " << format_cycle(*rep.odd_c6) << "\n";
    run.outcome = "odd C6";
    return kOk;
  }
  std::string a, b;
  for (Vertex v = 0; v < g.n(); ++v) {
    std::string& side = rep.class_of[v] == 0 ? a : b;
    if (rep.class_of[v] < 0) continue;
    side += (side.empty() ? "" : " ") + std::to_string(v);
  }
  std::cout << "consistent " << (rep.consistent ? "yes" : "no") << "\n";
  std::cout << "class 0: " << a << "\nclass 1: " << b << "\n";
  run.outcome = rep.consistent ? "two classes" : "inconsistent";
  return kOk;
}

// ---- table ----

int cmd_table(const std::vector<int>& ns, bool pretty) {
  const double upper_c = 1.5 * std::sqrt(2.0);
  std::vector<std::vector<std::string>> rows{{"n", "lower_asymptotic", "construction_colours", "upper_bound", "verified"}};
  for (int n : ns) {
    if (n < 4 || n % 2) throw ParameterError("table needs even n >= 4");
    auto g = build_general_n(n);
    std::string verified = "-";
    if (n <= 12) {
      SearchBudget budget;
      budget.parallel_width = run.jobs;
      verified = find_even_coloured_hc(g, budget).status == SearchStatus::None ? "true" : "false";
    }
    rows.push_back({std::to_string(n), std::to_string(static_cast<int>(std::ceil(std::sqrt(n / 2.0) - 1e-12))),
                    std::to_string(g.r()), std::to_string(static_cast<int>(std::floor(upper_c * std::sqrt(n)))), verified});
  }
  std::vector<std::vector<std::string>> sparse{{"n", "delta", "sparse_bound"}};
  for (int n : ns)
    for (int d = n / 2; d < n; ++d) {
      const double b = std::min<double>(2.0 * d - n + 2, upper_c * d / std::sqrt(n) + 3);
      std::ostringstream cell;
      cell << b;
      sparse.push_back({std::to_string(n), std::to_string(d), cell.str()});
    }

  std::ostringstream out;
  auto print = [&](const std::vector<std::vector<std::string>>& table) {
    std::vector<std::size_t> width(table[0].size(), 0);
    for (const auto& row : table)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    for (const auto& row : table) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << (pretty ? "  " : "\t");
        out << (pretty ? std::string(width[i] - row[i].size(), ' ') : "") << row[i];
      }
      out << "\n";
    }
  };
  print(rows);
  out << "\n";
  print(sparse);
  emit("-", out.str());
  run.outcome = std::to_string(ns.size()) + " rows";
  return kOk;
}

void write_manifest(double seconds, int code) {
  json m{{"command", run.command},       {"parameters", run.parameters}, {"seed", run.seed},
         {"inputs", run.inputs},         {"outputs", run.outputs},       {"wall_seconds", seconds},
         {"exit_code", code},            {"outcome", run.outcome}};
  const std::string line = m.dump() + "\n";
  if (run.manifest_path.empty()) {
    std::cerr << line;
    return;
  }
  std::ofstream out(run.manifest_path, std::ios::app);
  out << line;
}

void record_parameters(const CLI::App* sub) {
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    auto values = opt->results();
    run.parameters[opt->get_name()] = values.size() == 1 ? json(values[0]) : json(values);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd-Ramsey numbers of Hamilton cycles: constructions, verification, and solvers"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", run.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--jobs", run.jobs, "Oracle worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  app.add_option("--manifest", run.manifest_path, "Append the run manifest to this file instead of stderr");

  std::function<int()> action;

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a colouring and write it as .occ");
  construct->require_subcommand(1);
  construct->fallthrough();
  construct->add_option("--out,-o", ca.out, "Output file, - for stdout")->capture_default_str();
  construct->add_option("--format", ca.format)->check(CLI::IsMember({"occ", "json"}))->capture_default_str();
  auto* field = construct->add_subcommand("field", "Field construction on K_{m 2^t}");
  field->add_option("--m", ca.m)->required();
  field->add_option("--t", ca.t)->required();
  field->callback([&] { action = [&] { return finish_construct(build_field_colouring(ca.m, ca.t), ca); }; });
  auto* general = construct->add_subcommand("general", "Construction on K_n for even n");
  general->add_option("--n", ca.n)->required();
  general->callback([&] { action = [&] { return finish_construct(build_general_n(ca.n), ca); }; });
  auto* blocks = construct->add_subcommand("blocks", "Three-block sparse construction");
  blocks->add_option("--n", ca.n)->required();
  blocks->add_option("--k", ca.k)->required();
  blocks->callback([&] { action = [&] { return finish_construct(build_three_block(ca.n, ca.k), ca); }; });
  auto* cayley = construct->add_subcommand("cayley", "Sparse Cayley construction");
  cayley->add_option("--n", ca.n)->required();
  cayley->add_option("--c", ca.c)->required();
  cayley->callback([&] { action = [&] { return finish_construct(build_sparse_cayley(ca.n, ca.c, run.seed), ca); }; });
  auto* random = construct->add_subcommand("random", "Uniform random colouring, complete or dense");
  random->add_option("--n", ca.n)->required();
  random->add_option("--r", ca.r)->required();
  random->add_option("--min-degree", ca.min_degree, "Sample a dense graph with this minimum degree");
  random->add_option("--p", ca.p, "Edge probability for --min-degree")->capture_default_str();
  random->callback([&] {
    action = [&] {
      auto g = ca.min_degree < 0 ? random_complete_colouring(ca.n, ca.r, run.seed)
                                 : random_dense_colouring(ca.n, ca.r, ca.min_degree, ca.p, run.seed);
      return finish_construct(g, ca);
    };
  });

  std::string in = "-";
  std::uint64_t budget_cycles = 0, budget_nodes = 0;
  double budget_seconds = 0;
  auto* verify = app.add_subcommand("verify", "Search for an even-coloured Hamilton cycle");
  verify->add_option("--in,-i", in, "Input .occ, - for stdin")->capture_default_str();
  verify->add_option("--budget-cycles", budget_cycles);
  verify->add_option("--budget-seconds", budget_seconds);
  verify->callback([&] { action = [&] { return cmd_verify(in, budget_cycles, budget_seconds); }; });

  int exact_n = 0;
  std::string exact_in;
  auto* exact = app.add_subcommand("exact", "Exact r_odd by colouring enumeration");
  auto* exact_n_opt = exact->add_option("--n", exact_n, "Complete host K_n");
  exact->add_option("--in,-i", exact_in, "Host graph file")->excludes(exact_n_opt);
  exact->add_option("--budget-nodes", budget_nodes);
  exact->add_option("--budget-seconds", budget_seconds);
  exact->callback([&] {
    if (exact_in.empty() && exact_n_opt->count() == 0) throw CLI::ValidationError("exact needs --n or --in");
    action = [&] { return cmd_exact(exact_n, exact_in, budget_nodes, budget_seconds); };
  });

  bool best_effort = false, audit = false, trace = false;
  auto* solve = app.add_subcommand("solve", "Hamilton cycle with at most one odd colour class");
  solve->add_option("--in,-i", in)->capture_default_str();
  solve->add_flag("--best-effort", best_effort, "Run below the guaranteed threshold");
  solve->add_flag("--audit", audit, "Print the invariant ledger");
  solve->add_flag("--trace", trace, "Print the step log");
  solve->callback([&] { action = [&] { return cmd_solve(in, best_effort, audit, trace); }; });

  auto* dsolve = app.add_subcommand("dirac-solve", "Even Hamilton cycle of a dense 2-coloured graph");
  dsolve->add_option("--in,-i", in)->capture_default_str();
  dsolve->callback([&] { action = [&] { return cmd_dirac_solve(in); }; });
  auto* dclass = app.add_subcommand("dirac-classify", "Agree/disagree classes or an odd C4/C6");
  dclass->add_option("--in,-i", in)->capture_default_str();
  dclass->callback([&] { action = [&] { return cmd_dirac_classify(in); }; });

  std::vector<int> table_n{4, 6, 8, 10, 12};
  bool pretty = false;
  auto* table = app.add_subcommand("table", "Bound table as TSV");
  table->add_option("--n", table_n, "Even n values")->delimiter(',')->capture_default_str();
  table->add_flag("--pretty", pretty, "Align columns");
  table->callback([&] { action = [&] { return cmd_table(table_n, pretty); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  for (const CLI::App* sub = &app; sub;) {
    record_parameters(sub);
    auto subs = sub->get_subcommands();
    if (subs.empty()) break;
    run.command += (run.command.empty() ? "" : " ") + subs[0]->get_name();
    sub = subs[0];
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    code = action();
  } catch (const ThresholdError& e) {
    std::cerr << "below threshold: " << e.what() << "\n";
    run.outcome = e.what();
    code = kUsage;
  } catch (const DegreeConditionError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    run.outcome = e.what();
    code = kUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    run.outcome = e.what();
    code = kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    run.outcome = e.what();
    code = kUsage;
  } catch (const InvalidGraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    run.outcome = e.what();
    code = kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    run.outcome = e.what();
    code = kFound;
  }
  std::cout.flush();
  write_manifest(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), code);
  return code;
}
