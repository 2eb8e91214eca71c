#include "gtsprd/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <json.hpp>
#include <random>
#include <sstream>

#include "gtsprd/distance_extremity.hpp"
#include "gtsprd/distance_general.hpp"
#include "gtsprd/io.hpp"
#include "gtsprd/oracle.hpp"
#include "gtsprd/time_extremity.hpp"
#include "gtsprd/time_general.hpp"

namespace gtsprd {

using json = nlohmann::json;

namespace {

template <Scalar T>
const CanonicalSide<T>* only_side(const GeneralInstance<T>& inst) {
  if (inst.left.empty()) return &inst.right;
  if (inst.right.empty()) return &inst.left;
  return nullptr;
}

template <Scalar T>
SolveOutcome<T> solve_time(const GeneralInstance<T>& inst, const std::string& algo) {
  const auto* side = only_side(inst);
  std::string name = algo;
  if (name == "fast") name = side ? "linear" : "minqueue";
  if (name == "baseline") name = side ? "quadratic" : "cubic";
  if ((name == "linear" || name == "quadratic") && !side) {
    throw UsageError("algorithm '" + name + "' needs the depot at an extremity");
  }
  if (name == "linear") return {"time_linear", solve_time_linear(*side).solution};
  if (name == "quadratic") return {"time_quadratic", solve_time_quadratic(*side).solution};
  if (name == "minqueue") return {"time_2d_minqueue", solve_time_2d_minqueue(inst).solution};
  if (name == "cubic") return {"time_2d_cubic", solve_time_2d_cubic(inst).solution};
  if (name == "oracle") return {"time_oracle", oracle_time(inst).witness};
  throw UsageError("unknown time algorithm '" + algo + "'");
}

template <Scalar T>
SolveOutcome<T> solve_distance(const GeneralInstance<T>& inst, const std::string& algo, T deadline) {
  const auto* side = only_side(inst);
  std::string name = algo;
  if (name == "fast") name = side ? "heap" : "heap2d";
  if (name == "baseline") name = side ? "quadratic" : "cubic";
  if ((name == "heap" || name == "quadratic") && !side) {
    throw UsageError("algorithm '" + name + "' needs the depot at an extremity");
  }
  if (name == "heap") return {"distance_heap", solve_distance_heap(*side, deadline).solution};
  if (name == "quadratic") return {"distance_quadratic", solve_distance_quadratic(*side, deadline).solution};
  if (name == "heap2d") return {"distance_2d_heap", solve_distance_2d_heap(inst, deadline).solution};
  if (name == "cubic") return {"distance_2d_cubic", solve_distance_2d_cubic(inst, deadline).solution};
  if (name == "oracle") return {"distance_oracle", oracle_distance(inst, deadline).witness};
  throw UsageError("unknown distance algorithm '" + algo + "'");
}

}  // namespace

template <Scalar T>
SolveOutcome<T> solve_with(const GeneralInstance<T>& inst, Objective objective, const std::string& algo,
                           std::optional<T> deadline) {
  if (objective == Objective::Time) return solve_time(inst, algo);
  if (!deadline) throw UsageError("the distance objective needs a deadline");
  return solve_distance(inst, algo, *deadline);
}

template SolveOutcome<std::int64_t> solve_with(const GeneralInstance<std::int64_t>&, Objective, const std::string&,
                                               std::optional<std::int64_t>);
template SolveOutcome<double> solve_with(const GeneralInstance<double>&, Objective, const std::string&,
                                         std::optional<double>);

namespace {

Objective parse_objective(const std::string& s) {
  if (s == "time") return Objective::Time;
  if (s == "distance") return Objective::Distance;
  throw UsageError("objective must be 'time' or 'distance'");
}

std::string format_violations(const std::vector<Violation>& vs) {
  std::ostringstream os;
  for (const auto& v : vs) os << to_string(v.kind) << ": " << v.detail << '\n';
  return os.str();
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string objective = "time";
  std::string algo = "fast";
  std::optional<double> deadline;
  std::string out;
};

template <Scalar T>
int run_solve(const SolveArgs& a, const RawPathInstance& raw, std::ostream& out, std::ostream& err) {
  const Objective objective = parse_objective(a.objective);
  GeneralInstance<T> inst = split_at_depot<T>(raw);
  std::optional<T> deadline = inst.deadline;
  if (a.deadline) deadline = to_scalar<T>(*a.deadline);

  auto start = std::chrono::steady_clock::now();
  SolveOutcome<T> outcome = solve_with(inst, objective, a.algo, deadline);
  auto wall = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);

  json report;
  report["instance"] = {{"file", a.instance},
                        {"vertices", raw.vertices.size()},
                        {"customers", raw.customer_count()},
                        {"depot", raw.depot},
                        {"n_left", inst.left.size()},
                        {"n_right", inst.right.size()},
                        {"integral", raw.integral}};
  report["algorithm"] = outcome.algorithm;
  report["objective"] = to_string(objective);
  report["deadline"] = deadline ? json(*deadline) : json(nullptr);
  report["feasible"] = outcome.solution.has_value();
  if (outcome.solution) {
    auto violations = validate_solution(inst, *outcome.solution, objective == Objective::Distance ? deadline : std::nullopt);
    auto label_violations = validate_deliveries(raw, *outcome.solution);
    violations.insert(violations.end(), label_violations.begin(), label_violations.end());
    if (!violations.empty()) {
      err << "internal error: solver returned an invalid solution\n" << format_violations(violations);
      return kExitMismatch;
    }
    json sol = solution_to_json(*outcome.solution);
    report["value"] = sol["value"];
    report["routes"] = sol["routes"];
  } else {
    report["value"] = nullptr;
    report["routes"] = json::array();
  }
  report["wall_ns"] = wall.count();

  const std::string text = report.dump(2) + "\n";
  if (a.out.empty()) {
    out << text;
  } else {
    write_file(a.out, text);
  }
  if (!outcome.solution) {
    err << "infeasible: no schedule meets the deadline\n";
    return kExitInfeasible;
  }
  return kExitOk;
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
  std::size_t left = 0;
  std::size_t right = 5;
  std::int64_t max_edge = 10;
  std::int64_t max_release = 100;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::string out = ".";
};

std::string instance_file_name(std::size_t k) {
  std::ostringstream os;
  os << "instance_" << std::setw(4) << std::setfill('0') << k << ".json";
  return os.str();
}

int run_generate(const GenerateArgs& a, std::ostream& out) {
  if (a.max_edge < 1 || a.max_release < 1) throw UsageError("--max-edge and --max-release must be positive");
  std::filesystem::create_directories(a.out);
  for (std::size_t k = 0; k < a.count; ++k) {
    RawPathInstance inst = generate_instance(a.left, a.right, a.max_edge, a.max_release, a.seed + k);
    write_file((std::filesystem::path(a.out) / instance_file_name(k)).string(), dump_instance(inst) + "\n");
  }
  out << "wrote " << a.count << " instances to " << a.out << '\n';
  return kExitOk;
}

// ---- crosscheck -----------------------------------------------------------

struct CrosscheckArgs {
  std::size_t count = 100;
  std::size_t max_n = 10;
  std::uint64_t seed = 1;
  std::string objective = "both";
};

using I64 = std::int64_t;

std::string opt_str(const std::optional<I64>& v) { return v ? std::to_string(*v) : "infeasible"; }

// Compares fast, baseline and (small instances) oracle on one instance.
// Returns a description of every disagreement.
std::vector<std::string> crosscheck_instance(const RawPathInstance& raw, bool check_time, bool check_distance,
                                             I64 deadline) {
  std::vector<std::string> issues;
  const GeneralInstance<I64> inst = split_at_depot<I64>(raw);
  const bool small = inst.customer_count() <= kOracleMaxCustomers;
  auto check_valid = [&](const std::string& who, const Solution<I64>& sol, std::optional<I64> d) {
    auto vs = validate_solution(inst, sol, d);
    auto ls = validate_deliveries(raw, sol);
    if (!vs.empty() || !ls.empty()) issues.push_back(who + " returned an invalid solution");
  };

  if (check_time) {
    auto fast = solve_time_2d_minqueue(inst);
    auto base = solve_time_2d_cubic(inst);
    if (fast.trace.c != base.trace.c) issues.push_back("time: minqueue and cubic tables differ");
    check_valid("time_2d_minqueue", fast.solution, std::nullopt);
    check_valid("time_2d_cubic", base.solution, std::nullopt);
    if (const auto* side = only_side(inst)) {
      auto lin = solve_time_linear(*side);
      auto quad = solve_time_quadratic(*side);
      if (lin.trace.c != quad.trace.c) issues.push_back("time: linear and quadratic arrays differ");
      if (lin.solution.value != fast.solution.value) issues.push_back("time: 1-D and 2-D values differ");
      check_valid("time_linear", lin.solution, std::nullopt);
    }
    if (small) {
      auto oracle = oracle_time(inst);
      if (oracle.value != fast.solution.value) {
        issues.push_back("time: fast " + std::to_string(fast.solution.value) + " vs oracle " + opt_str(oracle.value));
      }
    }
  }
  if (check_distance) {
    auto fast = solve_distance_2d_heap(inst, deadline);
    auto base = solve_distance_2d_cubic(inst, deadline);
    auto value_of = [](const auto& r) { return r.solution ? std::optional<I64>(r.solution->value) : std::nullopt; };
    if (fast.trace.lambda != base.trace.lambda) issues.push_back("distance: heap2d and cubic tables differ");
    if (fast.solution) check_valid("distance_2d_heap", *fast.solution, deadline);
    if (base.solution) check_valid("distance_2d_cubic", *base.solution, deadline);
    if (const auto* side = only_side(inst)) {
      auto heap = solve_distance_heap(*side, deadline);
      auto quad = solve_distance_quadratic(*side, deadline);
      if (heap.trace.lambda != quad.trace.lambda) issues.push_back("distance: heap and quadratic arrays differ");
      if (value_of(heap) != value_of(fast)) issues.push_back("distance: 1-D and 2-D verdicts differ");
      if (heap.solution) check_valid("distance_heap", *heap.solution, deadline);
    }
    if (small) {
      auto oracle = oracle_distance(inst, deadline);
      if (oracle.value != value_of(fast)) {
        issues.push_back("distance (D=" + std::to_string(deadline) + "): fast " + opt_str(value_of(fast)) +
                         " vs oracle " + opt_str(oracle.value));
      }
    }
  }
  return issues;
}

int run_crosscheck(const CrosscheckArgs& a, std::ostream& out, std::ostream& err) {
  const bool time = a.objective == "time" || a.objective == "both";
  const bool distance = a.objective == "distance" || a.objective == "both";
  if (!time && !distance) throw UsageError("--objective must be time, distance or both");

  std::mt19937_64 rng(a.seed);
  std::size_t mismatches = 0;
  for (std::size_t k = 0; k < a.count; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, a.max_n)(rng);
    const std::size_t nl = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    const RawPathInstance raw = generate_instance(nl, n - nl, 20, 100, rng());
    const auto inst = split_at_depot<I64>(raw);
    const I64 left_far = inst.left.empty() ? 0 : inst.left.tau(1);
    const I64 right_far = inst.right.empty() ? 0 : inst.right.tau(1);
    const I64 slack = 100 + 2 * left_far + 2 * right_far;
    const I64 deadline = std::uniform_int_distribution<I64>(0, slack)(rng);

    auto issues = crosscheck_instance(raw, time, distance, deadline);
    if (!issues.empty()) {
      ++mismatches;
      err << "instance " << k << " (n_left=" << nl << ", n_right=" << n - nl << "):\n";
      for (const auto& s : issues) err << "  " << s << '\n';
      err << dump_instance(raw) << '\n';
    }
  }
  out << "crosscheck: " << a.count << " instances, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
  std::vector<std::string> algos{"time-linear"};
  std::string sizes = "1e3,1e4";
  std::size_t reps = 3;
  std::string csv;
  std::uint64_t seed = 1;
};

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad size '" + item + "'");
    }
    if (used != item.size() || v < 0 || v != std::floor(v)) throw UsageError("bad size '" + item + "'");
    sizes.push_back(static_cast<std::size_t>(v));
  }
  if (sizes.empty()) throw UsageError("--sizes is empty");
  return sizes;
}

const std::vector<std::string>& bench_algorithms() {
  static const std::vector<std::string> names{"time-linear",   "time-quadratic",     "time-minqueue",
                                              "time-cubic",    "distance-heap",      "distance-quadratic",
                                              "distance-heap2d", "distance-cubic"};
  return names;
}

int run_bench(const BenchArgs& a, std::ostream& out) {
  const auto sizes = parse_sizes(a.sizes);
  for (const auto& name : a.algos) {
    if (std::find(bench_algorithms().begin(), bench_algorithms().end(), name) == bench_algorithms().end()) {
      throw UsageError("unknown bench algorithm '" + name + "'");
    }
  }
  std::ostringstream csv;
  csv << "algo,objective,n_left,n_right,rep,wall_ns,value\n";
  std::mt19937_64 rng(a.seed);
  for (const auto& name : a.algos) {
    const bool two_sided = name.ends_with("minqueue") || name.ends_with("cubic") || name.ends_with("heap2d");
    const Objective objective = name.starts_with("time") ? Objective::Time : Objective::Distance;
    for (std::size_t n : sizes) {
      for (std::size_t rep = 0; rep < a.reps; ++rep) {
        const std::size_t nl = two_sided ? n / 2 : 0;
        const std::size_t nr = n - nl;
        const auto max_release = static_cast<I64>(10 * std::max<std::size_t>(n, 1));
        GeneralInstance<I64> inst;
        inst.left = random_canonical_side(Side::Left, nl, 50, max_release, rng);
        inst.right = random_canonical_side(Side::Right, nr, 50, max_release, rng);
        const I64 deadline = max_release + 2 * (nl ? inst.left.tau(1) : 0) + 2 * (nr ? inst.right.tau(1) : 0);

        std::optional<I64> value;
        auto start = std::chrono::steady_clock::now();
        if (name == "time-linear") value = solve_time_linear(inst.right).solution.value;
        if (name == "time-quadratic") value = solve_time_quadratic(inst.right).solution.value;
        if (name == "time-minqueue") value = solve_time_2d_minqueue(inst).solution.value;
        if (name == "time-cubic") value = solve_time_2d_cubic(inst).solution.value;
        auto take = [&value](const auto& sol) {
          if (sol) value = sol->value;
        };
        if (name == "distance-heap") take(solve_distance_heap(inst.right, deadline).solution);
        if (name == "distance-quadratic") take(solve_distance_quadratic(inst.right, deadline).solution);
        if (name == "distance-heap2d") take(solve_distance_2d_heap(inst, deadline).solution);
        if (name == "distance-cubic") take(solve_distance_2d_cubic(inst, deadline).solution);
        auto wall = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);

        csv << name << ',' << to_string(objective) << ',' << nl << ',' << nr << ',' << rep << ',' << wall.count()
            << ',' << (value ? std::to_string(*value) : std::string("infeasible")) << '\n';
      }
    }
  }
  if (a.csv.empty()) {
    out << csv.str();
  } else {
    write_file(a.csv, csv.str());
    out << "wrote " << a.csv << '\n';
  }
  return kExitOk;
}

// ---- validate -------------------------------------------------------------

struct ValidateArgs {
  std::string instance;
  std::string solution;
  std::optional<double> deadline;
};

template <Scalar T>
int run_validate(const ValidateArgs& a, const RawPathInstance& raw, std::ostream& out, std::ostream& err) {
  json doc;
  try {
    doc = json::parse(read_file(a.solution));
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("solution is not valid JSON: ") + e.what());
  }
  if (doc.contains("feasible") && doc["feasible"].is_boolean() && !doc["feasible"].get<bool>()) {
    err << "report is infeasible; there is no schedule to validate\n";
    return kExitInfeasible;
  }
  Solution<T> sol;
  try {
    sol = solution_from_json<T>(doc);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad solution document: ") + e.what());
  }
  const GeneralInstance<T> inst = split_at_depot<T>(raw);
  std::optional<T> deadline;
  if (a.deadline) {
    deadline = to_scalar<T>(*a.deadline);
  } else if (doc.contains("deadline") && doc["deadline"].is_number()) {
    deadline = to_scalar<T>(doc["deadline"].get<double>());
  } else if (sol.objective == Objective::Distance) {
    deadline = inst.deadline;
  }
  auto violations = validate_solution(inst, sol, deadline);
  auto label_violations = validate_deliveries(raw, sol);
  violations.insert(violations.end(), label_violations.begin(), label_violations.end());
  if (violations.empty()) {
    out << "valid: " << sol.routes.size() << " routes, " << to_string(sol.objective) << " " << sol.value << '\n';
    return kExitOk;
  }
  out << format_violations(violations);
  return kExitInfeasible;
}

RawPathInstance load_instance(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return parse_instance(text);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers for the graphical TSP with release dates on paths", "gtsprd"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one JSON instance and print a run report");
  solve_cmd->add_option("instance,-i,--instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--objective", solve.objective, "time or distance")->check(CLI::IsMember({"time", "distance"}));
  solve_cmd->add_option("--algo", solve.algo,
                        "fast, baseline, oracle, linear, quadratic, heap, minqueue, cubic or heap2d");
  solve_cmd->add_option("--deadline", solve.deadline, "Deadline for the distance objective");
  solve_cmd->add_option("--out", solve.out, "Write the report here instead of stdout");

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Write random path instances");
  gen_cmd->add_option("--left", gen.left, "Customers left of the depot");
  gen_cmd->add_option("--right", gen.right, "Customers right of the depot");
  gen_cmd->add_option("--max-edge", gen.max_edge, "Edge weights are drawn from [1, max-edge]");
  gen_cmd->add_option("--max-release", gen.max_release, "Releases are drawn from [0, max-release]");
  gen_cmd->add_option("--seed", gen.seed, "Seed of the first instance; instance k uses seed + k");
  gen_cmd->add_option("--count", gen.count, "Number of instances");
  gen_cmd->add_option("--out", gen.out, "Output directory");

  CrosscheckArgs cc;
  auto* cc_cmd = app.add_subcommand("crosscheck", "Compare fast, baseline and oracle solvers on random instances");
  cc_cmd->add_option("--count", cc.count, "Number of instances");
  cc_cmd->add_option("--max-n", cc.max_n, "Largest customer count");
  cc_cmd->add_option("--seed", cc.seed, "Random seed");
  cc_cmd->add_option("--objective", cc.objective, "time, distance or both")
      ->check(CLI::IsMember({"time", "distance", "both"}));

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time solvers on random canonical instances (CSV)");
  bench_cmd->add_option("--algo", bench.algos, "Algorithms to time")->delimiter(',')->check(CLI::IsMember(bench_algorithms()));
  bench_cmd->add_option("--sizes", bench.sizes, "Comma separated customer counts, e.g. 1e3,1e4");
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per size");
  bench_cmd->add_option("--csv", bench.csv, "Write CSV here instead of stdout");
  bench_cmd->add_option("--seed", bench.seed, "Random seed");

  ValidateArgs val;
  auto* val_cmd = app.add_subcommand("validate", "Check a solution or run report against an instance");
  val_cmd->add_option("--instance", val.instance, "Instance file")->required();
  val_cmd->add_option("--solution", val.solution, "Solution or run report file")->required();
  val_cmd->add_option("--deadline", val.deadline, "Deadline to enforce");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*solve_cmd) {
      RawPathInstance raw = load_instance(solve.instance);
      return raw.integral ? run_solve<std::int64_t>(solve, raw, out, err) : run_solve<double>(solve, raw, out, err);
    }
    if (*gen_cmd) return run_generate(gen, out);
    if (*cc_cmd) return run_crosscheck(cc, out, err);
    if (*bench_cmd) return run_bench(bench, out);
    if (*val_cmd) {
      RawPathInstance raw = load_instance(val.instance);
      return raw.integral ? run_validate<std::int64_t>(val, raw, out, err)
                          : run_validate<double>(val, raw, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InstanceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gtsprd
