#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gtsprd/instance.hpp"
#include "gtsprd/solution.hpp"

namespace gtsprd {

enum ExitCode : int { kExitOk = 0, kExitInfeasible = 1, kExitUsage = 2, kExitMismatch = 3 };

class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

template <Scalar T>
struct SolveOutcome {
  std::string algorithm;  // resolved name, e.g. "time_linear"
  std::optional<Solution<T>> solution;
};

/// Runs one solver by name. `algo` is "fast", "baseline" or "oracle", or a
/// specific solver: linear / quadratic / heap (depot on an extremity) and
/// minqueue / cubic / heap2d (any depot). Throws UsageError for unknown
/// names, extremity solvers on two-sided instances, or a distance run
/// without a deadline.
template <Scalar T>
SolveOutcome<T> solve_with(const GeneralInstance<T>& inst, Objective objective, const std::string& algo,
                           std::optional<T> deadline);

// Subcommands: solve, generate, crosscheck, bench, validate. `args` excludes
// the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtsprd
