#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "signcert/lp_model.hpp"

namespace signcert {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit, kTimeLimit };

std::string to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  /// Indexed by model variable id; empty unless optimal.
  std::vector<Rational> values;
  long pivots = 0;
};

enum class Arithmetic { kExact, kFloat };

struct SolveOptions {
  Arithmetic arithmetic = Arithmetic::kExact;
  /// Consecutive degenerate pivots tolerated before switching to Bland's rule
  /// for the rest of the degenerate run. Float mode uses at least 4 * rows.
  int degenerate_limit = 50;
  /// 0 means unlimited.
  long max_pivots = 0;
  /// Wall-clock seconds; 0 means unlimited.
  double time_limit_s = 0;
};

/// Two-phase primal simplex. Exact mode pivots a sparse rational tableau with
/// Dantzig pricing. Float mode substitutes out equality-defined columns, then
/// runs a revised simplex on doubles (product-form inverse, Devex pricing,
/// Harris ratio test) and returns the exact rationals of the computed doubles.
LpSolution solve(const LpModel& model, const SolveOptions& opt = {});

/// A cut lhs >= 0 proposed by a separation oracle.
struct Cut {
  std::string name;
  LinExpr lhs;
};

/// Returns cuts violated by the given master solution; empty when none exist.
using CutOracle = std::function<std::vector<Cut>(const LpSolution&)>;

struct CuttingPlaneOptions {
  SolveOptions solve;
  /// 0 selects 10 * (rows of the master).
  long max_iterations = 0;
};

struct CuttingPlaneResult {
  LpSolution solution;
  long iterations = 0;
  long cuts_added = 0;
  LpModel final_model;
};

/// Solve, separate, add violated cuts, repeat. Duplicate cuts are rejected by
/// row hash. Throws std::runtime_error when the iteration cap is exceeded.
CuttingPlaneResult solve_cutting_plane(LpModel master, const CutOracle& oracle, const CuttingPlaneOptions& opt = {});

}  // namespace signcert
