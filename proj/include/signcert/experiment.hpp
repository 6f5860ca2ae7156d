#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "signcert/lp_relax.hpp"
#include "signcert/polynomial.hpp"

namespace signcert {

/// A BPO instance min f. Bounds and optima are reported in maximization
/// convention: lambda' = -lambda and lambda* = -min f (for Max-Cut instances
/// these are the cut upper bound and the maximum cut).
struct Instance {
  std::string name;
  Polynomial f;
  /// min f itself, when known.
  std::optional<Rational> min_value;
};

struct MethodSpec {
  RelaxMethod method = RelaxMethod::kStandard;
  int level = 1;
};

struct RunReport {
  std::string instance;
  std::string method;
  int level = 1;
  /// lambda' = -lambda; nullopt when the run did not finish.
  std::optional<double> bound;
  std::optional<double> optimum;
  /// (lambda' - lambda*) / lambda'; 1 for timed-out runs.
  std::optional<double> gap;
  double time_s = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool timed_out = false;
};

struct ExperimentOptions {
  SolveOptions solve;
  RelaxOptions relax;
  /// Per run, in seconds; negative disables the limit and 0 times out every run.
  double time_limit_s = -1;
  int workers = 1;
};

/// Runs every (instance, method) pair whose level is in range for the
/// instance. Reports are sorted by instance name, then level, then method.
std::vector<RunReport> run_experiment(const std::vector<Instance>& instances, const std::vector<MethodSpec>& methods,
                                      const ExperimentOptions& opt = {});

double relative_gap(double bound, double optimum);

/// Columns: instance,method,level,bound,optimum,gap,time_s,rows,cols.
void write_csv(const std::vector<RunReport>& reports, std::ostream& os);
std::vector<RunReport> read_csv(std::istream& is);

/// exp(mean(log(v + shift))) - shift.
double shifted_geometric_mean(const std::vector<double>& values, double shift);

struct SummaryRow {
  std::string method;
  int level = 1;
  std::size_t runs = 0;
  double time_sgm = 0;
  double gap_sgm = 0;
  double gap_mean = 0;
};

/// One row per (method, level); time shift 1 s, gap shift 0.01.
std::vector<SummaryRow> summarize(const std::vector<RunReport>& reports);
std::string format_summary(const std::vector<SummaryRow>& rows);

}  // namespace signcert
