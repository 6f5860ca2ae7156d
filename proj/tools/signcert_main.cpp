#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "signcert/experiment.hpp"
#include "signcert/lp_relax.hpp"
#include "signcert/maxcut.hpp"
#include "signcert/mincut.hpp"

using namespace signcert;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

// Reported as exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Loaded {
  Polynomial f;
  bool maxcut = false;
};

// "auto" picks rudy for *.rudy, *.mc and *.gset, the polynomial format otherwise.
Loaded load(const std::string& path, const std::string& format, int n_vars) {
  const std::string text = read_file(path);
  const bool rudy =
      format == "rudy" || (format == "auto" && (ends_with(path, ".rudy") || ends_with(path, ".mc") || ends_with(path, ".gset")));
  try {
    if (rudy) return {maxcut_to_bpo(parse_rudy(text)), true};
    return {parse_polynomial(text, n_vars > 0 ? std::optional<int>(n_vars) : std::nullopt), false};
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string point(const BinaryPoint& x) {
  std::string s;
  for (auto b : x) s += b ? '1' : '0';
  return s;
}

std::string exact_and_float(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", to_double(r));
  const std::string q = to_string(r);
  return q == buf ? q : q + " (" + buf + ")";
}

RelaxMethod parse_method(const std::string& m) {
  if (m == "std") return RelaxMethod::kStandard;
  if (m == "lov") return RelaxMethod::kLovasz;
  if (m == "sa1") return RelaxMethod::kSheraliAdams1;
  if (m == "ref") return RelaxMethod::kSignedReformulation;
  throw UsageError("unknown method '" + m + "'");
}

struct RelaxArgs {
  std::string input;
  std::string format = "auto";
  int vars = 0;
  std::string method = "std";
  int level = 1;
  std::string mode = "extended";
  bool use_float = false;
  bool symmetric_chains = false;
};

void add_relax_options(CLI::App* cmd, RelaxArgs& a) {
  cmd->add_option("input", a.input, "polynomial or rudy file")->required();
  cmd->add_option("--format", a.format, "auto, poly or rudy")->check(CLI::IsMember({"auto", "poly", "rudy"}));
  cmd->add_option("--vars", a.vars, "number of variables of a polynomial file (default: largest index)");
  cmd->add_option("--method", a.method, "std, lov, sa1 or ref")->check(CLI::IsMember({"std", "lov", "sa1", "ref"}));
  cmd->add_option("--level", a.level, "hierarchy level, 1-based");
  cmd->add_option("--mode", a.mode, "extended or cutplane")->check(CLI::IsMember({"extended", "cutplane"}));
  cmd->add_flag("--float", a.use_float, "floating-point simplex");
  cmd->add_flag("--chains", a.symmetric_chains, "symmetric-chain Lovász sets");
}

Relaxation build(const Polynomial& f, const RelaxArgs& a) {
  RelaxOptions opt;
  opt.mode = a.mode == "cutplane" ? SolveMode::kCuttingPlane : SolveMode::kExtended;
  opt.lovasz.symmetric_chains = a.symmetric_chains;
  const RelaxMethod m = parse_method(a.method);
  switch (m) {
    case RelaxMethod::kSheraliAdams1:
      if (a.level != 1) throw UsageError("sa1 has a single level");
      try {
        return sherali_adams_1(f);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    case RelaxMethod::kSignedReformulation:
      if (a.level != 1) throw UsageError("ref has a single level");
      return build_signed_reformulation(f, opt);
    default:
      try {
        return build_level_relaxation(f, a.level, m, opt);
      } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
      }
  }
}

int cmd_check(const std::string& path, int vars) {
  const Polynomial f = load(path, "poly", vars).f;
  if (!is_nns(f)) throw UsageError("check expects an NNS polynomial (classified " + to_string(classify(f)) + ")");
  const MinResult r = minimize_nns(f);
  std::printf("min = %s at x = %s\n", exact_and_float(r.value).c_str(), point(r.x).c_str());
  if (r.value >= 0) {
    std::printf("binary non-negative\n");
    return kOk;
  }
  std::printf("violated\n");
  return kViolated;
}

int cmd_min(const std::string& path, const std::string& format, int vars) {
  const Loaded in = load(path, format, vars);
  const bool nns = is_nns(in.f);
  MinResult r;
  if (nns) {
    r = minimize_nns(in.f);
  } else {
    try {
      r = brute_force_min(in.f);
    } catch (const std::length_error& e) {
      throw UsageError(e.what());
    }
  }
  std::printf("min = %s at x = %s (%s)\n", exact_and_float(r.value).c_str(), point(r.x).c_str(),
              nns ? "min cut" : "enumeration");
  if (in.maxcut) std::printf("maxcut = %s\n", exact_and_float(-r.value).c_str());
  return kOk;
}

int cmd_relax(const RelaxArgs& a, const std::string& opt_value, const std::string& cert_path) {
  const Loaded in = load(a.input, a.format, a.vars);
  const Relaxation r = build(in.f, a);
  SolveOptions so;
  so.arithmetic = a.use_float ? Arithmetic::kFloat : Arithmetic::kExact;
  const RelaxResult res = solve_relaxation(r, so);
  std::printf("method = %s, level = %d of %d, rows = %zu, cols = %zu\n", to_string(r.method).c_str(), r.level, r.levels,
              res.rows, res.cols);
  if (r.mode == SolveMode::kCuttingPlane) std::printf("iterations = %ld, cuts = %ld\n", res.iterations, res.cuts);
  if (res.status != LpStatus::kOptimal) {
    std::printf("status = %s\n", to_string(res.status).c_str());
    return kViolated;
  }
  std::printf("lambda = %s\n", exact_and_float(res.lambda).c_str());
  if (in.maxcut || !opt_value.empty()) {
    // Maximization convention: the bound is -lambda and the optimum is -min f.
    const double bound = -to_double(res.lambda);
    std::printf("bound = %.10g\n", bound);
    if (!opt_value.empty()) {
      double opt = 0;
      try {
        opt = std::stod(opt_value);
      } catch (const std::exception&) {
        throw UsageError("--opt expects a number");
      }
      std::printf("gap = %.6f\n", relative_gap(bound, opt));
    }
  }
  if (!cert_path.empty()) {
    std::ofstream out(cert_path);
    if (!out) throw UsageError("cannot write " + cert_path);
    out << certificate_to_json(extract_certificate(r, res.solution, !a.use_float)) << '\n';
  }
  return kOk;
}

int cmd_export(const RelaxArgs& a, const std::string& mps_path, const std::string& names_path) {
  const Loaded in = load(a.input, a.format, a.vars);
  RelaxArgs ext = a;
  ext.mode = "extended";
  const Relaxation r = build(in.f, ext);
  std::ofstream mps(mps_path);
  if (!mps) throw UsageError("cannot write " + mps_path);
  std::ofstream names;
  if (!names_path.empty()) {
    names.open(names_path);
    if (!names) throw UsageError("cannot write " + names_path);
  }
  write_mps(r.model, mps, names_path.empty() ? nullptr : &names);
  std::printf("wrote %zu rows, %zu columns to %s\n", r.model.num_rows(), r.model.num_vars(), mps_path.c_str());
  return kOk;
}

int cmd_report(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<RunReport> reports;
  try {
    reports = read_csv(in);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  std::cout << format_summary(summarize(reports));
  return kOk;
}

struct RunArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> methods{"sa1", "std"};
  std::vector<int> levels{1};
  std::string optima;
  std::string csv;
  int random_graphs = 0;
  int nodes = 30;
  double density = 0.1;
  double time_limit = -1;
  int workers = 1;
  bool use_float = false;
};

// "name value" per line; values are maximization-convention optima.
std::map<std::string, Rational> read_optima(const std::string& path) {
  std::map<std::string, Rational> out;
  std::istringstream in(read_file(path));
  std::string name, value;
  while (in >> name >> value) out[name] = parse_rational(value);
  return out;
}

std::string stem(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

int cmd_run(const RunArgs& a, std::uint64_t seed) {
  std::vector<Instance> instances;
  const auto optima = a.optima.empty() ? std::map<std::string, Rational>{} : read_optima(a.optima);
  for (const auto& path : a.inputs) {
    Loaded in = load(path, "auto", 0);
    Instance inst{stem(path), std::move(in.f), std::nullopt};
    if (auto it = optima.find(inst.name); it != optima.end()) inst.min_value = -it->second;
    instances.push_back(std::move(inst));
  }
  for (int k = 0; k < a.random_graphs; ++k) {
    const Graph g = random_pm1_graph(a.nodes, a.density, seed + static_cast<std::uint64_t>(k));
    Instance inst{"rand" + std::to_string(k), maxcut_to_bpo(g), std::nullopt};
    try {
      inst.min_value = -maxcut_brute_force(g).value;
    } catch (const std::length_error&) {
      // Optimum unknown; the report leaves the gap empty.
    }
    instances.push_back(std::move(inst));
  }
  if (instances.empty()) throw UsageError("no instances (give files or --random)");

  std::vector<MethodSpec> specs;
  for (const auto& m : a.methods) {
    const RelaxMethod rm = parse_method(m);
    if (rm == RelaxMethod::kSheraliAdams1 || rm == RelaxMethod::kSignedReformulation) {
      specs.push_back({rm, 1});
      continue;
    }
    for (int l : a.levels) specs.push_back({rm, l});
  }
  ExperimentOptions opt;
  opt.solve.arithmetic = a.use_float ? Arithmetic::kFloat : Arithmetic::kExact;
  opt.time_limit_s = a.time_limit;
  opt.workers = a.workers;
  const auto reports = run_experiment(instances, specs, opt);

  if (!a.csv.empty()) {
    std::ofstream out(a.csv);
    if (!out) throw UsageError("cannot write " + a.csv);
    write_csv(reports, out);
  } else {
    write_csv(reports, std::cout);
  }
  std::cout << format_summary(summarize(reports));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed-support certificates and LP relaxations for binary polynomial optimization"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for randomly generated instances");

  std::string path;
  int vars = 0;
  auto* check = app.add_subcommand("check", "certify binary non-negativity of an NNS polynomial by min cut");
  check->add_option("input", path, "polynomial file")->required();
  check->add_option("--vars", vars, "number of variables");

  std::string format = "auto";
  auto* min = app.add_subcommand("min", "exact minimum by min cut (NNS) or enumeration");
  min->add_option("input", path, "polynomial or rudy file")->required();
  min->add_option("--format", format, "auto, poly or rudy")->check(CLI::IsMember({"auto", "poly", "rudy"}));
  min->add_option("--vars", vars, "number of variables");

  RelaxArgs relax_args;
  std::string opt_value, cert_path;
  auto* relax = app.add_subcommand("relax", "solve one relaxation and print its bound");
  add_relax_options(relax, relax_args);
  relax->add_option("--opt", opt_value, "known optimum in maximization convention, for the gap");
  relax->add_option("--cert", cert_path, "write the decoded certificate as JSON");

  RelaxArgs export_args;
  std::string mps_path, names_path;
  auto* exp = app.add_subcommand("export", "write a relaxation as fixed-format MPS");
  add_relax_options(exp, export_args);
  exp->add_option("--mps", mps_path, "output MPS file")->required();
  exp->add_option("--names", names_path, "output name map");

  auto* report = app.add_subcommand("report", "summarize a results CSV");
  report->add_option("csv", path, "results file")->required();

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "run methods and levels over a batch of instances");
  run->add_option("inputs", run_args.inputs, "polynomial or rudy files");
  run->add_option("--methods", run_args.methods, "any of std lov sa1 ref");
  run->add_option("--levels", run_args.levels, "levels for std and lov");
  run->add_option("--optima", run_args.optima, "file of 'name value' optima (maximization convention)");
  run->add_option("--csv", run_args.csv, "write the CSV here instead of stdout");
  run->add_option("--random", run_args.random_graphs, "add this many random +-1 graphs");
  run->add_option("--nodes", run_args.nodes, "nodes per random graph");
  run->add_option("--density", run_args.density, "edge density of random graphs");
  run->add_option("--time-limit", run_args.time_limit, "seconds per run; 0 times out every run");
  run->add_option("--workers", run_args.workers, "concurrent runs");
  run->add_flag("--float", run_args.use_float, "floating-point simplex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(path, vars);
    if (*min) return cmd_min(path, format, vars);
    if (*relax) return cmd_relax(relax_args, opt_value, cert_path);
    if (*exp) return cmd_export(export_args, mps_path, names_path);
    if (*report) return cmd_report(path);
    if (*run) return cmd_run(run_args, seed);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kViolated;
  }
  return kUsage;
}
