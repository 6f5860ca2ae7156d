#include "signcert/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

namespace signcert {

double relative_gap(double bound, double optimum) {
  if (bound == 0) return optimum == 0 ? 0.0 : 1.0;
  return (bound - optimum) / bound;
}

namespace {

RunReport run_one(const Instance& inst, const MethodSpec& spec, const ExperimentOptions& opt) {
  RunReport rep;
  rep.instance = inst.name;
  rep.method = to_string(spec.method);
  rep.level = spec.level;
  if (inst.min_value) rep.optimum = -to_double(*inst.min_value);
  if (opt.time_limit_s == 0) {
    rep.timed_out = true;
    rep.gap = 1.0;
    return rep;
  }

  const auto start = std::chrono::steady_clock::now();
  Relaxation r;
  switch (spec.method) {
    case RelaxMethod::kSheraliAdams1: r = sherali_adams_1(inst.f); break;
    case RelaxMethod::kSignedReformulation: r = build_signed_reformulation(inst.f, opt.relax); break;
    default: r = build_level_relaxation(inst.f, spec.level, spec.method, opt.relax); break;
  }
  SolveOptions so = opt.solve;
  if (opt.time_limit_s > 0) so.time_limit_s = opt.time_limit_s;
  RelaxResult res = solve_relaxation(r, so);
  rep.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.rows = res.rows;
  rep.cols = res.cols;

  const bool late = opt.time_limit_s > 0 && rep.time_s > opt.time_limit_s;
  if (res.status != LpStatus::kOptimal || late) {
    rep.timed_out = true;
    rep.gap = 1.0;
    return rep;
  }
  rep.bound = -to_double(res.lambda);
  if (rep.optimum) rep.gap = relative_gap(*rep.bound, *rep.optimum);
  return rep;
}

}  // namespace

std::vector<RunReport> run_experiment(const std::vector<Instance>& instances, const std::vector<MethodSpec>& methods,
                                      const ExperimentOptions& opt) {
  std::vector<std::pair<const Instance*, MethodSpec>> jobs;
  for (const auto& inst : instances) {
    for (const auto& spec : methods) {
      if (spec.method == RelaxMethod::kStandard || spec.method == RelaxMethod::kLovasz) {
        if (spec.level < 1 || spec.level > level_count(inst.f, spec.method)) continue;
      }
      jobs.emplace_back(&inst, spec);
    }
  }

  std::vector<RunReport> reports(jobs.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(opt.workers, 1));
  for (std::size_t begin = 0; begin < jobs.size(); begin += workers) {
    const std::size_t end = std::min(jobs.size(), begin + workers);
    if (workers == 1) {
      reports[begin] = run_one(*jobs[begin].first, jobs[begin].second, opt);
      continue;
    }
    std::vector<std::future<RunReport>> batch;
    for (std::size_t k = begin; k < end; ++k) {
      batch.push_back(std::async(std::launch::async, run_one, std::cref(*jobs[k].first), jobs[k].second, std::cref(opt)));
    }
    for (std::size_t k = begin; k < end; ++k) reports[k] = batch[k - begin].get();
  }

  std::stable_sort(reports.begin(), reports.end(), [](const RunReport& a, const RunReport& b) {
    if (a.instance != b.instance) return a.instance < b.instance;
    if (a.level != b.level) return a.level < b.level;
    return a.method < b.method;
  });
  return reports;
}

namespace {

std::string fmt(const std::optional<double>& v) {
  if (!v) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", *v);
  return buf;
}

std::optional<double> parse_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

}  // namespace

void write_csv(const std::vector<RunReport>& reports, std::ostream& os) {
  os << "instance,method,level,bound,optimum,gap,time_s,rows,cols\n";
  for (const auto& r : reports) {
    os << r.instance << ',' << r.method << ',' << r.level << ',' << fmt(r.bound) << ',' << fmt(r.optimum) << ','
       << fmt(r.gap) << ',' << fmt(r.time_s) << ',' << r.rows << ',' << r.cols << '\n';
  }
}

std::vector<RunReport> read_csv(std::istream& is) {
  std::vector<RunReport> out;
  std::string line;
  if (!std::getline(is, line)) return out;
  if (line.rfind("instance,method,level", 0) != 0) throw std::invalid_argument("csv: unexpected header '" + line + "'");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != 9) throw std::invalid_argument("csv: expected 9 columns in '" + line + "'");
    RunReport r;
    r.instance = cells[0];
    r.method = cells[1];
    r.level = std::stoi(cells[2]);
    r.bound = parse_opt(cells[3]);
    r.optimum = parse_opt(cells[4]);
    r.gap = parse_opt(cells[5]);
    r.time_s = cells[6].empty() ? 0.0 : std::stod(cells[6]);
    r.rows = std::stoul(cells[7]);
    r.cols = std::stoul(cells[8]);
    r.timed_out = !r.bound.has_value();
    out.push_back(std::move(r));
  }
  return out;
}

double shifted_geometric_mean(const std::vector<double>& values, double shift) {
  if (values.empty()) return 0.0;
  double acc = 0;
  for (double v : values) acc += std::log(v + shift);
  return std::exp(acc / static_cast<double>(values.size())) - shift;
}

std::vector<SummaryRow> summarize(const std::vector<RunReport>& reports) {
  std::map<std::pair<std::string, int>, std::vector<const RunReport*>> groups;
  for (const auto& r : reports) groups[{r.method, r.level}].push_back(&r);
  std::vector<SummaryRow> out;
  for (const auto& [key, rs] : groups) {
    SummaryRow row;
    row.method = key.first;
    row.level = key.second;
    row.runs = rs.size();
    std::vector<double> times, gaps;
    for (const auto* r : rs) {
      times.push_back(r->time_s);
      if (r->gap) gaps.push_back(*r->gap);
    }
    row.time_sgm = shifted_geometric_mean(times, 1.0);
    row.gap_sgm = shifted_geometric_mean(gaps, 0.01);
    double sum = 0;
    for (double g : gaps) sum += g;
    row.gap_mean = gaps.empty() ? 0.0 : sum / static_cast<double>(gaps.size());
    out.push_back(row);
  }
  return out;
}

std::string format_summary(const std::vector<SummaryRow>& rows) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-8s %5s %5s %12s %12s %12s\n", "method", "level", "runs", "time(sgm)", "gap(sgm)",
                "gap(mean)");
  os << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-8s %5d %5zu %12.4f %12.4f %12.4f\n", r.method.c_str(), r.level, r.runs, r.time_sgm,
                  r.gap_sgm, r.gap_mean);
    os << buf;
  }
  return os.str();
}

}  // namespace signcert
