#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "signcert/lp_solve.hpp"

namespace signcert {

namespace {

// Canonical text of a row after scaling its leading coefficient to +-1.
std::string row_key(const LinExpr& e) {
  if (e.terms().empty()) return "const:" + to_string(sgn(e.constant()));
  Rational scale = abs(e.terms().begin()->second);
  std::string key = to_string(e.constant() / scale);
  for (const auto& [v, c] : e.terms()) key += "|" + std::to_string(v) + ":" + to_string(c / scale);
  return key;
}

}  // namespace

CuttingPlaneResult solve_cutting_plane(LpModel master, const CutOracle& oracle, const CuttingPlaneOptions& opt) {
  const long cap = opt.max_iterations > 0 ? opt.max_iterations : 10 * static_cast<long>(std::max<std::size_t>(master.num_rows(), 1));
  const Rational tolerance = opt.solve.arithmetic == Arithmetic::kFloat ? from_double(1e-9) : Rational(0);
  std::unordered_set<std::string> seen;
  CuttingPlaneResult res;
  for (long it = 1;; ++it) {
    if (it > cap) throw std::runtime_error("cutting-plane iteration cap " + std::to_string(cap) + " exceeded");
    res.iterations = it;
    res.solution = solve(master, opt.solve);
    if (res.solution.status != LpStatus::kOptimal) break;

    std::size_t added = 0;
    for (auto& cut : oracle(res.solution)) {
      if (cut.lhs.evaluate(res.solution.values) >= -tolerance) continue;
      if (!seen.insert(row_key(cut.lhs)).second) continue;
      std::string name = (cut.name.empty() ? "cut" : cut.name) + "#" + std::to_string(res.cuts_added);
      master.add_constraint(name, cut.lhs, Sense::kGe);
      ++res.cuts_added;
      ++added;
    }
    if (added == 0) break;
  }
  res.final_model = std::move(master);
  return res;
}

}  // namespace signcert
