#include <set>
#include <stdexcept>

#include "signcert/lp_relax.hpp"

namespace signcert {

Relaxation sherali_adams_1(const Polynomial& f) {
  if (f.degree() > 2) {
    throw std::invalid_argument("Sherali-Adams level 1 needs degree <= 2, got " + std::to_string(f.degree()));
  }
  const int n = f.n_vars();
  Relaxation r;
  r.f = f;
  r.method = RelaxMethod::kSheraliAdams1;
  r.sd = SignedDecomposition::of(ambient_support(f));
  r.lambda = r.model.add_var("lambda", /*free=*/true);

  // Coefficient of each monomial in the multiplier combination.
  std::map<Support, LinExpr> combo;
  combo[Support{}];
  for (int j = 1; j <= n; ++j) combo[Support{j}];

  for (int j = 1; j <= n; ++j) {
    const std::string t = std::to_string(j);
    const int up = r.model.add_var("u" + t);
    const int down = r.model.add_var("d" + t);
    combo[Support{j}].add(up, 1);
    combo[Support{}].add(down, 1);
    combo[Support{j}].add(down, -1);
  }

  std::set<Support> pairs;
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.size() == 2) pairs.insert(alpha);
  }
  for (const auto& alpha : pairs) {
    const int i = alpha.indices()[0];
    const int j = alpha.indices()[1];
    const std::string t = std::to_string(i) + "." + std::to_string(j);
    const int p11 = r.model.add_var("p11_" + t);
    const int p10 = r.model.add_var("p10_" + t);
    const int p01 = r.model.add_var("p01_" + t);
    const int p00 = r.model.add_var("p00_" + t);
    // x_i x_j
    combo[alpha].add(p11, 1);
    // x_i (1 - x_j)
    combo[Support{i}].add(p10, 1);
    combo[alpha].add(p10, -1);
    // (1 - x_i) x_j
    combo[Support{j}].add(p01, 1);
    combo[alpha].add(p01, -1);
    // (1 - x_i)(1 - x_j)
    combo[Support{}].add(p00, 1);
    combo[Support{i}].add(p00, -1);
    combo[Support{j}].add(p00, -1);
    combo[alpha].add(p00, 1);
  }

  for (const auto& [alpha, rhs] : combo) {
    LinExpr lhs(f.coeff(alpha));
    if (alpha.empty()) lhs.add(r.lambda, -1);
    std::string name = "c" + (alpha.empty() ? std::string("0") : alpha.to_string());
    for (char& ch : name) {
      if (ch == ' ') ch = '.';
    }
    r.model.add_constraint(name, lhs, Sense::kEq, rhs);
  }
  r.model.set_objective(LinExpr::var(r.lambda));
  return r;
}

}  // namespace signcert
