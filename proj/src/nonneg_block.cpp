#include <algorithm>
#include <set>
#include <stdexcept>

#include "signcert/lp_relax.hpp"

namespace signcert {

namespace {

std::string tag(const Support& alpha) {
  std::string s;
  for (int j : alpha) s += (s.empty() ? "" : ".") + std::to_string(j);
  return s.empty() ? "0" : s;
}

}  // namespace

NonnegBlock emit_nonneg_block(LpModel& model, const std::string& prefix, const BlockHooks& hooks, bool final_row) {
  std::set<int> vars(hooks.vars.begin(), hooks.vars.end());
  for (const auto& alpha : hooks.a) {
    if (!alpha.is_nonlinear()) throw std::invalid_argument("block monomial {" + alpha.to_string() + "} is not nonlinear");
    for (int j : alpha) {
      if (!vars.count(j)) throw std::invalid_argument("block monomial {" + alpha.to_string() + "} uses an undeclared variable");
    }
    if (!hooks.f.count(alpha)) throw std::invalid_argument("block monomial {" + alpha.to_string() + "} has no coefficient hook");
  }

  NonnegBlock blk;
  std::map<int, LinExpr> inflow;
  for (const auto& alpha : hooks.a) {
    const std::string t = tag(alpha);
    const int rs = model.add_var(prefix + "rs" + t);
    blk.rho_s.emplace(alpha, rs);
    blk.rows.push_back(model.add_constraint(prefix + "cap" + t, LinExpr::var(rs) + hooks.f.at(alpha), Sense::kLe));
    LinExpr split = LinExpr::var(rs);
    for (int j : alpha) {
      const int ra = model.add_var(prefix + "ra" + t + "_" + std::to_string(j));
      blk.rho_aj.emplace(std::make_pair(alpha, j), ra);
      split.add(ra, -1);
      inflow[j].add(ra, 1);
    }
    blk.rows.push_back(model.add_constraint(prefix + "split" + t, split, Sense::kEq));
  }

  LinExpr total = hooks.f0;
  for (const auto& alpha : hooks.a) total += hooks.f.at(alpha);
  for (int j : vars) {
    const std::string t = std::to_string(j);
    const int rjs = model.add_var(prefix + "rjs" + t);
    const int rjt = model.add_var(prefix + "rjt" + t, /*free=*/true);
    blk.rho_js[j] = rjs;
    blk.rho_jt[j] = rjt;
    LinExpr balance = inflow[j];
    balance.add(rjs, -1).add(rjt, -1);
    blk.rows.push_back(model.add_constraint(prefix + "bal" + t, balance, Sense::kEq));
    auto it = hooks.l.find(j);
    LinExpr lj = it == hooks.l.end() ? LinExpr() : it->second;
    blk.rows.push_back(model.add_constraint(prefix + "lin" + t, LinExpr::var(rjt), Sense::kLe, lj));
    total.add(rjt, 1);
  }
  if (final_row) blk.rows.push_back(model.add_constraint(prefix + "nonneg", total, Sense::kGe));
  return blk;
}

CertificateBlock build_nm_membership(LpModel& model, const std::string& prefix, const SignedDecomposition& sd,
                                     const ExtensionSet& ext, bool emit_blocks) {
  if (!(ext.base == sd.s2)) throw std::invalid_argument("extension set does not extend the PS part");
  if (ext.base.n_prime() <= kDefaultVerifyCap && !verify_exact(ext)) {
    throw std::invalid_argument("extension set is not exact for the PS part");
  }
  const int n = sd.s1.n_vars();

  CertificateBlock blk;
  blk.template_support = sd;
  blk.ext = ext;
  for (const auto& [alpha, s] : sd.s1.signs()) {
    const std::string name = prefix + "f" + tag(alpha);
    if (alpha.is_nonlinear()) {
      blk.coeff.emplace(alpha, LinExpr::var(model.add_var(name), -1));
    } else {
      blk.coeff.emplace(alpha, LinExpr::var(model.add_var(name, /*free=*/true)));
    }
  }
  for (const auto& [alpha, s] : sd.s2.signs()) {
    blk.coeff.emplace(alpha, LinExpr::var(model.add_var(prefix + "f" + tag(alpha))));
  }
  for (int j = 1; j <= n; ++j) blk.var_set.push_back(j);

  std::vector<Support> a;
  for (const auto& [alpha, s] : sd.s1.signs()) {
    if (alpha.is_nonlinear()) a.push_back(alpha);
  }
  for (std::size_t m = 0; m < ext.selectors.size(); ++m) {
    BlockHooks h;
    h.a = a;
    h.vars = blk.var_set;
    for (const auto& alpha : a) h.f.emplace(alpha, blk.coeff.at(alpha));
    for (int j = 1; j <= n; ++j) {
      auto it = blk.coeff.find(Support{j});
      h.l[j] = it == blk.coeff.end() ? LinExpr() : it->second;
    }
    for (const auto& [alpha, j] : ext.selectors[m].assignment) h.l[j] += blk.coeff.at(alpha);
    auto c0 = blk.coeff.find(Support{});
    h.f0 = c0 == blk.coeff.end() ? LinExpr() : c0->second;
    if (emit_blocks) blk.nonneg.push_back(emit_nonneg_block(model, prefix + "m" + std::to_string(m) + "_", h));
    blk.hooks.push_back(std::move(h));
  }
  return blk;
}

}  // namespace signcert
