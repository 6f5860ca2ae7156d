#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "signcert/lp_relax.hpp"
#include "signcert/mincut.hpp"
#include "signcert/partition_tree.hpp"

namespace signcert {

std::string to_string(RelaxMethod m) {
  switch (m) {
    case RelaxMethod::kStandard: return "std";
    case RelaxMethod::kLovasz: return "lov";
    case RelaxMethod::kSignedReformulation: return "ref";
    case RelaxMethod::kSheraliAdams1: return "sa1";
  }
  return "std";
}

SignedSupport ambient_support(const Polynomial& f) {
  SignedSupport::SignMap signs;
  signs[Support{}] = f.constant() < 0 ? -1 : 1;
  for (int j = 1; j <= f.n_vars(); ++j) signs[Support{j}] = f.linear(j) < 0 ? -1 : 1;
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.is_nonlinear()) signs[alpha] = sgn(c);
  }
  return SignedSupport(f.n_vars(), std::move(signs));
}

namespace {

bool is_constant(const Polynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.first.empty(); });
}

SignedSupport restrict(const SignedSupport& s, const std::vector<Support>& keep) {
  SignedSupport::SignMap m;
  for (const auto& alpha : keep) m.emplace(alpha, s.sign(alpha));
  return SignedSupport(s.n_vars(), std::move(m));
}

std::size_t extended_row_count(const CertificateBlock& b) {
  std::size_t rows = 0;
  for (const auto& h : b.hooks) rows += 2 * h.a.size() + 2 * h.vars.size() + 1;
  return rows;
}

// lambda, g, the given blocks and the coupling rows f_a - lambda [a = 0] = g_a + sum_k f^k_a.
Relaxation assemble(const Polynomial& f, RelaxMethod method, int level, int levels, const SignedDecomposition& sd,
                    const std::vector<std::pair<std::vector<Support>, ExtensionSet>>& parts, const RelaxOptions& opt) {
  Relaxation r;
  r.f = f;
  r.method = method;
  r.mode = opt.mode;
  r.level = level;
  r.levels = levels;
  r.sd = sd;
  r.lambda = r.model.add_var("lambda", /*free=*/true);

  const SignedSupport s = ambient_support(f);
  if (is_constant(f)) {
    r.model.add_constraint("const", LinExpr::var(r.lambda), Sense::kLe, LinExpr(f.constant()));
    r.model.set_objective(LinExpr::var(r.lambda));
    return r;
  }

  for (const auto& [alpha, sg] : s.signs()) {
    std::string name = "g" + (alpha.empty() ? std::string("0") : alpha.to_string());
    std::replace(name.begin(), name.end(), ' ', '.');
    r.g.emplace(alpha, r.model.add_var(name));
  }

  const bool emit = opt.mode == SolveMode::kExtended;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    SignedDecomposition block_sd{sd.s1, restrict(sd.s2, parts[k].first)};
    CertificateBlock blk = build_nm_membership(r.model, "k" + std::to_string(k) + "_", block_sd, parts[k].second, emit);
    r.extended_rows += extended_row_count(blk);
    r.blocks.push_back(std::move(blk));
  }

  for (const auto& [alpha, sg] : s.signs()) {
    LinExpr rhs = LinExpr::var(r.g.at(alpha));
    for (const auto& blk : r.blocks) {
      auto it = blk.coeff.find(alpha);
      if (it != blk.coeff.end()) rhs += it->second;
    }
    LinExpr lhs(f.coeff(alpha));
    if (alpha.empty()) lhs.add(r.lambda, -1);
    std::string name = "c" + (alpha.empty() ? std::string("0") : alpha.to_string());
    std::replace(name.begin(), name.end(), ' ', '.');
    r.model.add_constraint(name, lhs, Sense::kEq, rhs);
  }
  r.extended_rows += s.signs().size();
  if (!emit) r.model.add_constraint("lambda_cap", LinExpr::var(r.lambda), Sense::kLe, LinExpr(f.constant()));
  r.model.set_objective(LinExpr::var(r.lambda));
  return r;
}

std::vector<Support> positive_supports(const SignedDecomposition& sd) { return sd.s2.supports(); }

}  // namespace

int level_count(const Polynomial& f, RelaxMethod method) {
  const SignedDecomposition sd = SignedDecomposition::of(ambient_support(f));
  switch (method) {
    case RelaxMethod::kStandard: {
      const auto c = positive_supports(sd);
      return c.empty() ? 1 : PartitionTree<Support>::build(c).height();
    }
    case RelaxMethod::kLovasz: {
      const auto& c = sd.s2.vars();
      return c.empty() ? 1 : PartitionTree<int>::build(c).height();
    }
    default:
      return 1;
  }
}

Relaxation build_signed_reformulation(const Polynomial& f, const RelaxOptions& opt) {
  const SignedDecomposition sd = SignedDecomposition::of(ambient_support(f));
  ExtensionSet best;
  bool have = false;
  std::string why;
  try {
    best = all_standard_selectors(sd.s2, opt.standard_cap);
    have = true;
  } catch (const std::length_error& e) {
    why = e.what();
  }
  try {
    ExtensionSet lov = relaxed_lovasz_set(sd.s2, opt.lovasz);
    if (!have || lov.size() < best.size()) best = std::move(lov);
    have = true;
  } catch (const std::length_error& e) {
    why += std::string("; ") + e.what();
  }
  if (!have) throw std::length_error("signed reformulation: " + why);
  return assemble(f, RelaxMethod::kSignedReformulation, 1, 1, sd, {{sd.s2.supports(), best}}, opt);
}

Relaxation build_level_relaxation(const Polynomial& f, int level, RelaxMethod method, const RelaxOptions& opt) {
  if (method != RelaxMethod::kStandard && method != RelaxMethod::kLovasz) {
    throw std::invalid_argument("level relaxations use the standard or Lovász method");
  }
  const SignedDecomposition sd = SignedDecomposition::of(ambient_support(f));
  const int levels = level_count(f, method);
  if (level < 1 || level > levels) {
    throw std::out_of_range("level " + std::to_string(level) + " out of range [1, " + std::to_string(levels) + "]");
  }

  std::vector<std::pair<std::vector<Support>, ExtensionSet>> parts;
  if (sd.s2.m() == 0) {
    ExtensionSet es = all_standard_selectors(sd.s2);
    parts.emplace_back(std::vector<Support>{}, std::move(es));
  } else if (method == RelaxMethod::kStandard) {
    const auto tree = PartitionTree<Support>::build(sd.s2.supports());
    for (const auto& node : tree.level(level)) {
      parts.emplace_back(node, all_standard_selectors(restrict(sd.s2, node), opt.standard_cap));
    }
  } else {
    const auto tree = PartitionTree<int>::build(sd.s2.vars());
    for (const auto& node : tree.level(level)) {
      std::vector<Support> theta;
      for (const auto& alpha : sd.s2.supports()) {
        if (std::all_of(alpha.begin(), alpha.end(),
                        [&](int j) { return std::find(node.begin(), node.end(), j) != node.end(); })) {
          theta.push_back(alpha);
        }
      }
      if (theta.empty()) continue;
      parts.emplace_back(theta, relaxed_lovasz_set(restrict(sd.s2, theta), opt.lovasz));
    }
    if (parts.empty()) parts.emplace_back(std::vector<Support>{}, all_standard_selectors(SignedSupport(f.n_vars())));
  }
  return assemble(f, method, level, levels, sd, parts, opt);
}

double encoding_size_bound(const SignedDecomposition& sd, int level, RelaxMethod method) {
  const double m1 = sd.m1();
  const double d1 = std::max(sd.d1(), 1);
  const double m2 = std::max(sd.m2(), 1);
  const double base = method == RelaxMethod::kLovasz ? 2.0 : std::max(sd.d2(), 1);
  const double exponent = std::ldexp(1.0, level);
  const double growth = std::pow(base, exponent);
  const double bound = 8.0 * m1 * d1 * m2 * growth;
  return std::isfinite(bound) ? bound : std::numeric_limits<double>::max();
}

namespace {

Rational value_of(const LinExpr& e, const std::vector<Rational>& v) { return e.evaluate(v); }

std::vector<Cut> separate_blocks(const Relaxation& r, const LpSolution& sol) {
  std::vector<Cut> cuts;
  for (std::size_t k = 0; k < r.blocks.size(); ++k) {
    const auto& blk = r.blocks[k];
    for (std::size_t m = 0; m < blk.hooks.size(); ++m) {
      const BlockHooks& h = blk.hooks[m];
      Polynomial p(r.f.n_vars());
      p.set(Support{}, value_of(h.f0, sol.values));
      for (const auto& [alpha, e] : h.f) {
        Rational c = value_of(e, sol.values);
        if (c < 0) p.set(alpha, c);
      }
      for (const auto& [j, e] : h.l) p.add(Support{j}, value_of(e, sol.values));
      auto x = separate(p);
      if (!x) continue;
      LinExpr cut = h.f0;
      for (const auto& [alpha, e] : h.f) {
        if (alpha.active_at(*x)) cut += e;
      }
      for (const auto& [j, e] : h.l) {
        if ((*x)[j - 1]) cut += e;
      }
      cuts.push_back({"k" + std::to_string(k) + "m" + std::to_string(m), std::move(cut)});
    }
  }
  return cuts;
}

}  // namespace

RelaxResult solve_relaxation(const Relaxation& r, const SolveOptions& opt) {
  RelaxResult out;
  if (r.mode == SolveMode::kExtended || r.blocks.empty()) {
    out.solution = solve(r.model, opt);
    out.rows = r.model.num_rows();
    out.cols = r.model.num_vars();
  } else {
    CuttingPlaneOptions cp;
    cp.solve = opt;
    cp.max_iterations = 10 * static_cast<long>(std::max<std::size_t>(r.extended_rows, 1));
    auto res = solve_cutting_plane(r.model, [&](const LpSolution& s) { return separate_blocks(r, s); }, cp);
    out.solution = std::move(res.solution);
    out.iterations = res.iterations;
    out.cuts = res.cuts_added;
    out.rows = res.final_model.num_rows();
    out.cols = res.final_model.num_vars();
  }
  out.status = out.solution.status;
  if (out.status == LpStatus::kOptimal) out.lambda = out.solution.values[r.lambda];
  return out;
}

}  // namespace signcert
