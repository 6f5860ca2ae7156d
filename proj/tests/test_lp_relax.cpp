#include <gtest/gtest.h>

#include "json.hpp"
#include "random_poly.hpp"
#include "signcert/lp_relax.hpp"
#include "signcert/mincut.hpp"

using namespace signcert;
using signcert::testing::Rng;

namespace {

Polynomial poly(const char* text, int n) { return parse_polynomial(text, n); }

Rational solve_lambda(const Relaxation& r, const SolveOptions& opt = {}) {
  auto res = solve_relaxation(r, opt);
  EXPECT_EQ(res.status, LpStatus::kOptimal);
  return res.lambda;
}

Rational level_lambda(const Polynomial& f, int level, RelaxMethod m, SolveMode mode = SolveMode::kExtended) {
  RelaxOptions opt;
  opt.mode = mode;
  return solve_lambda(build_level_relaxation(f, level, m, opt));
}

// Block rows for a fixed polynomial, hooks bound to its coefficients.
BlockHooks constant_hooks(const Polynomial& f) {
  BlockHooks h;
  for (int j = 1; j <= f.n_vars(); ++j) {
    h.vars.push_back(j);
    h.l[j] = LinExpr(f.linear(j));
  }
  for (const auto& [alpha, c] : f.terms()) {
    if (!alpha.is_nonlinear()) continue;
    h.a.push_back(alpha);
    h.f[alpha] = LinExpr(c);
  }
  h.f0 = LinExpr(f.constant());
  return h;
}

bool block_feasible(const Polynomial& f) {
  LpModel m;
  emit_nonneg_block(m, "b_", constant_hooks(f));
  return solve(m).status == LpStatus::kOptimal;
}

// f with the constant dropped and every negative monomial shifted by its own
// coefficient: sum -f_a (1 - x^a) + sum f_j x_j.
Polynomial shifted_form(const Polynomial& f) {
  Polynomial b(f.n_vars());
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.empty()) continue;
    b.add(alpha, c);
    if (alpha.is_nonlinear()) b.add(Support{}, -c);
  }
  return b;
}

// McCormick LP: min sum f_j x_j + sum f_ij y_ij over the bound-factor polytope.
Rational mccormick_min(const Polynomial& f) {
  LpModel m;
  std::vector<int> x(f.n_vars() + 1);
  for (int j = 1; j <= f.n_vars(); ++j) {
    x[j] = m.add_var("x" + std::to_string(j));
    m.add_constraint("ub" + std::to_string(j), LinExpr::var(x[j]), Sense::kLe, LinExpr(Rational(1)));
  }
  LinExpr obj(-f.constant());
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.empty()) continue;
    if (alpha.size() == 1) {
      obj -= LinExpr::var(x[alpha.indices()[0]], c);
      continue;
    }
    const int i = alpha.indices()[0], j = alpha.indices()[1];
    const int y = m.add_var("y" + alpha.to_string());
    m.add_constraint("a" + alpha.to_string(), LinExpr::var(y), Sense::kLe, LinExpr::var(x[i]));
    m.add_constraint("b" + alpha.to_string(), LinExpr::var(y), Sense::kLe, LinExpr::var(x[j]));
    m.add_constraint("c" + alpha.to_string(), LinExpr::var(y), Sense::kGe,
                     LinExpr::var(x[i]) + LinExpr::var(x[j]) - LinExpr(Rational(1)));
    obj -= LinExpr::var(y, c);
  }
  m.set_objective(obj);
  auto s = solve(m);
  EXPECT_EQ(s.status, LpStatus::kOptimal);
  return -s.objective;
}

}  // namespace

TEST(EmitNonnegBlock, Examples) {
  EXPECT_TRUE(block_feasible(poly("2 :\n-1 : 1\n-1 : 2", 2)));
  EXPECT_FALSE(block_feasible(poly("1 :\n-1 : 1\n-1 : 2", 2)));
  EXPECT_TRUE(block_feasible(poly("0 :", 2)));
  EXPECT_FALSE(block_feasible(poly("-1 :", 2)));
  EXPECT_TRUE(block_feasible(poly("1 : 1\n1 : 2\n-1 : 1 2", 2)));
  EXPECT_FALSE(block_feasible(poly("1 :\n-1 : 1\n-1 : 2\n-1 : 1 2", 2)));

  LpModel m;
  BlockHooks bad;
  bad.a = {Support{1}};
  bad.vars = {1};
  bad.f[Support{1}] = LinExpr(Rational(-1));
  bad.l[1] = LinExpr(Rational(0));
  EXPECT_THROW(emit_nonneg_block(m, "x_", bad), std::invalid_argument);
}

TEST(EmitNonnegBlock, RowCountIsLinearInSupport) {
  auto f = poly("-1 : 1 2\n-2 : 2 3 4\n1 : 4", 4);
  LpModel m;
  auto blk = emit_nonneg_block(m, "b_", constant_hooks(f));
  EXPECT_EQ(blk.rows.size(), 2u * 2u + 2u * 4u + 1u);
  EXPECT_EQ(blk.rho_aj.size(), 5u);
}

TEST(EmitNonnegBlock, FlowValueMatchesShiftedMinimum) {
  Rng rng(41);
  for (int t = 0; t < 150; ++t) {
    auto f = signcert::testing::random_nns(rng, 1 + t % 7, t % 6, 3);
    LpModel m;
    auto blk = emit_nonneg_block(m, "b_", constant_hooks(f), /*final_row=*/false);
    LinExpr obj;
    for (const auto& [j, id] : blk.rho_jt) obj += LinExpr::var(id);
    m.set_objective(obj);
    auto s = solve(m);
    ASSERT_EQ(s.status, LpStatus::kOptimal);
    EXPECT_EQ(s.objective, signcert::testing::naive_min(shifted_form(f))) << f.to_string();
  }
}

TEST(EmitNonnegBlock, FeasibleExactlyWhenNonnegative) {
  Rng rng(42);
  for (int t = 0; t < 150; ++t) {
    auto f = signcert::testing::random_nns(rng, 1 + t % 6, t % 5, 3);
    const Rational lo = signcert::testing::naive_min(f);
    EXPECT_EQ(block_feasible(f), lo >= 0);
    f.add(Support{}, -lo);
    EXPECT_TRUE(block_feasible(f));
  }
}

TEST(BuildNmMembership, Examples) {
  auto member = [](const Polynomial& f, const ExtensionSet* forced = nullptr) {
    auto sd = SignedDecomposition::of(ambient_support(f));
    LpModel m;
    auto ext = forced ? *forced : all_standard_selectors(sd.s2);
    auto blk = build_nm_membership(m, "k_", sd, ext);
    for (const auto& [alpha, e] : blk.coeff) {
      m.add_constraint("match" + alpha.to_string(), e, Sense::kEq, LinExpr(f.coeff(alpha)));
    }
    return solve(m).status == LpStatus::kOptimal;
  };
  EXPECT_TRUE(member(poly("1 : 1 2", 2)));
  EXPECT_FALSE(member(poly("-1 : 1 2", 2)));
  EXPECT_TRUE(member(poly("1 :\n-1 : 1 2", 2)));
  EXPECT_TRUE(member(poly("1 :\n-1 : 1\n-1 : 2\n1 : 1 2", 2)));
  EXPECT_FALSE(member(poly("1 :\n-1 : 1\n-1 : 2\n1/2 : 1 2", 2)));

  auto f = poly("1 : 1 2", 2);
  auto sd = SignedDecomposition::of(ambient_support(f));
  ExtensionSet inexact = all_standard_selectors(sd.s2);
  inexact.selectors.pop_back();
  LpModel m;
  EXPECT_THROW(build_nm_membership(m, "k_", sd, inexact), std::invalid_argument);
}

TEST(SignedReformulation, Examples) {
  EXPECT_EQ(solve_lambda(build_signed_reformulation(poly("1 : 1 2", 2))), 0);
  EXPECT_EQ(solve_lambda(build_signed_reformulation(poly("-1 : 1 2", 2))), -1);
  auto nns = poly("3 :\n-1 : 1 2\n-1 : 2 3\n1/2 : 2", 3);
  EXPECT_EQ(solve_lambda(build_signed_reformulation(nns)), minimize_nns(nns).value);
}

TEST(SignedReformulation, ExactOnRandomPolynomials) {
  Rng rng(43);
  for (int t = 0; t < 40; ++t) {
    auto f = signcert::testing::random_polynomial(rng, 2 + t % 4, 1 + t % 3, 1 + t % 3, 3);
    EXPECT_EQ(solve_lambda(build_signed_reformulation(f)), brute_force_min(f).value) << f.to_string();
  }
}

TEST(LevelRelaxation, ConstantAndNnsInputs) {
  for (auto m : {RelaxMethod::kStandard, RelaxMethod::kLovasz}) {
    auto c = build_level_relaxation(poly("7/3 :", 3), 1, m);
    EXPECT_TRUE(c.blocks.empty());
    EXPECT_EQ(solve_lambda(c), Rational(7, 3));
    auto nns = poly("1 :\n-2 : 1 3\n-1 : 1 2 3\n1 : 2\n-1 : 1", 3);
    EXPECT_EQ(level_count(nns, m), 1);
    EXPECT_EQ(level_lambda(nns, 1, m), minimize_nns(nns).value);
    EXPECT_THROW(build_level_relaxation(nns, 2, m), std::out_of_range);
    EXPECT_THROW(build_level_relaxation(nns, 0, m), std::out_of_range);
  }
}

TEST(LevelRelaxation, TwoPositiveBlocksRegression) {
  auto f = poly("1 : 1 2\n1 : 3 4\n-2 : 1 3", 4);
  EXPECT_EQ(brute_force_min(f).value, -2);
  auto r = build_level_relaxation(f, 1, RelaxMethod::kStandard);
  ASSERT_EQ(r.blocks.size(), 2u);
  EXPECT_EQ(r.blocks[0].ext.size(), 2u);
  EXPECT_EQ(r.blocks[1].ext.size(), 2u);
  const Rational l1 = solve_lambda(r);
  EXPECT_EQ(l1, -2);
  EXPECT_EQ(level_lambda(f, 2, RelaxMethod::kStandard), -2);
}

TEST(LevelRelaxation, LovaszDropsEmptyBlocksAndAbsorbsSpanningMonomials) {
  // x1x3 spans the level-1 and level-2 blocks {1,2}, {3,4} and is left to g.
  auto f = poly("1 : 1 2\n1 : 3 4\n2 : 1 3\n-1 : 1\n-1 : 3", 4);
  EXPECT_EQ(level_count(f, RelaxMethod::kLovasz), 3);
  auto r1 = build_level_relaxation(f, 1, RelaxMethod::kLovasz);
  EXPECT_EQ(r1.blocks.size(), 1u);
  EXPECT_EQ(r1.blocks[0].template_support.s2.m(), 0);
  auto r2 = build_level_relaxation(f, 2, RelaxMethod::kLovasz);
  EXPECT_EQ(r2.blocks.size(), 2u);
  const Rational l1 = solve_lambda(r1), l2 = solve_lambda(r2), l3 = level_lambda(f, 3, RelaxMethod::kLovasz);
  EXPECT_LE(l1, l2);
  EXPECT_LE(l2, l3);
  EXPECT_EQ(l3, brute_force_min(f).value);
}

TEST(LevelRelaxation, SoundMonotoneAndCompleteOnRandomPolynomials) {
  Rng rng(44);
  for (int t = 0; t < 30; ++t) {
    auto f = signcert::testing::random_polynomial(rng, 3 + t % 4, 1 + t % 3, 2 + t % 3, 3);
    const Rational opt = brute_force_min(f).value;
    for (auto m : {RelaxMethod::kStandard, RelaxMethod::kLovasz}) {
      const int levels = level_count(f, m);
      Rational prev;
      for (int i = 1; i <= levels; ++i) {
        const Rational l = level_lambda(f, i, m);
        EXPECT_LE(l, opt) << f.to_string() << " " << to_string(m) << i;
        if (i > 1) EXPECT_GE(l, prev) << f.to_string() << " " << to_string(m) << i;
        prev = l;
      }
      EXPECT_EQ(prev, opt) << f.to_string() << " " << to_string(m);
    }
  }
}

TEST(LevelRelaxation, CuttingPlaneMatchesExtended) {
  Rng rng(45);
  for (int t = 0; t < 20; ++t) {
    auto f = signcert::testing::random_polynomial(rng, 3 + t % 3, 1 + t % 3, 1 + t % 3, 3);
    for (auto m : {RelaxMethod::kStandard, RelaxMethod::kLovasz}) {
      for (int i = 1; i <= level_count(f, m); ++i) {
        EXPECT_EQ(level_lambda(f, i, m, SolveMode::kCuttingPlane), level_lambda(f, i, m)) << f.to_string();
      }
    }
  }
  RelaxOptions cp;
  cp.mode = SolveMode::kCuttingPlane;
  EXPECT_EQ(solve_lambda(build_level_relaxation(Polynomial(3), 1, RelaxMethod::kStandard, cp)), 0);
}

TEST(LevelRelaxation, ScalingCovariance) {
  Rng rng(46);
  for (int t = 0; t < 10; ++t) {
    auto f = signcert::testing::random_polynomial(rng, 4, 2, 2, 3);
    const Rational c = signcert::testing::random_positive(rng);
    Polynomial cf = f;
    cf *= c;
    for (auto m : {RelaxMethod::kStandard, RelaxMethod::kLovasz}) {
      EXPECT_EQ(level_lambda(cf, 1, m), c * level_lambda(f, 1, m));
    }
  }
}

TEST(LevelRelaxation, EncodingSizeWithinBound) {
  Rng rng(47);
  for (int t = 0; t < 30; ++t) {
    auto f = signcert::testing::random_polynomial(rng, 3 + t % 5, 1 + t % 4, 1 + t % 4, 3);
    for (auto m : {RelaxMethod::kStandard, RelaxMethod::kLovasz}) {
      for (int i = 1; i <= level_count(f, m); ++i) {
        auto r = build_level_relaxation(f, i, m);
        const double bound = encoding_size_bound(r.sd, i, m);
        EXPECT_LE(static_cast<double>(r.model.num_rows()), bound);
        EXPECT_LE(static_cast<double>(r.model.num_vars()), bound);
      }
    }
  }
}

TEST(SheraliAdams1, Examples) {
  EXPECT_EQ(solve_lambda(sherali_adams_1(poly("1 : 1\n-1 : 1 2", 2))), 0);
  EXPECT_EQ(solve_lambda(sherali_adams_1(poly("1 :\n-1 : 1\n-1 : 2\n1 : 1 2", 2))), 0);
  EXPECT_EQ(solve_lambda(sherali_adams_1(poly("5/2 :", 2))), Rational(5, 2));
  EXPECT_THROW(sherali_adams_1(poly("1 : 1 2 3", 3)), std::invalid_argument);
}

TEST(SheraliAdams1, EqualsMcCormickRelaxation) {
  Rng rng(48);
  for (int t = 0; t < 40; ++t) {
    auto f = signcert::testing::random_polynomial(rng, 2 + t % 5, 1 + t % 3, 1 + t % 3, 2);
    const Rational l = solve_lambda(sherali_adams_1(f));
    EXPECT_EQ(l, mccormick_min(f)) << f.to_string();
    EXPECT_LE(l, brute_force_min(f).value);
  }
}

TEST(Certificate, DecodesAndRechecks) {
  Rng rng(49);
  for (int t = 0; t < 15; ++t) {
    auto f = signcert::testing::random_polynomial(rng, 3 + t % 3, 1 + t % 3, 1 + t % 3, 3);
    for (auto m : {RelaxMethod::kStandard, RelaxMethod::kLovasz}) {
      auto r = build_level_relaxation(f, 1, m);
      auto res = solve_relaxation(r);
      auto cert = extract_certificate(r, res.solution);
      EXPECT_EQ(cert.lambda, res.lambda);
      // f - lambda = g + sum f^k, g >= 0, checked here without the library's recheck.
      Polynomial total = cert.g;
      for (const auto& [alpha, c] : cert.g.terms()) EXPECT_GE(c, 0);
      ASSERT_EQ(cert.blocks.size(), r.blocks.size());
      for (std::size_t k = 0; k < cert.blocks.size(); ++k) {
        const auto& b = cert.blocks[k];
        total += b.f;
        EXPECT_TRUE(within(b.f, b.theta));
        EXPECT_EQ(b.flows.size(), r.blocks[k].ext.size());
      }
      Polynomial shifted = f;
      shifted.add(Support{}, -cert.lambda);
      EXPECT_EQ(total, shifted);
    }
  }
}

TEST(Certificate, RejectsNonOptimalAndTamperedSolutions) {
  auto f = poly("1 : 1 2\n-1 : 1\n-1 : 2", 2);
  auto r = build_level_relaxation(f, 1, RelaxMethod::kStandard);
  auto res = solve_relaxation(r);
  LpSolution bad = res.solution;
  bad.status = LpStatus::kInfeasible;
  EXPECT_THROW(extract_certificate(r, bad), std::runtime_error);
  LpSolution tampered = res.solution;
  tampered.values[r.lambda] += 1;
  EXPECT_THROW(extract_certificate(r, tampered), std::runtime_error);
}

TEST(Certificate, Json) {
  auto f = poly("1 : 1 2\n-1 : 1\n-1 : 2", 2);
  auto r = build_level_relaxation(f, 1, RelaxMethod::kStandard);
  auto cert = extract_certificate(r, solve_relaxation(r).solution);
  auto j = nlohmann::json::parse(certificate_to_json(cert));
  EXPECT_EQ(j["lambda"], "-1");
  ASSERT_EQ(j["blocks"].size(), cert.blocks.size());
  EXPECT_TRUE(j["blocks"][0].contains("theta"));
  EXPECT_TRUE(j["blocks"][0].contains("flows"));
}
