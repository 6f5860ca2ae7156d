#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "signcert/concave_ext.hpp"
#include "signcert/lp_model.hpp"
#include "signcert/lp_solve.hpp"
#include "signcert/polynomial.hpp"

namespace signcert {

/// Linear-expression hooks of one NNS template F0 + sum F_alpha x^alpha + sum L_j x_j.
struct BlockHooks {
  std::vector<Support> a;
  std::vector<int> vars;
  std::map<Support, LinExpr> f;
  std::map<int, LinExpr> l;
  LinExpr f0;
};

/// Flow variables and rows of one extended non-negativity block. The shortcut
/// source->j flow is stored as its nonnegative reverse rho_js.
struct NonnegBlock {
  std::map<Support, int> rho_s;
  std::map<std::pair<Support, int>, int> rho_aj;
  std::map<int, int> rho_js;
  std::map<int, int> rho_jt;
  std::vector<int> rows;
};

/// Appends the block rows certifying min_x (F0 + sum F_a x^a + sum L_j x_j) >= 0:
///   rho_sa + F_a <= 0,  rho_sa = sum_j rho_aj,  sum_a rho_aj - rho_js = rho_jt,
///   rho_jt <= L_j,  and (if final_row) F0 + sum F_a + sum rho_jt >= 0.
/// The caller keeps the F_a expressions nonpositive.
NonnegBlock emit_nonneg_block(LpModel& model, const std::string& prefix, const BlockHooks& hooks, bool final_row = true);

/// One certificate block f^k of a relaxation: coefficient expressions on
/// supp(s1) + supp(theta2) and one hook set per selector.
struct CertificateBlock {
  SignedDecomposition template_support;
  ExtensionSet ext;
  std::vector<int> var_set;
  std::map<Support, LinExpr> coeff;
  std::vector<BlockHooks> hooks;
  std::vector<NonnegBlock> nonneg;
};

/// Declares f^k (free on B_{0:1}, <= 0 on the negative nonlinear part, >= 0 on
/// supp(s2)) and, when emit_blocks is set, one NonnegBlock per selector of ext
/// certifying nn(f^k) + M pp(f^k) binary non-negative. Throws
/// std::invalid_argument unless ext is an exact set for sd.s2.
CertificateBlock build_nm_membership(LpModel& model, const std::string& prefix, const SignedDecomposition& sd,
                                     const ExtensionSet& ext, bool emit_blocks = true);

enum class RelaxMethod { kStandard, kLovasz, kSignedReformulation, kSheraliAdams1 };
enum class SolveMode { kExtended, kCuttingPlane };

std::string to_string(RelaxMethod m);

struct RelaxOptions {
  SolveMode mode = SolveMode::kExtended;
  std::size_t standard_cap = kDefaultStandardCap;
  LovaszOptions lovasz;
};

struct Relaxation {
  Polynomial f;
  RelaxMethod method = RelaxMethod::kStandard;
  SolveMode mode = SolveMode::kExtended;
  int level = 1;
  int levels = 1;
  SignedDecomposition sd;
  LpModel model;
  int lambda = -1;
  std::map<Support, int> g;
  std::vector<CertificateBlock> blocks;
  /// Rows the extended formulation would contain (also in cutting-plane mode).
  std::size_t extended_rows = 0;
};

/// Ambient signed support: nonlinear signs of f plus all of B_{0:1}.
SignedSupport ambient_support(const Polynomial& f);

/// Number of hierarchy levels L for f under the given method.
int level_count(const Polynomial& f, RelaxMethod method);

/// max lambda s.t. f - lambda in NM(s, M) with a single exact set for s2 (the
/// smaller of the standard and relaxed Lovász sets that fits its cap).
Relaxation build_signed_reformulation(const Polynomial& f, const RelaxOptions& opt = {});

/// Level-i standard or Lovász signed relaxation; throws std::out_of_range for
/// a level outside [1, L].
Relaxation build_level_relaxation(const Polynomial& f, int level, RelaxMethod method, const RelaxOptions& opt = {});

/// First-level Sherali-Adams with bound factors on the quadratic support.
/// Throws std::invalid_argument for degree > 2.
Relaxation sherali_adams_1(const Polynomial& f);

/// 8 * m1 d1 m2 d2^(2^i) (standard) or 8 * m1 d1 m2 2^(2^i) (Lovász), with m2
/// and d2 read as at least 1; saturates at the largest double.
double encoding_size_bound(const SignedDecomposition& sd, int level, RelaxMethod method);

struct RelaxResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational lambda;
  LpSolution solution;
  std::size_t rows = 0;
  std::size_t cols = 0;
  long iterations = 1;
  long cuts = 0;
};

RelaxResult solve_relaxation(const Relaxation& r, const SolveOptions& opt = {});

/// f - lambda = g + sum_k f^k with per-selector flow values when available.
struct RelaxationCertificate {
  Rational lambda;
  Polynomial g;
  struct Block {
    SignedSupport theta;
    Polynomial f;
    std::vector<std::map<std::string, Rational>> flows;
  };
  std::vector<Block> blocks;
};

/// Decodes the certificate and rechecks coupling, g >= 0 and every
/// nn(f^k) + M pp(f^k) via minimize_nns. Throws std::runtime_error if the
/// solution is not optimal or a recheck fails.
RelaxationCertificate extract_certificate(const Relaxation& r, const LpSolution& sol, bool recheck = true);

std::string certificate_to_json(const RelaxationCertificate& cert);

}  // namespace signcert
