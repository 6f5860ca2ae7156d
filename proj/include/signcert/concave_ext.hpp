#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "signcert/polynomial.hpp"

namespace signcert {

/// Overestimation matrix stored as monomial -> chosen variable of that monomial.
struct Selector {
  std::map<Support, int> assignment;

  int at(const Support& alpha) const;
  bool operator==(const Selector&) const = default;
};

enum class ExtensionMethod { kStandard, kLovasz, kRelaxedLovasz };

std::string to_string(ExtensionMethod m);

struct ExtensionSet {
  std::vector<Selector> selectors;
  SignedSupport base;
  ExtensionMethod method = ExtensionMethod::kStandard;
  /// Variable orderings behind Lovász selectors (empty for the standard method).
  std::vector<std::vector<int>> orders;

  std::size_t size() const { return selectors.size(); }
};

inline constexpr std::size_t kDefaultStandardCap = 1u << 16;
inline constexpr int kDefaultLovaszCap = 20;
inline constexpr int kDefaultVerifyCap = 14;

/// The full product family; throws std::length_error when prod |alpha| > cap.
ExtensionSet all_standard_selectors(const SignedSupport& s2, std::size_t cap = kDefaultStandardCap);

/// Maps each alpha to the element of alpha occurring last in pi.
/// Throws std::invalid_argument unless pi is a permutation of N_{s2}.
Selector lovasz_selector_from_order(const std::vector<int>& pi, const SignedSupport& s2);

struct LovaszOptions {
  /// Cover the cube by symmetric chains instead of the greedy prefix scan.
  bool symmetric_chains = false;
  int cap = kDefaultLovaszCap;
};

/// Orderings of vars whose prefix sets cover every subset of vars. The greedy
/// scan output is irreducible: no ordering can be dropped.
std::vector<std::vector<int>> prefix_cover_orders(const std::vector<int>& vars, const LovaszOptions& opt = {});

/// Lovász selectors over N_{s2} from prefix_cover_orders; identical selectors
/// are kept once.
ExtensionSet relaxed_lovasz_set(const SignedSupport& s2, const LovaszOptions& opt = {});

/// sum_alpha f_alpha x_{sel(alpha)}. Throws std::invalid_argument if f_ps has a
/// term that is not a positive nonlinear monomial in the selector's domain.
Polynomial apply(const Selector& sel, const Polynomial& f_ps);

/// Support-level exactness: every selector picks inside its monomial, and for
/// every x over N_{s2} some selector has x_{sel(alpha)} == x^alpha for all alpha.
bool verify_exact(const ExtensionSet& es, int cap = kDefaultVerifyCap);

/// {"<sorted indices>": j, ...}
std::string selector_to_json(const Selector& sel);
std::string extension_set_to_json(const ExtensionSet& es);

}  // namespace signcert
