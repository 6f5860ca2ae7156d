#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signcert/rational.hpp"

namespace signcert {

/// A point of the binary hypercube; entry j-1 holds x_j.
using BinaryPoint = std::vector<std::uint8_t>;

/// Exponent vector of a multilinear monomial, stored as the sorted set of
/// 1-based variable indices it contains. The empty support is the constant.
class Support {
 public:
  Support() = default;
  Support(std::initializer_list<int> indices);
  explicit Support(std::vector<int> indices);

  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  bool is_linear() const { return idx_.size() == 1; }
  bool is_nonlinear() const { return idx_.size() >= 2; }
  int max_index() const { return idx_.empty() ? 0 : idx_.back(); }
  bool contains(int j) const;
  bool subset_of(const Support& other) const;

  /// x^alpha for a binary point.
  bool active_at(const BinaryPoint& x) const;

  const std::vector<int>& indices() const { return idx_; }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }

  /// Space separated indices, e.g. "1 2"; empty string for the constant.
  std::string to_string() const;

  bool operator==(const Support&) const = default;
  /// Graded-lex: lower degree first, then lexicographic on sorted indices.
  std::strong_ordering operator<=>(const Support& other) const;

 private:
  std::vector<int> idx_;
};

/// Sparse multilinear polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Support, Rational>;

  Polynomial() = default;
  explicit Polynomial(int n_vars) : n_vars_(n_vars) {}
  Polynomial(int n_vars, std::initializer_list<std::pair<Support, Rational>> terms);

  int n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Support& alpha) const;
  Rational constant() const { return coeff(Support{}); }
  Rational linear(int j) const { return coeff(Support{j}); }
  int degree() const;

  /// Sets f_alpha; a zero value erases the term.
  void set(const Support& alpha, const Rational& value);
  void add(const Support& alpha, const Rational& value);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scale);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  /// Coefficientwise equality; the variable count is not compared.
  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

  std::string to_string() const;

 private:
  void check_support(const Support& alpha) const;

  int n_vars_ = 0;
  TermMap terms_;
};

/// Sign pattern {-1,0,+1} per monomial; absent keys mean 0.
class SignedSupport {
 public:
  using SignMap = std::map<Support, int>;

  SignedSupport() = default;
  explicit SignedSupport(int n_vars) : n_vars_(n_vars) {}
  SignedSupport(int n_vars, SignMap signs);

  int n_vars() const { return n_vars_; }
  const SignMap& signs() const { return signs_; }
  int sign(const Support& alpha) const;
  bool contains(const Support& alpha) const { return signs_.count(alpha) != 0; }

  /// Sets the sign of alpha; 0 removes it. Derived fields are refreshed.
  void set(const Support& alpha, int sign);

  /// Number of nonzero entries.
  int m() const { return static_cast<int>(signs_.size()); }
  /// Maximum degree over the support (0 when empty).
  int d() const { return d_; }
  /// Variables occurring in some supported monomial, ascending.
  const std::vector<int>& vars() const { return vars_; }
  int n_prime() const { return static_cast<int>(vars_.size()); }

  std::vector<Support> supports() const;

  bool operator==(const SignedSupport& other) const { return signs_ == other.signs_; }

 private:
  void refresh();

  int n_vars_ = 0;
  SignMap signs_;
  int d_ = 0;
  std::vector<int> vars_;
};

/// s = s1 + s2 with s1 the NNS part (all of B_{0:1} plus nonpositive
/// nonlinear signs) and s2 the PS part (positive nonlinear signs).
struct SignedDecomposition {
  SignedSupport s1;
  SignedSupport s2;

  int m1() const { return s1.m(); }
  int d1() const { return s1.d(); }
  int n1() const { return s1.n_prime(); }
  int m2() const { return s2.m(); }
  int d2() const { return s2.d(); }
  int n2() const { return s2.n_prime(); }
  int m() const { return m1() + m2(); }

  /// Splits s; throws std::invalid_argument unless B_{0:1} is contained in supp(s).
  static SignedDecomposition of(const SignedSupport& s);
};

enum class PolyClass { kAffine, kNS, kPS, kNNS, kNPS, kGeneral };

std::string to_string(PolyClass c);

Rational evaluate(const Polynomial& f, const BinaryPoint& x);

/// Most specific class; precedence affine > NS/PS > NNS/NPS > general.
PolyClass classify(const Polynomial& f);

/// True when classify(f) is one of affine, NS or NNS.
bool is_nns(const Polynomial& f);

struct SignSplit {
  Polynomial nn_part;
  Polynomial ps_part;
};

/// nn keeps constant, linear and negative nonlinear terms; ps keeps positive
/// nonlinear terms.
SignSplit decompose(const Polynomial& f);

SignedSupport signed_support(const Polynomial& f);

/// The signed support constraint f <= s (entry rules of the partial order).
bool within(const Polynomial& f, const SignedSupport& s);

struct MinResult {
  BinaryPoint x;
  Rational value;
};

inline constexpr int kDefaultBruteForceCap = 24;
inline constexpr int kDefaultSubmodularCap = 16;

/// Exhaustive minimum; ties go to the lexicographically smallest x.
MinResult brute_force_min(const Polynomial& f, int cap = kDefaultBruteForceCap);

/// Submodularity over {0,1}^n via the pairwise local exchange inequalities,
/// which are equivalent to the lattice inequality over all pairs.
bool is_submodular(const Polynomial& f, int cap = kDefaultSubmodularCap);

/// Polynomial text format: one "<coeff> : <indices>" term per line, '#'
/// comments. n_vars defaults to the largest index seen.
Polynomial parse_polynomial(const std::string& text, std::optional<int> n_vars = std::nullopt);
std::string format_polynomial(const Polynomial& f);

}  // namespace signcert
