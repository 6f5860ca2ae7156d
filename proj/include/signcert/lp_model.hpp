#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "signcert/rational.hpp"

namespace signcert {

/// constant + sum coef * var, keyed by variable id.
class LinExpr {
 public:
  LinExpr() = default;
  LinExpr(const Rational& c) : constant_(c) {}  // NOLINT: implicit constant promotion
  static LinExpr var(int id, const Rational& coef = 1);

  const Rational& constant() const { return constant_; }
  const std::map<int, Rational>& terms() const { return terms_; }

  LinExpr& add(int id, const Rational& coef);
  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  LinExpr& operator*=(const Rational& s);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, const Rational& s) { return a *= s; }
  friend LinExpr operator*(const Rational& s, LinExpr a) { return a *= s; }

  Rational evaluate(const std::vector<Rational>& values) const;

 private:
  Rational constant_;
  std::map<int, Rational> terms_;
};

enum class Sense { kLe, kEq, kGe };

struct Variable {
  std::string name;
  /// Lower bound is 0 unless free; upper bound is always +inf.
  bool free = false;
};

/// Constraint row: sum coef * var (sense) rhs, no constant on the left.
struct Constraint {
  std::string name;
  std::vector<std::pair<int, Rational>> row;
  Sense sense = Sense::kLe;
  Rational rhs;
};

/// Maximization LP over variables with bounds [0, inf) or (-inf, inf).
class LpModel {
 public:
  int add_var(const std::string& name, bool free = false);
  /// lhs (sense) rhs; constants of both sides are moved to the right.
  int add_constraint(const std::string& name, const LinExpr& lhs, Sense sense, const LinExpr& rhs = LinExpr());
  void set_objective(const LinExpr& obj) { objective_ = obj; }

  const std::vector<Variable>& vars() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return rows_; }
  const LinExpr& objective() const { return objective_; }
  std::size_t num_vars() const { return vars_.size(); }
  std::size_t num_rows() const { return rows_.size(); }

  /// -1 if absent.
  int find_var(const std::string& name) const;

  /// Exact feasibility check of a primal point.
  bool satisfied_by(const std::vector<Rational>& values) const;

 private:
  std::vector<Variable> vars_;
  std::vector<Constraint> rows_;
  LinExpr objective_;
  std::unordered_map<std::string, int> var_index_;
  std::unordered_map<std::string, int> row_index_;
};

/// Fixed-format MPS with 8-character mangled names (R0000001, C0000001). When
/// names is given, one "<mangled> <original>" line per row and column is
/// written to it.
void write_mps(const LpModel& model, std::ostream& mps, std::ostream* names = nullptr,
               const std::string& model_name = "SIGNCERT");

}  // namespace signcert
