#include "signcert/lp_model.hpp"

#include <stdexcept>

namespace signcert {

LinExpr LinExpr::var(int id, const Rational& coef) {
  LinExpr e;
  e.add(id, coef);
  return e;
}

LinExpr& LinExpr::add(int id, const Rational& coef) {
  if (coef == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(id, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  constant_ += o.constant_;
  for (const auto& [id, c] : o.terms_) add(id, c);
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
  constant_ -= o.constant_;
  for (const auto& [id, c] : o.terms_) add(id, -c);
  return *this;
}

LinExpr& LinExpr::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    constant_ = 0;
    return *this;
  }
  constant_ *= s;
  for (auto& [id, c] : terms_) c *= s;
  return *this;
}

Rational LinExpr::evaluate(const std::vector<Rational>& values) const {
  Rational v = constant_;
  for (const auto& [id, c] : terms_) v += c * values.at(id);
  return v;
}

int LpModel::add_var(const std::string& name, bool free) {
  const int id = static_cast<int>(vars_.size());
  if (!var_index_.emplace(name, id).second) throw std::invalid_argument("duplicate variable name " + name);
  vars_.push_back({name, free});
  return id;
}

int LpModel::add_constraint(const std::string& name, const LinExpr& lhs, Sense sense, const LinExpr& rhs) {
  const int id = static_cast<int>(rows_.size());
  if (!row_index_.emplace(name, id).second) throw std::invalid_argument("duplicate constraint name " + name);
  LinExpr diff = lhs - rhs;
  Constraint c;
  c.name = name;
  c.sense = sense;
  c.rhs = -diff.constant();
  for (const auto& [v, coef] : diff.terms()) {
    if (v < 0 || v >= static_cast<int>(vars_.size())) {
      throw std::out_of_range("constraint " + name + " references undeclared variable " + std::to_string(v));
    }
    c.row.emplace_back(v, coef);
  }
  rows_.push_back(std::move(c));
  return id;
}

int LpModel::find_var(const std::string& name) const {
  auto it = var_index_.find(name);
  return it == var_index_.end() ? -1 : it->second;
}

bool LpModel::satisfied_by(const std::vector<Rational>& values) const {
  if (values.size() != vars_.size()) return false;
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    if (!vars_[j].free && values[j] < 0) return false;
  }
  for (const auto& c : rows_) {
    Rational lhs = 0;
    for (const auto& [v, coef] : c.row) lhs += coef * values[v];
    switch (c.sense) {
      case Sense::kLe:
        if (lhs > c.rhs) return false;
        break;
      case Sense::kGe:
        if (lhs < c.rhs) return false;
        break;
      case Sense::kEq:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace signcert
