#include "signcert/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace signcert {

Support::Support(std::initializer_list<int> indices) : Support(std::vector<int>(indices)) {}

Support::Support(std::vector<int> indices) : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end()) {
    throw std::invalid_argument("repeated variable index in monomial (not multilinear)");
  }
  if (!idx_.empty() && idx_.front() < 1) {
    throw std::invalid_argument("variable indices are 1-based");
  }
}

bool Support::contains(int j) const { return std::binary_search(idx_.begin(), idx_.end(), j); }

bool Support::subset_of(const Support& other) const {
  return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
}

bool Support::active_at(const BinaryPoint& x) const {
  for (int j : idx_) {
    if (!x[j - 1]) return false;
  }
  return true;
}

std::string Support::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(idx_[i]);
  }
  return out;
}

std::strong_ordering Support::operator<=>(const Support& other) const {
  if (auto c = idx_.size() <=> other.idx_.size(); c != 0) return c;
  return idx_ <=> other.idx_;
}

Polynomial::Polynomial(int n_vars, std::initializer_list<std::pair<Support, Rational>> terms)
    : n_vars_(n_vars) {
  for (const auto& [alpha, c] : terms) add(alpha, c);
}

void Polynomial::check_support(const Support& alpha) const {
  if (alpha.max_index() > n_vars_) {
    throw std::out_of_range("monomial {" + alpha.to_string() + "} exceeds n_vars=" + std::to_string(n_vars_));
  }
}

Rational Polynomial::coeff(const Support& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [alpha, c] : terms_) d = std::max(d, static_cast<int>(alpha.size()));
  return d;
}

void Polynomial::set(const Support& alpha, const Rational& value) {
  check_support(alpha);
  if (value == 0) {
    terms_.erase(alpha);
  } else {
    terms_[alpha] = value;
  }
}

void Polynomial::add(const Support& alpha, const Rational& value) {
  if (value == 0) return;
  check_support(alpha);
  auto [it, inserted] = terms_.try_emplace(alpha, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  n_vars_ = std::max(n_vars_, other.n_vars_);
  for (const auto& [alpha, c] : other.terms_) add(alpha, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  n_vars_ = std::max(n_vars_, other.n_vars_);
  for (const auto& [alpha, c] : other.terms_) add(alpha, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= scale;
  return *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && !alpha.empty();
    if (!unit) os << signcert::to_string(mag);
    for (int j : alpha) os << "x" << j;
  }
  return os.str();
}

std::string to_string(PolyClass c) {
  switch (c) {
    case PolyClass::kAffine: return "affine";
    case PolyClass::kNS: return "NS";
    case PolyClass::kPS: return "PS";
    case PolyClass::kNNS: return "NNS";
    case PolyClass::kNPS: return "NPS";
    case PolyClass::kGeneral: return "general";
  }
  return "general";
}

Rational evaluate(const Polynomial& f, const BinaryPoint& x) {
  if (static_cast<int>(x.size()) != f.n_vars()) {
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " entries, polynomial has " +
                                std::to_string(f.n_vars()) + " variables");
  }
  Rational v(0);
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.active_at(x)) v += c;
  }
  return v;
}

PolyClass classify(const Polynomial& f) {
  bool any_pos = false, any_neg = false, nl_pos = false, nl_neg = false;
  for (const auto& [alpha, c] : f.terms()) {
    bool pos = c > 0;
    (pos ? any_pos : any_neg) = true;
    if (alpha.is_nonlinear()) (pos ? nl_pos : nl_neg) = true;
  }
  if (!nl_pos && !nl_neg) return PolyClass::kAffine;
  if (!any_pos) return PolyClass::kNS;
  if (!any_neg) return PolyClass::kPS;
  if (!nl_pos) return PolyClass::kNNS;
  if (!nl_neg) return PolyClass::kNPS;
  return PolyClass::kGeneral;
}

bool is_nns(const Polynomial& f) {
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.is_nonlinear() && c > 0) return false;
  }
  return true;
}

SignSplit decompose(const Polynomial& f) {
  SignSplit out{Polynomial(f.n_vars()), Polynomial(f.n_vars())};
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.is_nonlinear() && c > 0) {
      out.ps_part.set(alpha, c);
    } else {
      out.nn_part.set(alpha, c);
    }
  }
  return out;
}

}  // namespace signcert
