#include <algorithm>
#include <set>
#include <stdexcept>

#include "signcert/polynomial.hpp"

namespace signcert {

SignedSupport::SignedSupport(int n_vars, SignMap signs) : n_vars_(n_vars) {
  for (auto& [alpha, s] : signs) {
    if (s == 0) continue;
    if (s != 1 && s != -1) throw std::invalid_argument("sign must be -1, 0 or +1");
    if (alpha.max_index() > n_vars_) throw std::out_of_range("support exceeds n_vars");
    signs_.emplace(alpha, s);
  }
  refresh();
}

int SignedSupport::sign(const Support& alpha) const {
  auto it = signs_.find(alpha);
  return it == signs_.end() ? 0 : it->second;
}

void SignedSupport::set(const Support& alpha, int s) {
  if (s != 0 && s != 1 && s != -1) throw std::invalid_argument("sign must be -1, 0 or +1");
  if (alpha.max_index() > n_vars_) throw std::out_of_range("support exceeds n_vars");
  if (s == 0) {
    signs_.erase(alpha);
  } else {
    signs_[alpha] = s;
  }
  refresh();
}

std::vector<Support> SignedSupport::supports() const {
  std::vector<Support> out;
  out.reserve(signs_.size());
  for (const auto& [alpha, s] : signs_) out.push_back(alpha);
  return out;
}

void SignedSupport::refresh() {
  d_ = 0;
  std::set<int> vars;
  for (const auto& [alpha, s] : signs_) {
    d_ = std::max(d_, static_cast<int>(alpha.size()));
    vars.insert(alpha.begin(), alpha.end());
  }
  vars_.assign(vars.begin(), vars.end());
}

SignedDecomposition SignedDecomposition::of(const SignedSupport& s) {
  const int n = s.n_vars();
  if (!s.contains(Support{})) throw std::invalid_argument("signed support lacks the constant entry");
  for (int j = 1; j <= n; ++j) {
    if (!s.contains(Support{j})) {
      throw std::invalid_argument("signed support lacks linear entry x" + std::to_string(j));
    }
  }
  SignedSupport::SignMap nn, ps;
  for (const auto& [alpha, sg] : s.signs()) {
    if (alpha.is_nonlinear() && sg > 0) {
      ps.emplace(alpha, 1);
    } else {
      nn.emplace(alpha, sg);
    }
  }
  return {SignedSupport(n, std::move(nn)), SignedSupport(n, std::move(ps))};
}

SignedSupport signed_support(const Polynomial& f) {
  SignedSupport::SignMap signs;
  for (const auto& [alpha, c] : f.terms()) signs.emplace(alpha, sgn(c) > 0 ? 1 : -1);
  return SignedSupport(f.n_vars(), std::move(signs));
}

bool within(const Polynomial& f, const SignedSupport& s) {
  if (f.n_vars() != s.n_vars()) {
    throw std::invalid_argument("within: polynomial and signed support differ in n_vars");
  }
  for (const auto& [alpha, c] : f.terms()) {
    int sg = s.sign(alpha);
    if (sg == 0) return false;
    if (alpha.is_nonlinear() && sgn(c) != sg) return false;
  }
  return true;
}

}  // namespace signcert
