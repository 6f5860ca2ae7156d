#include "signcert/concave_ext.hpp"

#include <algorithm>
#include <cstdint>
#include <json.hpp>
#include <set>
#include <stdexcept>

namespace signcert {

int Selector::at(const Support& alpha) const {
  auto it = assignment.find(alpha);
  if (it == assignment.end()) throw std::out_of_range("selector undefined on {" + alpha.to_string() + "}");
  return it->second;
}

std::string to_string(ExtensionMethod m) {
  switch (m) {
    case ExtensionMethod::kStandard: return "standard";
    case ExtensionMethod::kLovasz: return "lovasz";
    case ExtensionMethod::kRelaxedLovasz: return "relaxed_lovasz";
  }
  return "standard";
}

ExtensionSet all_standard_selectors(const SignedSupport& s2, std::size_t cap) {
  const auto supports = s2.supports();
  std::size_t total = 1;
  for (const auto& alpha : supports) {
    if (total > cap / std::max<std::size_t>(alpha.size(), 1)) {
      throw std::length_error("standard extension set exceeds cap " + std::to_string(cap));
    }
    total *= std::max<std::size_t>(alpha.size(), 1);
  }
  if (total > cap) throw std::length_error("standard extension set exceeds cap " + std::to_string(cap));

  ExtensionSet es;
  es.base = s2;
  es.method = ExtensionMethod::kStandard;
  es.selectors.reserve(total);
  // Mixed-radix counter over the monomials, last monomial varying fastest.
  std::vector<std::size_t> digit(supports.size(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    Selector sel;
    for (std::size_t k = 0; k < supports.size(); ++k) {
      sel.assignment.emplace(supports[k], supports[k].indices()[digit[k]]);
    }
    es.selectors.push_back(std::move(sel));
    for (std::size_t k = supports.size(); k-- > 0;) {
      if (++digit[k] < supports[k].size()) break;
      digit[k] = 0;
    }
  }
  return es;
}

Selector lovasz_selector_from_order(const std::vector<int>& pi, const SignedSupport& s2) {
  const auto& vars = s2.vars();
  std::vector<int> sorted = pi;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != vars) throw std::invalid_argument("ordering is not a permutation of N_s");
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < pi.size(); ++i) pos[pi[i]] = i;

  Selector sel;
  for (const auto& [alpha, s] : s2.signs()) {
    int last = alpha.indices().front();
    for (int j : alpha) {
      if (pos.at(j) > pos.at(last)) last = j;
    }
    sel.assignment.emplace(alpha, last);
  }
  return sel;
}

namespace {

using Mask = std::uint32_t;

std::vector<int> order_from_set(Mask chosen, int n) {
  std::vector<int> order;
  for (int b = 0; b < n; ++b) {
    if (chosen >> b & 1U) order.push_back(b);
  }
  for (int b = 0; b < n; ++b) {
    if (!(chosen >> b & 1U)) order.push_back(b);
  }
  return order;
}

std::vector<Mask> prefix_masks(const std::vector<int>& order) {
  std::vector<Mask> out{0};
  Mask m = 0;
  for (int b : order) {
    m |= Mask{1} << b;
    out.push_back(m);
  }
  return out;
}

std::vector<std::vector<int>> greedy_cover(int n) {
  const std::size_t cube = std::size_t{1} << n;
  std::vector<std::uint8_t> covered(cube, 0);
  std::vector<std::vector<int>> orders;

  // Subsets in increasing size, each size in lexicographic order of index lists.
  for (int k = 0; k <= n; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      Mask m = 0;
      for (int b : comb) m |= Mask{1} << b;
      if (!covered[m]) {
        auto order = order_from_set(m, n);
        for (Mask p : prefix_masks(order)) covered[p] = 1;
        orders.push_back(std::move(order));
      }
      int i = k - 1;
      while (i >= 0 && comb[i] == n - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int t = i + 1; t < k; ++t) comb[t] = comb[t - 1] + 1;
    }
  }

  std::vector<std::uint32_t> coverage(cube, 0);
  for (const auto& o : orders) {
    for (Mask p : prefix_masks(o)) ++coverage[p];
  }
  std::vector<std::vector<int>> kept;
  for (auto& o : orders) {
    auto prefixes = prefix_masks(o);
    bool redundant = std::all_of(prefixes.begin(), prefixes.end(), [&](Mask p) { return coverage[p] >= 2; });
    if (redundant) {
      for (Mask p : prefixes) --coverage[p];
    } else {
      kept.push_back(std::move(o));
    }
  }
  return kept;
}

// Greene-Kleitman bracket matching: 0 opens, 1 closes. A chain bottom has no
// unmatched 1; its chain flips the unmatched 0s from left to right.
std::vector<std::vector<int>> symmetric_chain_cover(int n) {
  const std::size_t cube = std::size_t{1} << n;
  std::vector<std::vector<int>> orders;
  for (Mask m = 0; m < cube; ++m) {
    std::vector<int> open;
    std::vector<std::uint8_t> matched(n, 0);
    bool bottom = true;
    for (int b = 0; b < n && bottom; ++b) {
      if (m >> b & 1U) {
        if (open.empty()) {
          bottom = false;
        } else {
          matched[open.back()] = 1;
          matched[b] = 1;
          open.pop_back();
        }
      } else {
        open.push_back(b);
      }
    }
    if (!bottom) continue;
    std::vector<int> order;
    for (int b = 0; b < n; ++b) {
      if (m >> b & 1U) order.push_back(b);
    }
    for (int b = 0; b < n; ++b) {
      if (!matched[b]) order.push_back(b);
    }
    for (int b = 0; b < n; ++b) {
      if (matched[b] && !(m >> b & 1U)) order.push_back(b);
    }
    orders.push_back(std::move(order));
  }
  return orders;
}

}  // namespace

std::vector<std::vector<int>> prefix_cover_orders(const std::vector<int>& vars, const LovaszOptions& opt) {
  const int n = static_cast<int>(vars.size());
  if (n > opt.cap || n > 30) {
    throw std::length_error("Lovász cover over " + std::to_string(n) + " variables exceeds cap " + std::to_string(opt.cap));
  }
  auto local = opt.symmetric_chains ? symmetric_chain_cover(n) : greedy_cover(n);
  for (auto& o : local) {
    for (int& b : o) b = vars[b];
  }
  return local;
}

ExtensionSet relaxed_lovasz_set(const SignedSupport& s2, const LovaszOptions& opt) {
  ExtensionSet es;
  es.base = s2;
  es.method = ExtensionMethod::kRelaxedLovasz;
  for (auto& order : prefix_cover_orders(s2.vars(), opt)) {
    Selector sel = lovasz_selector_from_order(order, s2);
    if (std::find(es.selectors.begin(), es.selectors.end(), sel) != es.selectors.end()) continue;
    es.selectors.push_back(std::move(sel));
    es.orders.push_back(std::move(order));
  }
  return es;
}

Polynomial apply(const Selector& sel, const Polynomial& f_ps) {
  Polynomial out(f_ps.n_vars());
  for (const auto& [alpha, c] : f_ps.terms()) {
    if (!alpha.is_nonlinear() || c < 0) {
      throw std::invalid_argument("apply: term {" + alpha.to_string() + "} is not a positive nonlinear monomial");
    }
    auto it = sel.assignment.find(alpha);
    if (it == sel.assignment.end()) {
      throw std::invalid_argument("apply: monomial {" + alpha.to_string() + "} outside the selector's support");
    }
    out.add(Support{it->second}, c);
  }
  return out;
}

bool verify_exact(const ExtensionSet& es, int cap) {
  const auto& vars = es.base.vars();
  const int n = static_cast<int>(vars.size());
  if (n > cap || n > 30) {
    throw std::length_error("verify_exact over " + std::to_string(n) + " variables exceeds cap " + std::to_string(cap));
  }
  std::map<int, int> bit;
  for (int b = 0; b < n; ++b) bit[vars[b]] = b;

  const auto supports = es.base.supports();
  std::vector<Mask> alpha_mask;
  for (const auto& alpha : supports) {
    Mask m = 0;
    for (int j : alpha) m |= Mask{1} << bit.at(j);
    alpha_mask.push_back(m);
  }

  // Per selector, the bit chosen for each monomial; invalid selectors fail here.
  std::vector<std::vector<int>> chosen;
  for (const auto& sel : es.selectors) {
    if (sel.assignment.size() != supports.size()) return false;
    std::vector<int> row;
    for (const auto& alpha : supports) {
      auto it = sel.assignment.find(alpha);
      if (it == sel.assignment.end() || !alpha.contains(it->second)) return false;
      row.push_back(bit.at(it->second));
    }
    chosen.push_back(std::move(row));
  }
  if (chosen.empty()) return false;

  const Mask cube = Mask{1} << n;
  for (Mask x = 0; x < cube; ++x) {
    bool exact = false;
    for (const auto& row : chosen) {
      bool ok = true;
      for (std::size_t a = 0; a < supports.size() && ok; ++a) {
        bool mono = (x & alpha_mask[a]) == alpha_mask[a];
        bool lin = x >> row[a] & 1U;
        ok = mono == lin;
      }
      if (ok) {
        exact = true;
        break;
      }
    }
    if (!exact) return false;
  }
  return true;
}

namespace {

nlohmann::ordered_json selector_json(const Selector& sel) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [alpha, v] : sel.assignment) j[alpha.to_string()] = v;
  return j;
}

}  // namespace

std::string selector_to_json(const Selector& sel) { return selector_json(sel).dump(); }

std::string extension_set_to_json(const ExtensionSet& es) {
  nlohmann::ordered_json j;
  j["method"] = to_string(es.method);
  j["selectors"] = nlohmann::ordered_json::array();
  for (const auto& sel : es.selectors) j["selectors"].push_back(selector_json(sel));
  if (!es.orders.empty()) j["orders"] = es.orders;
  return j.dump(2);
}

}  // namespace signcert
