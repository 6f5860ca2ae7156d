#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "signcert/polynomial.hpp"

namespace signcert {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::optional<int> n_vars) {
  std::vector<std::pair<Support, Rational>> terms;
  std::set<Support> seen;
  int max_index = 0;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected '<coeff> : <indices>'");
    }
    Rational c;
    try {
      c = parse_rational(line.substr(0, colon));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
    std::istringstream idx_in(line.substr(colon + 1));
    std::vector<int> idx;
    std::string tok;
    while (idx_in >> tok) {
      std::size_t used = 0;
      int j = 0;
      try {
        j = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || j < 1) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad variable index '" + tok + "'");
      }
      idx.push_back(j);
    }
    Support alpha;
    try {
      alpha = Support(std::move(idx));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!seen.insert(alpha).second) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate monomial {" + alpha.to_string() + "}");
    }
    max_index = std::max(max_index, alpha.max_index());
    terms.emplace_back(std::move(alpha), std::move(c));
  }

  const int n = n_vars.value_or(max_index);
  if (n < max_index) {
    throw std::invalid_argument("index " + std::to_string(max_index) + " exceeds declared n_vars=" + std::to_string(n));
  }
  Polynomial f(n);
  for (auto& [alpha, c] : terms) f.set(alpha, c);
  return f;
}

std::string format_polynomial(const Polynomial& f) {
  std::ostringstream os;
  for (const auto& [alpha, c] : f.terms()) {
    os << to_string(c) << " :";
    if (!alpha.empty()) os << ' ' << alpha.to_string();
    os << '\n';
  }
  return os.str();
}

}  // namespace signcert
