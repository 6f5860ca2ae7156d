#include <cstdio>
#include <string>
#include <vector>

#include "signcert/lp_model.hpp"

namespace signcert {

namespace {

std::string mangle(char prefix, std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%c%07zu", prefix, k);
  return buf;
}

// Shortest %g rendering that fits the 12-character numeric field.
std::string number(const Rational& r) {
  const double v = to_double(r);
  char buf[64];
  for (int prec = 12; prec >= 1; --prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::string(buf).size() <= 12) return buf;
  }
  return buf;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Field layout: columns 2-3, 5-12, 15-22, 25-36.
std::string entry(const std::string& code, const std::string& n1, const std::string& n2, const std::string& value) {
  std::string line = " " + pad(code, 2) + " " + pad(n1, 8);
  if (!n2.empty()) line += "  " + pad(n2, 8) + "  " + value;
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

}  // namespace

void write_mps(const LpModel& model, std::ostream& mps, std::ostream* names, const std::string& model_name) {
  const auto& rows = model.constraints();
  const auto& vars = model.vars();

  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(vars.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [v, c] : rows[i].row) columns[v].emplace_back(i, c);
  }

  if (names) {
    for (std::size_t i = 0; i < rows.size(); ++i) *names << mangle('R', i + 1) << ' ' << rows[i].name << '\n';
    for (std::size_t j = 0; j < vars.size(); ++j) *names << mangle('C', j + 1) << ' ' << vars[j].name << '\n';
  }

  mps << "NAME          " << model_name.substr(0, 8) << '\n';
  mps << "OBJSENSE\n    MAX\n";
  mps << "ROWS\n";
  mps << entry("N", "OBJ", "", "") << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const char* code = rows[i].sense == Sense::kLe ? "L" : rows[i].sense == Sense::kGe ? "G" : "E";
    mps << entry(code, mangle('R', i + 1), "", "") << '\n';
  }

  mps << "COLUMNS\n";
  const auto& obj = model.objective().terms();
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const std::string col = mangle('C', j + 1);
    auto it = obj.find(static_cast<int>(j));
    if (it != obj.end() || columns[j].empty()) {
      mps << entry("", col, "OBJ", number(it != obj.end() ? it->second : Rational(0))) << '\n';
    }
    for (const auto& [i, c] : columns[j]) mps << entry("", col, mangle('R', i + 1), number(c)) << '\n';
  }

  mps << "RHS\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rhs != 0) mps << entry("", "RHS", mangle('R', i + 1), number(rows[i].rhs)) << '\n';
  }

  bool any_free = false;
  for (const auto& v : vars) any_free = any_free || v.free;
  if (any_free) {
    mps << "BOUNDS\n";
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (vars[j].free) mps << entry("FR", "BND", mangle('C', j + 1), "") << '\n';
    }
  }
  mps << "ENDATA\n";
}

}  // namespace signcert
