#include <cstdint>
#include <stdexcept>
#include <vector>

#include "signcert/polynomial.hpp"

namespace signcert {

namespace {

// f scaled by the lcm of its denominators, with each monomial as a bitmask in
// which x_1 is the most significant of n bits (so increasing masks enumerate
// points in lexicographic order).
struct ScaledTerms {
  mpz_class scale;
  std::vector<std::uint64_t> masks;
  std::vector<mpz_class> coeffs;
  bool fits_int64 = true;
};

ScaledTerms scale_terms(const Polynomial& f) {
  const int n = f.n_vars();
  ScaledTerms st;
  st.scale = 1;
  for (const auto& [alpha, c] : f.terms()) mpz_lcm(st.scale.get_mpz_t(), st.scale.get_mpz_t(), c.get_den_mpz_t());
  mpz_class total = 0;
  for (const auto& [alpha, c] : f.terms()) {
    std::uint64_t mask = 0;
    for (int j : alpha) mask |= std::uint64_t{1} << (n - j);
    mpz_class num = c.get_num() * (st.scale / c.get_den());
    total += abs(num);
    st.masks.push_back(mask);
    st.coeffs.push_back(std::move(num));
  }
  st.fits_int64 = total < (mpz_class(1) << 62);
  return st;
}

BinaryPoint point_of(std::uint64_t mask, int n) {
  BinaryPoint x(n);
  for (int j = 1; j <= n; ++j) x[j - 1] = (mask >> (n - j)) & 1U;
  return x;
}

template <typename Int>
std::vector<Int> narrow(const std::vector<mpz_class>& v) {
  std::vector<Int> out;
  out.reserve(v.size());
  for (const auto& z : v) {
    if constexpr (std::is_same_v<Int, mpz_class>) {
      out.push_back(z);
    } else {
      out.push_back(static_cast<Int>(z.get_si()));
    }
  }
  return out;
}

template <typename Int>
Int value_at(std::uint64_t x, const std::vector<std::uint64_t>& masks, const std::vector<Int>& coeffs) {
  Int v = 0;
  for (std::size_t t = 0; t < masks.size(); ++t) {
    if ((x & masks[t]) == masks[t]) v += coeffs[t];
  }
  return v;
}

template <typename Int>
std::pair<std::uint64_t, Int> scan_min(int n, const ScaledTerms& st) {
  const auto coeffs = narrow<Int>(st.coeffs);
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t best_x = 0;
  Int best = value_at<Int>(0, st.masks, coeffs);
  for (std::uint64_t x = 1; x < count; ++x) {
    Int v = value_at<Int>(x, st.masks, coeffs);
    if (v < best) {
      best = v;
      best_x = x;
    }
  }
  return {best_x, best};
}

template <typename Int>
bool scan_submodular(int n, const ScaledTerms& st) {
  const auto coeffs = narrow<Int>(st.coeffs);
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<Int> table(count);
  for (std::uint64_t x = 0; x < count; ++x) table[x] = value_at<Int>(x, st.masks, coeffs);
  for (std::uint64_t x = 0; x < count; ++x) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      if (x & bi) continue;
      for (int j = i + 1; j < n; ++j) {
        const std::uint64_t bj = std::uint64_t{1} << j;
        if (x & bj) continue;
        if (table[x | bi] + table[x | bj] < table[x | bi | bj] + table[x]) return false;
      }
    }
  }
  return true;
}

}  // namespace

MinResult brute_force_min(const Polynomial& f, int cap) {
  const int n = f.n_vars();
  if (n > cap || n > 62) {
    throw std::length_error("brute_force_min: n_vars=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  ScaledTerms st = scale_terms(f);
  std::uint64_t x;
  Rational value;
  if (st.fits_int64) {
    auto [bx, v] = scan_min<std::int64_t>(n, st);
    x = bx;
    value = Rational(mpz_class(static_cast<long>(v)), st.scale);
  } else {
    auto [bx, v] = scan_min<mpz_class>(n, st);
    x = bx;
    value = Rational(v, st.scale);
  }
  value.canonicalize();
  return {point_of(x, n), value};
}

bool is_submodular(const Polynomial& f, int cap) {
  const int n = f.n_vars();
  if (n > cap || n > 30) {
    throw std::length_error("is_submodular: n_vars=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  ScaledTerms st = scale_terms(f);
  return st.fits_int64 ? scan_submodular<std::int64_t>(n, st) : scan_submodular<mpz_class>(n, st);
}

}  // namespace signcert
