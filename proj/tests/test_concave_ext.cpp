#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "json.hpp"
#include "random_poly.hpp"
#include "signcert/concave_ext.hpp"

using namespace signcert;
using signcert::testing::Rng;

namespace {

SignedSupport ps_support(int n, std::initializer_list<std::initializer_list<int>> monos) {
  SignedSupport s(n);
  for (auto m : monos) s.set(Support(std::vector<int>(m)), 1);
  return s;
}

Selector sel(std::initializer_list<std::pair<std::initializer_list<int>, int>> items) {
  Selector out;
  for (auto& [m, j] : items) out.assignment[Support(std::vector<int>(m))] = j;
  return out;
}

std::uint64_t mask_of(const std::vector<int>& idx) {
  std::uint64_t m = 0;
  for (int j : idx) m |= std::uint64_t{1} << (j - 1);
  return m;
}

// Every subset of vars must be the prefix set of some ordering.
bool covers_cube(const std::vector<std::vector<int>>& orders, const std::vector<int>& vars) {
  std::set<std::uint64_t> prefixes;
  for (const auto& o : orders) {
    std::uint64_t m = 0;
    prefixes.insert(m);
    for (int j : o) prefixes.insert(m |= std::uint64_t{1} << (j - 1));
  }
  const std::size_t k = vars.size();
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
    std::vector<int> pick;
    for (std::size_t b = 0; b < k; ++b) {
      if ((sub >> b) & 1U) pick.push_back(vars[b]);
    }
    if (!prefixes.count(mask_of(pick))) return false;
  }
  return true;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

TEST(AllStandardSelectors, Examples) {
  auto a = all_standard_selectors(ps_support(2, {{1, 2}}));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a.selectors[0], sel({{{1, 2}, 1}}));
  EXPECT_EQ(a.selectors[1], sel({{{1, 2}, 2}}));
  EXPECT_EQ(all_standard_selectors(ps_support(3, {{1, 2}, {2, 3}})).size(), 4u);
  auto e = all_standard_selectors(SignedSupport(3));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_TRUE(e.selectors[0].assignment.empty());
  EXPECT_THROW(all_standard_selectors(ps_support(6, {{1, 2, 3}, {4, 5, 6}, {1, 4}}), 17), std::length_error);
}

TEST(LovaszSelectorFromOrder, Examples) {
  auto s2 = ps_support(3, {{1, 2}, {2, 3}, {1, 2, 3}});
  EXPECT_EQ(lovasz_selector_from_order({1, 2, 3}, s2), sel({{{1, 2}, 2}, {{2, 3}, 3}, {{1, 2, 3}, 3}}));
  EXPECT_EQ(lovasz_selector_from_order({3, 2, 1}, s2), sel({{{1, 2}, 1}, {{2, 3}, 2}, {{1, 2, 3}, 1}}));
  EXPECT_EQ(lovasz_selector_from_order({2, 1}, ps_support(2, {{1, 2}})), sel({{{1, 2}, 1}}));
  EXPECT_THROW(lovasz_selector_from_order({1, 2}, s2), std::invalid_argument);
  EXPECT_THROW(lovasz_selector_from_order({1, 1, 3}, s2), std::invalid_argument);
}

TEST(RelaxedLovaszSet, Examples) {
  auto a = relaxed_lovasz_set(ps_support(2, {{1, 2}}));
  ASSERT_EQ(a.orders.size(), 2u);
  EXPECT_EQ(a.orders[0], (std::vector<int>{1, 2}));
  EXPECT_EQ(a.orders[1], (std::vector<int>{2, 1}));
  EXPECT_EQ(a.size(), 2u);

  auto full = relaxed_lovasz_set(ps_support(3, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}));
  EXPECT_GE(full.orders.size(), 3u);
  EXPECT_LE(full.orders.size(), 8u);
  EXPECT_TRUE(verify_exact(full));

  auto e = relaxed_lovasz_set(SignedSupport(2));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_TRUE(e.selectors[0].assignment.empty());
}

TEST(PrefixCoverOrders, GreedyOutputIsIrreducible) {
  for (int k = 1; k <= 7; ++k) {
    std::vector<int> vars(k);
    for (int j = 0; j < k; ++j) vars[j] = 2 * j + 1;
    auto orders = prefix_cover_orders(vars);
    EXPECT_TRUE(covers_cube(orders, vars));
    EXPECT_LE(orders.size(), std::size_t{1} << k);
    for (std::size_t drop = 0; drop < orders.size() && orders.size() > 1; ++drop) {
      auto fewer = orders;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
      EXPECT_FALSE(covers_cube(fewer, vars)) << "k=" << k << " drop=" << drop;
    }
  }
}

TEST(PrefixCoverOrders, SymmetricChainsMeetTheSpernerBound) {
  for (int k = 1; k <= 10; ++k) {
    std::vector<int> vars(k);
    for (int j = 0; j < k; ++j) vars[j] = j + 1;
    auto orders = prefix_cover_orders(vars, {true, kDefaultLovaszCap});
    EXPECT_TRUE(covers_cube(orders, vars));
    EXPECT_EQ(orders.size(), binomial(k, k / 2));
  }
  std::vector<int> big(21);
  for (int j = 0; j < 21; ++j) big[j] = j + 1;
  EXPECT_THROW(prefix_cover_orders(big), std::length_error);
}

TEST(Apply, Examples) {
  auto f = parse_polynomial("2 : 1 2\n3 : 2 3", 3);
  EXPECT_EQ(apply(sel({{{1, 2}, 2}, {{2, 3}, 2}}), f), parse_polynomial("5 : 2", 3));
  EXPECT_EQ(apply(sel({{{1, 2}, 1}}), parse_polynomial("1 : 1 2", 2)), parse_polynomial("1 : 1", 2));
  EXPECT_TRUE(apply(Selector{}, Polynomial(2)).is_zero());
  EXPECT_THROW(apply(sel({{{1, 2}, 1}}), parse_polynomial("-1 : 1 2", 2)), std::invalid_argument);
  EXPECT_THROW(apply(sel({{{1, 2}, 1}}), parse_polynomial("1 : 2 3", 3)), std::invalid_argument);
}

TEST(VerifyExact, Examples) {
  auto s2 = ps_support(2, {{1, 2}});
  EXPECT_TRUE(verify_exact(all_standard_selectors(s2)));
  EXPECT_TRUE(verify_exact(relaxed_lovasz_set(s2)));
  ExtensionSet single{{sel({{{1, 2}, 1}})}, s2, ExtensionMethod::kStandard, {}};
  EXPECT_FALSE(verify_exact(single));
  ExtensionSet outside{{sel({{{1, 2}, 3}})}, ps_support(3, {{1, 2}}), ExtensionMethod::kStandard, {}};
  EXPECT_FALSE(verify_exact(outside));
}

// Pointwise check with actual coefficients, independent of verify_exact.
TEST(Properties, OverestimationAndExactnessOnRandomPs) {
  Rng rng(21);
  for (int t = 0; t < 120; ++t) {
    const int n = 2 + t % 6;
    auto f = signcert::testing::random_ps(rng, n, 1 + t % 4, 3);
    auto s2 = signed_support(f);
    std::vector<ExtensionSet> sets{relaxed_lovasz_set(s2), relaxed_lovasz_set(s2, {true, kDefaultLovaszCap})};
    if (t % 2 == 0) sets.push_back(all_standard_selectors(s2));
    for (const auto& es : sets) {
      std::vector<Polynomial> lin;
      for (const auto& s : es.selectors) lin.push_back(apply(s, f));
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const Rational fx = signcert::testing::naive_value(f, mask);
        bool tight = false;
        for (const auto& g : lin) {
          const Rational gx = signcert::testing::naive_value(g, mask);
          EXPECT_GE(gx, fx);
          tight = tight || gx == fx;
        }
        EXPECT_TRUE(tight) << f.to_string() << " mask=" << mask << " method=" << to_string(es.method);
      }
    }
  }
}

TEST(Properties, SizeBounds) {
  Rng rng(22);
  for (int t = 0; t < 80; ++t) {
    auto f = signcert::testing::random_ps(rng, 2 + t % 7, 1 + t % 5, 4);
    auto s2 = signed_support(f);
    std::size_t prod = 1;
    for (const auto& [alpha, sg] : s2.signs()) prod *= alpha.size();
    auto st = all_standard_selectors(s2);
    EXPECT_EQ(st.size(), prod);
    double dm = 1;
    for (int k = 0; k < s2.m(); ++k) dm *= s2.d();
    EXPECT_LE(static_cast<double>(st.size()), dm);
    EXPECT_LE(relaxed_lovasz_set(s2).size(), std::size_t{1} << s2.n_prime());
    EXPECT_LE(relaxed_lovasz_set(s2, {true, kDefaultLovaszCap}).size(),
              binomial(s2.n_prime(), s2.n_prime() / 2));
  }
}

// The coefficient on x_{pi(j)} is f(S_j) - f(S_{j-1}) along the prefix chain.
TEST(Properties, LovaszSelectorMatchesFiniteDifferences) {
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 6;
    auto f = signcert::testing::random_ps(rng, n, 1 + t % 5, 4);
    auto s2 = signed_support(f);
    std::vector<int> pi = s2.vars();
    std::shuffle(pi.begin(), pi.end(), rng);
    auto g = apply(lovasz_selector_from_order(pi, s2), f);
    std::uint64_t prefix = 0;
    for (int j : pi) {
      const Rational before = signcert::testing::naive_value(f, prefix);
      prefix |= std::uint64_t{1} << (j - 1);
      EXPECT_EQ(g.linear(j), signcert::testing::naive_value(f, prefix) - before);
    }
  }
}

TEST(Json, SelectorAndSet) {
  EXPECT_EQ(selector_to_json(sel({{{1, 2}, 2}, {{2, 3}, 3}})), R"({"1 2":2,"2 3":3})");
  auto es = relaxed_lovasz_set(ps_support(2, {{1, 2}}));
  auto j = nlohmann::json::parse(extension_set_to_json(es));
  EXPECT_EQ(j["method"], "relaxed_lovasz");
  EXPECT_EQ(j["orders"], nlohmann::json::parse("[[1,2],[2,1]]"));
  EXPECT_EQ(j["selectors"], nlohmann::json::parse(R"([{"1 2":2},{"1 2":1}])"));
}
