#include <gtest/gtest.h>

#include "random_poly.hpp"
#include "signcert/polynomial.hpp"

using namespace signcert;
using signcert::testing::Rng;

namespace {

Polynomial poly(const char* text, int n) { return parse_polynomial(text, n); }

}  // namespace

TEST(Support, CanonicalOrderAndGradedLex) {
  Support a{3, 1};
  EXPECT_EQ(a.indices(), (std::vector<int>{1, 3}));
  EXPECT_LT(Support{}, Support{5});
  EXPECT_LT(Support{5}, Support({1, 2}));
  EXPECT_LT(Support({1, 2}), Support({1, 3}));
  EXPECT_THROW(Support({1, 1}), std::invalid_argument);
  EXPECT_THROW(Support({0, 2}), std::invalid_argument);
}

TEST(Polynomial, ZeroCoefficientsAreNotStored) {
  Polynomial f(2);
  f.set(Support{1}, 3);
  f.add(Support{1}, -3);
  EXPECT_TRUE(f.is_zero());
  f.set(Support{1, 2}, 0);
  EXPECT_EQ(f.size(), 0u);
  EXPECT_THROW(f.set(Support{3}, 1), std::out_of_range);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(poly("1 : 1 2", 2), {1, 1}), 1);
  EXPECT_EQ(evaluate(poly("1 :\n-1 : 1\n-1 : 2", 2), {1, 1}), -1);
  EXPECT_EQ(evaluate(poly("3 :\n-1 : 1 2\n-1 : 2 3", 3), {1, 1, 1}), 1);
  EXPECT_THROW(evaluate(poly("1 : 1", 2), {1}), std::invalid_argument);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(poly("1 :\n1 : 1", 1)), PolyClass::kAffine);
  EXPECT_EQ(classify(poly("1 : 1\n-1 : 1 2", 2)), PolyClass::kNNS);
  EXPECT_EQ(classify(poly("2 : 1 2\n3 : 2 3", 3)), PolyClass::kPS);
  EXPECT_EQ(classify(poly("-2 : 1 2\n-3 : 2 3", 3)), PolyClass::kNS);
  EXPECT_EQ(classify(poly("-1 : 1\n2 : 1 2", 2)), PolyClass::kNPS);
  EXPECT_EQ(classify(poly("-1 : 1 3\n2 : 1 2", 3)), PolyClass::kGeneral);
  EXPECT_EQ(classify(Polynomial(3)), PolyClass::kAffine);
}

TEST(Decompose, Examples) {
  auto s = decompose(poly("1 :\n1 : 1\n-2 : 1 2\n3 : 2 3", 3));
  EXPECT_EQ(s.nn_part, poly("1 :\n1 : 1\n-2 : 1 2", 3));
  EXPECT_EQ(s.ps_part, poly("3 : 2 3", 3));
  auto t = decompose(poly("-1 : 1 2", 2));
  EXPECT_EQ(t.nn_part, poly("-1 : 1 2", 2));
  EXPECT_TRUE(t.ps_part.is_zero());
  auto u = decompose(poly("1 : 1 2 3", 3));
  EXPECT_TRUE(u.nn_part.is_zero());
  EXPECT_EQ(u.ps_part, poly("1 : 1 2 3", 3));
}

TEST(SignedSupportOp, Examples) {
  auto s = signed_support(poly("1 :\n1 : 1\n-2 : 1 2", 2));
  EXPECT_EQ(s.sign(Support{}), 1);
  EXPECT_EQ(s.sign(Support{1}), 1);
  EXPECT_EQ(s.sign(Support{1, 2}), -1);
  EXPECT_EQ(s.m(), 3);
  EXPECT_EQ(s.d(), 2);
  EXPECT_EQ(signed_support(Polynomial(3)).m(), 0);
  auto t = signed_support(poly("3 : 2 3\n-1 : 1 2 3", 3));
  EXPECT_EQ(t.m(), 2);
  EXPECT_EQ(t.d(), 3);
  EXPECT_EQ(t.n_prime(), 3);
}

TEST(SignedSupportOp, DerivedFieldsFollowMutation) {
  SignedSupport s(4);
  s.set(Support{1, 2}, 1);
  EXPECT_EQ(s.n_prime(), 2);
  s.set(Support{2, 3, 4}, -1);
  EXPECT_EQ(s.d(), 3);
  EXPECT_EQ(s.n_prime(), 4);
  s.set(Support{2, 3, 4}, 0);
  EXPECT_EQ(s.d(), 2);
  EXPECT_EQ(s.m(), 1);
}

TEST(SignedDecompositionOp, SplitsAndRequiresAffineSupport) {
  SignedSupport::SignMap m{{Support{}, 1}, {Support{1}, -1}, {Support{2}, 1}, {Support{1, 2}, 1}};
  auto sd = SignedDecomposition::of(SignedSupport(2, m));
  EXPECT_EQ(sd.m1(), 3);
  EXPECT_EQ(sd.m2(), 1);
  EXPECT_EQ(sd.d2(), 2);
  EXPECT_EQ(sd.n2(), 2);
  m.erase(Support{2});
  EXPECT_THROW(SignedDecomposition::of(SignedSupport(2, m)), std::invalid_argument);
}

TEST(Within, Examples) {
  SignedSupport s(2, {{Support{1, 2}, -1}});
  EXPECT_TRUE(within(poly("-1 : 1 2", 2), s));
  EXPECT_FALSE(within(poly("1 : 1 2", 2), s));
  SignedSupport lin(1, {{Support{1}, 1}});
  EXPECT_TRUE(within(poly("-1 : 1", 1), lin));
  EXPECT_FALSE(within(poly("1 :", 1), lin));
  EXPECT_THROW(within(poly("1 : 1", 1), SignedSupport(2)), std::invalid_argument);
}

TEST(BruteForceMin, Examples) {
  auto a = brute_force_min(poly("1 :\n-1 : 1\n-1 : 2", 2));
  EXPECT_EQ(a.value, -1);
  EXPECT_EQ(a.x, (BinaryPoint{1, 1}));
  auto b = brute_force_min(poly("1 : 1\n1 : 2\n-2 : 1 2", 2));
  EXPECT_EQ(b.value, 0);
  EXPECT_EQ(b.x, (BinaryPoint{0, 0}));
  auto c = brute_force_min(Polynomial(3));
  EXPECT_EQ(c.value, 0);
  EXPECT_EQ(c.x, (BinaryPoint{0, 0, 0}));
  EXPECT_THROW(brute_force_min(Polynomial(30), 24), std::length_error);
}

TEST(BruteForceMin, LexicographicTieBreak) {
  // minimum 0 at (0,1) and (1,1)
  auto r = brute_force_min(poly("1 :\n2 : 1\n-1 : 2\n-2 : 1 2", 2));
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.x, (BinaryPoint{0, 1}));
}

TEST(BruteForceMin, AgreesWithNaiveEnumeration) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    auto f = signcert::testing::random_polynomial(rng, 1 + t % 8, 3, 3);
    auto r = brute_force_min(f);
    EXPECT_EQ(r.value, signcert::testing::naive_min(f));
    EXPECT_EQ(evaluate(f, r.x), r.value);
  }
}

TEST(IsSubmodular, Examples) {
  EXPECT_FALSE(is_submodular(poly("1 : 1 2", 2)));
  EXPECT_TRUE(is_submodular(poly("3 :\n-1 : 1\n2 : 2", 2)));
  EXPECT_TRUE(is_submodular(poly("1 : 1\n-1 : 1 2", 2)));
  EXPECT_THROW(is_submodular(Polynomial(17)), std::length_error);
}

// Definition check over all pairs, independent of the library's local test.
TEST(IsSubmodular, MatchesAllPairsDefinition) {
  Rng rng(5);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + t % 4;
    auto f = signcert::testing::random_polynomial(rng, n, 2, 2, 3);
    bool sub = true;
    for (std::uint64_t x = 0; x < (1u << n) && sub; ++x) {
      for (std::uint64_t y = 0; y < (1u << n) && sub; ++y) {
        sub = signcert::testing::naive_value(f, x) + signcert::testing::naive_value(f, y) >=
              signcert::testing::naive_value(f, x | y) + signcert::testing::naive_value(f, x & y);
      }
    }
    EXPECT_EQ(is_submodular(f), sub) << f.to_string();
  }
}

TEST(Properties, DecomposeReconstructs) {
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    auto f = signcert::testing::random_polynomial(rng, 1 + t % 10, 4, 4, 4);
    auto s = decompose(f);
    EXPECT_EQ(s.nn_part + s.ps_part, f);
    auto cn = classify(s.nn_part);
    EXPECT_TRUE(cn == PolyClass::kNNS || cn == PolyClass::kNS || cn == PolyClass::kAffine);
    auto cp = classify(s.ps_part);
    EXPECT_TRUE(cp == PolyClass::kPS || (cp == PolyClass::kAffine && s.ps_part.is_zero()));
    EXPECT_TRUE(within(f, signed_support(f)));
  }
}

TEST(Properties, NnsPolynomialsAreSubmodular) {
  Rng rng(2);
  for (int t = 0; t < 60; ++t) {
    auto f = signcert::testing::random_nns(rng, 1 + t % 10, 5, 4);
    EXPECT_TRUE(is_nns(f));
    EXPECT_TRUE(is_submodular(f)) << f.to_string();
  }
}

TEST(PolyIo, ParseFormatRoundTrip) {
  auto f = parse_polynomial("# header\n 3/2 :  \n-1 : 2 1   # comment\n0.25 : 3\n\n");
  EXPECT_EQ(f.n_vars(), 3);
  EXPECT_EQ(f.constant(), Rational(3, 2));
  EXPECT_EQ(f.coeff(Support{1, 2}), -1);
  EXPECT_EQ(f.linear(3), Rational(1, 4));
  EXPECT_EQ(parse_polynomial(format_polynomial(f), 3), f);
}

TEST(PolyIo, Errors) {
  EXPECT_THROW(parse_polynomial("1 : 1\n2 : 1"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("1 : 1 2\n2 : 2 1"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("1 1 2"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("x : 1"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("1 : 0"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("1 : 1 1"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("1 : 4", 3), std::invalid_argument);
}

TEST(RationalIo, ParsesDecimalsAndFractions) {
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
  EXPECT_EQ(parse_rational("-1e-3"), Rational(-1, 1000));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(from_double(0.375), Rational(3, 8));
}
