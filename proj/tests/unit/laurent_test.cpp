// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "quatgraph/errors.hpp"
#include "quatgraph/laurent.hpp"
#include "support/oracles.hpp"

namespace quatgraph {
namespace {

Laurent random_laurent(const Field& f, std::mt19937& rng, int prec) {
  const int val = static_cast<int>(rng() % 7) - 3;
  std::vector<Elem> c(1 + rng() % 6);
  for (Elem& x : c) x = rng() % f.q();
  c[0] = 1 + rng() % (f.q() - 1);
  return Laurent(f, val, c, prec);
}

TEST(Laurent, NormalFormOfZeroAndTruncation) {
  const Field& f = Field::get_prime(5);
  const Laurent z(f, 4);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.valuation(), 4);
  const Laurent x(f, -2, {1, 0, 3, 4}, 1);
  EXPECT_EQ(x.top(), 0);
  EXPECT_EQ(x.coeff(0), 3);
  EXPECT_THROW(x.coeff(1), InsufficientPrecision);
  EXPECT_EQ(x.truncated(0).top(), -2);
}

TEST(Laurent, RingLawsOnExactValues) {
  const Field& f = Field::get_prime(7);
  std::mt19937 rng(1);
  for (int t = 0; t < 100; ++t) {
    const Laurent a = random_laurent(f, rng, Laurent::kExact);
    const Laurent b = random_laurent(f, rng, Laurent::kExact);
    const Laurent c = random_laurent(f, rng, Laurent::kExact);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Laurent, ProductPrecision) {
  const Field& f = Field::get_prime(5);
  const Laurent a(f, 1, {1, 2}, 5);   // v=1, p=5
  const Laurent b(f, -2, {3}, 4);     // v=-2, p=4
  const Laurent ab = a * b;
  EXPECT_EQ(ab.precision(), std::min(5 - 2, 4 + 1));
  EXPECT_EQ(ab.valuation(), -1);
}

TEST(Laurent, InverseRoundTrip) {
  const Field& f = Field::get_prime(5);
  std::mt19937 rng(9);
  for (int t = 0; t < 60; ++t) {
    const Laurent a = random_laurent(f, rng, 20);
    const Laurent inv = a.inverse();
    const Laurent one = a * inv;
    EXPECT_TRUE(one.agrees_with(Laurent::one(f))) << a.to_string();
    EXPECT_EQ(one.precision(), 20 - a.valuation());
  }
  const Laurent exact(f, 0, {1, 1});
  EXPECT_TRUE((exact * exact.inverse(30)).agrees_with(Laurent::one(f)));
  EXPECT_TRUE(Laurent::pi_power(f, 3).inverse() == Laurent::pi_power(f, -3));
}

TEST(Laurent, PolyImage) {
  const Field& f = Field::get_prime(3);
  const Laurent x = poly_to_laurent(testing::P(f, {1, 0, 2}));  // 2T^2 + 1
  EXPECT_EQ(x.valuation(), -2);
  EXPECT_EQ(x.coeff(-2), 2);
  EXPECT_EQ(x.coeff(-1), 0);
  EXPECT_EQ(x.coeff(0), 1);
}

class NewtonSqrt : public ::testing::TestWithParam<int> {};

TEST_P(NewtonSqrt, SquareAgreesThroughRequestedDigits) {
  const int q = GetParam();
  const Field& f = Field::get_prime(q);
  std::mt19937 rng(q);
  for (int t = 0; t < 6; ++t) {
    const int deg = 2 * (1 + rng() % 3);
    std::vector<Elem> c(deg + 1);
    for (Elem& x : c) x = rng() % q;
    c[deg] = 1;
    const Poly a(f, c);
    for (int n : {1, 5, 40}) {
      const Laurent s = newton_sqrt(a, n);
      const Laurent diff = s * s - poly_to_laurent(a);
      EXPECT_GE(diff.precision(), n);
      EXPECT_TRUE(diff.is_zero() || diff.valuation() >= n) << a.to_string() << " n=" << n;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, NewtonSqrt, ::testing::Values(3, 5, 7, 11));

TEST(NewtonSqrtCost, GrowsPolynomially) {
  const Field& f = Field::get_prime(5);
  const Poly a = testing::P(f, {2, 0, 0, 0, 1});
  NewtonStats s1, s2;
  newton_sqrt(a, 50, &s1);
  newton_sqrt(a, 100, &s2);
  const double ratio = static_cast<double>(s2.field_ops) / static_cast<double>(s1.field_ops);
  // Cubic in the working length n + 2m with m = 2.
  const double cubic = std::pow(104.0 / 54.0, 3);
  EXPECT_GT(ratio, cubic / 4);
  EXPECT_LT(ratio, cubic * 4);
}

TEST(Mat2, InverseAndDeterminant) {
  const Field& f = Field::get_prime(5);
  std::mt19937 rng(4);
  for (int t = 0; t < 30; ++t) {
    Mat2 m{random_laurent(f, rng, Laurent::kExact), random_laurent(f, rng, Laurent::kExact),
           random_laurent(f, rng, Laurent::kExact), random_laurent(f, rng, Laurent::kExact)};
    if (m.det().is_zero()) continue;
    const Mat2 prod = m * m.inverse(40);
    EXPECT_TRUE(prod.a.agrees_with(Laurent::one(f)));
    EXPECT_TRUE(prod.b.agrees_with(Laurent(f)));
    EXPECT_TRUE(prod.c.agrees_with(Laurent(f)));
    EXPECT_TRUE(prod.d.agrees_with(Laurent::one(f)));
  }
}

}  // namespace
}  // namespace quatgraph
