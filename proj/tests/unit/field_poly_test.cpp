// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "quatgraph/errors.hpp"
#include "quatgraph/poly.hpp"
#include "support/oracles.hpp"

namespace quatgraph {
namespace {

using testing::brute_hilbert;
using testing::brute_irreducible;
using testing::brute_legendre;
using testing::P;

class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, RingLawsHoldExhaustively) {
  const Field& f = Field::get(FieldSpec::from_q(GetParam()));
  const int q = f.q();
  for (int a = 0; a < q; ++a) {
    EXPECT_EQ(f.add(a, 0), a);
    EXPECT_EQ(f.mul(a, f.one()), a);
    EXPECT_EQ(f.add(a, f.neg(a)), 0);
    if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
    for (int b = 0; b < q; ++b) {
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      if (q <= 9) {
        for (int c = 0; c < q; ++c) {
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        }
      }
    }
  }
}

TEST_P(FieldAxioms, PrimitiveElementAndSquareRoots) {
  const Field& f = Field::get(FieldSpec::from_q(GetParam()));
  const int q = f.q();
  EXPECT_EQ(f.multiplicative_order(f.primitive_element()), q - 1);
  for (Elem a = 1; a < f.primitive_element(); ++a) {
    EXPECT_LT(f.multiplicative_order(a), q - 1);
  }
  int squares = 0;
  for (Elem a = 0; a < q; ++a) {
    if (!f.is_square(a)) {
      EXPECT_THROW(f.sqrt(a), InvalidInput);
      continue;
    }
    ++squares;
    const Elem s = f.sqrt(a);
    EXPECT_EQ(f.mul(s, s), a);
    EXPECT_LE(s, f.neg(s));
  }
  EXPECT_EQ(squares, (q - 1) / 2 + 1);
  for (Elem a = 0; a < q; ++a) EXPECT_EQ(f.from_coords(f.coords(a)), a);
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms, ::testing::Values(3, 5, 7, 9, 11, 25, 27, 49));

TEST(Field, DefaultModuli) {
  EXPECT_EQ(FieldSpec::from_q(9).modulus, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(FieldSpec::from_q(25).modulus, (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(FieldSpec::from_q(27).modulus, (std::vector<int>{1, 2, 0, 1}));
  EXPECT_EQ(FieldSpec::from_q(49).modulus, (std::vector<int>{1, 0, 1}));
}

TEST(Field, RejectsBadSpecs) {
  EXPECT_THROW(FieldSpec::from_q(2), InvalidInput);
  EXPECT_THROW(FieldSpec::from_q(6), InvalidInput);
  EXPECT_THROW(FieldSpec::from_q(2048), InvalidInput);
  EXPECT_THROW(FieldSpec::from_q(9, {2, 0, 1}), InvalidInput);  // x^2+2 = (x-1)(x+1)
  EXPECT_THROW(FieldSpec::from_q(9, {1, 1}), InvalidInput);
}

TEST(Poly, DivmodInvariant) {
  const Field& f = Field::get_prime(7);
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<Elem> a(1 + rng() % 9), b(1 + rng() % 5);
    for (Elem& c : a) c = rng() % 7;
    for (Elem& c : b) c = rng() % 7;
    const Poly pa(f, a), pb(f, b);
    if (pb.is_zero()) {
      EXPECT_THROW(poly_divmod(pa, pb), InvalidInput);
      continue;
    }
    const DivMod d = poly_divmod(pa, pb);
    EXPECT_EQ(d.quotient * pb + d.remainder, pa);
    EXPECT_LT(d.remainder.degree(), pb.degree());
  }
}

TEST(Poly, ExtendedGcd) {
  const Field& f = Field::get_prime(5);
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    std::vector<Elem> a(1 + rng() % 7), b(1 + rng() % 7);
    for (Elem& c : a) c = rng() % 5;
    for (Elem& c : b) c = rng() % 5;
    const Poly pa(f, a), pb(f, b);
    Poly s, u;
    const Poly g = ext_gcd(pa, pb, &s, &u);
    EXPECT_EQ(s * pa + u * pb, g);
    if (!g.is_zero()) {
      EXPECT_TRUE(g.is_monic());
      EXPECT_TRUE((pa % g).is_zero());
      EXPECT_TRUE((pb % g).is_zero());
    }
  }
}

TEST(Poly, IrreducibilityMatchesTrialDivision) {
  for (int q : {3, 5}) {
    const Field& f = Field::get_prime(q);
    for (int d = 1; d <= 4; ++d) {
      for_each_monic(f, d, [&](const Poly& p) {
        EXPECT_EQ(is_irreducible(p), brute_irreducible(p)) << p.to_string();
        return true;
      });
    }
  }
}

TEST(Poly, IrreducibleCountsMatchGaussFormula) {
  // (1/n) sum_{d | n} mu(d) q^(n/d)
  const Field& f3 = Field::get_prime(3);
  EXPECT_EQ(enumerate_monic_irreducibles(f3, 1).size(), 3u);
  EXPECT_EQ(enumerate_monic_irreducibles(f3, 2).size(), 3u);
  EXPECT_EQ(enumerate_monic_irreducibles(f3, 3).size(), 8u);
  EXPECT_EQ(enumerate_monic_irreducibles(f3, 4).size(), 18u);
  const Field& f7 = Field::get_prime(7);
  EXPECT_EQ(enumerate_monic_irreducibles(f7, 2).size(), 21u);
  const Field& f9 = Field::get(FieldSpec::from_q(9));
  EXPECT_EQ(enumerate_monic_irreducibles(f9, 2).size(), 36u);
}

TEST(Poly, MonicEnumerationIsCanonicallyOrdered) {
  const Field& f = Field::get_prime(3);
  std::vector<Poly> seen;
  for_each_monic(f, 2, [&](const Poly& p) {
    seen.push_back(p);
    return true;
  });
  ASSERT_EQ(seen.size(), 9u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(seen.front(), P(f, {0, 0, 1}));
}

TEST(Poly, LegendreMatchesSquareSearch) {
  for (int q : {3, 5, 7}) {
    const Field& f = Field::get_prime(q);
    for (int dw = 1; dw <= 2; ++dw) {
      for (const Poly& w : enumerate_monic_irreducibles(f, dw)) {
        for (const Poly& a : testing::all_below(f, 3)) {
          if (a.is_zero()) continue;
          EXPECT_EQ(legendre(a, w), brute_legendre(a, w)) << a.to_string() << " mod " << w.to_string();
        }
      }
    }
  }
}

TEST(Poly, HilbertSymbolMatchesIsotropySearch) {
  std::mt19937 rng(11);
  for (int q : {3, 5}) {
    const Field& f = Field::get_prime(q);
    for (const Poly& w : enumerate_monic_irreducibles(f, 1)) {
      for (int t = 0; t < 12; ++t) {
        std::vector<Elem> a(1 + rng() % 4), b(1 + rng() % 4);
        for (Elem& c : a) c = rng() % q;
        for (Elem& c : b) c = rng() % q;
        Poly pa(f, a), pb(f, b);
        if (pa.is_zero() || pb.is_zero()) continue;
        if (t % 3 == 0) pa = pa * w;
        if (t % 4 == 0) pb = pb * w;
        EXPECT_EQ(hilbert_symbol(pa, pb, w), brute_hilbert(pa, pb, w))
            << "(" << pa.to_string() << ", " << pb.to_string() << ") at " << w.to_string();
      }
    }
  }
}

TEST(Poly, HilbertSymbolAtQuadraticPlace) {
  const Field& f = Field::get_prime(3);
  const Poly w = P(f, {1, 0, 1});
  const Poly T = Poly::T(f);
  const std::vector<std::pair<Poly, Poly>> cases = {
      {T, w}, {T + P(f, {1}), w}, {T, T + P(f, {2})}, {w * T, w * P(f, {2})}};
  for (const auto& [a, b] : cases) {
    EXPECT_EQ(hilbert_symbol(a, b, w), brute_hilbert(a, b, w));
  }
}

TEST(Poly, CrtReconstructs) {
  const Field& f = Field::get_prime(5);
  const std::vector<Poly> mods = {P(f, {0, 1}), P(f, {1, 1}), P(f, {2, 0, 1})};
  std::mt19937 rng(2);
  for (int t = 0; t < 50; ++t) {
    std::vector<Poly> res;
    for (const Poly& m : mods) {
      std::vector<Elem> c(m.degree());
      for (Elem& x : c) x = rng() % 5;
      res.emplace_back(f, c);
    }
    const Poly x = crt(res, mods);
    EXPECT_LT(x.degree(), 4);
    for (std::size_t i = 0; i < mods.size(); ++i) EXPECT_EQ(x % mods[i], res[i]);
  }
}

TEST(Poly, SqrtModIrreduciblePicksSmallerRoot) {
  const Field& f = Field::get_prime(5);
  const Poly w = P(f, {2, 0, 1});
  for (const Poly& a : testing::all_below(f, 2)) {
    if (a.is_zero() || legendre(a, w) != 1) continue;
    const ResidueElem s = sqrt_mod_irreducible(a, w);
    EXPECT_EQ(s.rep * s.rep % w, a % w);
    const Poly other = (-s.rep) % w;
    EXPECT_TRUE(s.rep <= other);
  }
  EXPECT_THROW(sqrt_mod_irreducible(P(f, {2}), P(f, {0, 1})), InvalidInput);
}

TEST(Poly, EpsilonSquaresToR) {
  // eps^2 = r mod alpha for the structure constants of the worked example.
  const Field& f = Field::get_prime(5);
  const Poly r = P(f, {0, 1}) * P(f, {1, 1}) * P(f, {2, 1}) * P(f, {3, 1});
  const Poly alpha = P(f, {2, 0, 0, 0, 1});
  const ResidueElem e = sqrt_mod_irreducible(r, alpha);
  EXPECT_TRUE(((e.rep * e.rep - r) % alpha).is_zero());
}

TEST(Poly, CanonicalOrderAndText) {
  const Field& f = Field::get_prime(5);
  EXPECT_TRUE(P(f, {4}) < P(f, {0, 1}));
  EXPECT_TRUE(P(f, {0, 1}) < P(f, {1, 1}));
  EXPECT_EQ(P(f, {3, 2, 1}).to_string(), "T^2+2*T+3");
  EXPECT_EQ(Poly(f).to_string(), "0");
}

TEST(Poly, ValuationAt) {
  const Field& f = Field::get_prime(3);
  const Poly w = P(f, {1, 1});
  Poly unit;
  EXPECT_EQ(valuation_at(w * w * P(f, {0, 1}), w, &unit), 2);
  EXPECT_EQ(unit, P(f, {0, 1}));
}

}  // namespace
}  // namespace quatgraph
