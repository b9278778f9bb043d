// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "quatgraph/errors.hpp"
#include "quatgraph/homspace.hpp"
#include "quatgraph/text_format.hpp"
#include "support/oracles.hpp"

namespace quatgraph {
namespace {

using testing::P;

TEST(Rref, KernelVectorsAreSolutions) {
  const Field& f = Field::get_prime(7);
  std::mt19937 rng(12);
  for (int t = 0; t < 50; ++t) {
    const int r = 1 + rng() % 5, c = 1 + rng() % 7;
    FqMatrix m(r, c);
    for (Elem& x : m.data) x = rng() % 3 == 0 ? 0 : rng() % 7;
    FqMatrix copy = m;
    const std::vector<int> piv = rref(f, copy);
    const FqMatrix ker = kernel_basis(f, m);
    EXPECT_EQ(static_cast<int>(piv.size()) + ker.rows, c);
    for (int k = 0; k < ker.rows; ++k) {
      for (int i = 0; i < r; ++i) {
        Elem s = 0;
        for (int j = 0; j < c; ++j) s = f.add(s, f.mul(m.at(i, j), ker.at(k, j)));
        EXPECT_EQ(s, 0);
      }
      int lead = 0;
      while (ker.at(k, lead) == 0) ++lead;
      EXPECT_EQ(ker.at(k, lead), f.one());
    }
  }
}

TEST(Rref, IdentityHasTrivialKernel) {
  const Field& f = Field::get_prime(3);
  FqMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) m.at(i, i) = 2;
  EXPECT_EQ(kernel_basis(f, m).rows, 0);
  EXPECT_EQ(rref(f, m), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(m.at(1, 1), 1);
}

// Hom against exhaustive search over units of bounded height.
class HomOracle : public ::testing::TestWithParam<std::vector<std::vector<long long>>> {};

TEST_P(HomOracle, MatchesUnitSearch) {
  const Field& f = Field::get_prime(3);
  std::vector<Poly> primes;
  for (const auto& c : GetParam()) primes.push_back(P(f, c));
  const auto alg = build_algebra(f.spec(), primes);
  const std::vector<Vertex> ball = testing::ball(f, Vertex(0), 2);
  const int H = 2 + alg->m();
  const std::vector<QuatElem> units = testing::brute_units(*alg, H);

  std::map<std::pair<Vertex, Vertex>, std::set<QuatElem>> moved;
  const std::set<Vertex> in_ball(ball.begin(), ball.end());
  for (const QuatElem& u : units) {
    for (const Vertex& v : ball) {
      const Vertex w = act_quat(*alg, u, v);
      if (in_ball.count(w)) moved[{v, w}].insert(u);
    }
  }
  for (const Vertex& v : ball) {
    for (const Vertex& w : ball) {
      const HomSet h = hom(*alg, v, w);
      const std::vector<QuatElem> els = hom_elements(*alg, h);
      const std::set<QuatElem> got(els.begin(), els.end());
      EXPECT_EQ(got.size(), els.size());
      const auto it = moved.find({v, w});
      const std::set<QuatElem> want = it == moved.end() ? std::set<QuatElem>{} : it->second;
      EXPECT_EQ(got, want) << format_vertex(f, v) << " -> " << format_vertex(f, w);
      EXPECT_EQ(h.cardinality(3), static_cast<long long>(want.size()));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallAlgebras, HomOracle,
                         ::testing::Values(std::vector<std::vector<long long>>{{0, 1}, {1, 1}},
                                           std::vector<std::vector<long long>>{{0, 1}, {1, 0, 1}}));

TEST(Hom, EndomorphismsContainScalars) {
  const Field& f = Field::get_prime(5);
  const auto alg = build_algebra(f.spec(), {P(f, {0, 1}), P(f, {1, 1}), P(f, {2, 1}), P(f, {3, 1})});
  for (const Vertex& v : testing::ball(f, Vertex(0), 2)) {
    const EndResult e = end_and_classify(*alg, v);
    const std::vector<QuatElem> els = hom_elements(*alg, e.end);
    EXPECT_NE(std::find(els.begin(), els.end(), alg->one()), els.end());
    EXPECT_EQ(e.stability == Stability::kUnstable, e.end.dim() == 2);
  }
}

TEST(Hom, ParityMismatchIsEmpty) {
  const Field& f = Field::get_prime(3);
  const auto alg = build_algebra(f.spec(), {P(f, {0, 1}), P(f, {1, 1})});
  EXPECT_TRUE(hom(*alg, Vertex(0), Vertex(1)).empty());
  EXPECT_EQ(HomSet{}.cardinality(3), 0);
}

TEST(Action, MatchesMatrixAction) {
  const Field& f = Field::get_prime(3);
  const auto alg = build_algebra(f.spec(), {P(f, {0, 1}), P(f, {1, 0, 1})});
  for (const QuatElem& u : testing::brute_units(*alg, 1)) {
    for (const Vertex& v : testing::ball(f, Vertex(0), 2)) {
      EXPECT_EQ(act_quat(*alg, u, v), act(alg->embed(u, 60), v));
    }
  }
}

}  // namespace
}  // namespace quatgraph
