// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "quatgraph/tree.hpp"
#include "support/oracles.hpp"

namespace quatgraph {
namespace {

Laurent random_series(const Field& f, std::mt19937& rng, int min_val) {
  std::vector<Elem> c(1 + rng() % 5);
  for (Elem& x : c) x = rng() % f.q();
  return Laurent(f, min_val + static_cast<int>(rng() % 3), c);
}

// Product of elementary matrices; entries in O_inf when integral is set.
Mat2 random_matrix(const Field& f, std::mt19937& rng, bool integral) {
  Mat2 m = Mat2::identity(f);
  const Laurent zero(f);
  const Laurent one = Laurent::one(f);
  for (int k = 0; k < 4; ++k) {
    const Laurent x = random_series(f, rng, integral ? 0 : -3);
    const Elem u = 1 + rng() % (f.q() - 1);
    switch (rng() % 3) {
      case 0: m = m * Mat2{one, x, zero, one}; break;
      case 1: m = m * Mat2{one, zero, x, one}; break;
      default: {
        const int s = integral ? 0 : static_cast<int>(rng() % 5) - 2;
        m = m * Mat2{Laurent::monomial(f, u, s), zero, zero, one};
      }
    }
  }
  return m;
}

std::vector<Vertex> sample_vertices(const Field& f) { return testing::ball(f, Vertex(0), 3); }

TEST(Vertex, CanonicalStorage) {
  const Field& f = Field::get_prime(5);
  const Vertex a(2, -1, {0, 3, 0, 4, 1});
  EXPECT_EQ(a.g_valuation(), 0);
  EXPECT_EQ(a.g_coeffs(), std::vector<Elem>{3});
  EXPECT_EQ(Vertex(3, 3, {1}), Vertex(3));
  EXPECT_EQ(Vertex(2, Laurent::monomial(f, 2, 5)), Vertex(2));
}

TEST(Tree, NormalFormIgnoresRightUnitsAndScalars) {
  const Field& f = Field::get_prime(3);
  std::mt19937 rng(7);
  for (const Vertex& v : sample_vertices(f)) {
    for (int t = 0; t < 3; ++t) {
      const Mat2 u = random_matrix(f, rng, true);
      const Mat2 m = v.matrix(f) * u;
      EXPECT_EQ(vnf(m), v);
      const int s = static_cast<int>(rng() % 5) - 2;
      EXPECT_EQ(vnf(m.shifted(s)), v);
    }
  }
}

TEST(Tree, NeighboursAreSymmetricAndDistinct) {
  for (int q : {3, 5}) {
    const Field& f = Field::get_prime(q);
    for (const Vertex& v : testing::ball(f, Vertex(0), 2)) {
      const std::vector<Vertex> nb = neighbors(f, v);
      ASSERT_EQ(static_cast<int>(nb.size()), q + 1);
      std::set<Vertex> uniq(nb.begin(), nb.end());
      EXPECT_EQ(uniq.size(), nb.size());
      for (const Vertex& u : nb) {
        const std::vector<Vertex> back = neighbors(f, u);
        EXPECT_NE(std::find(back.begin(), back.end(), v), back.end());
        EXPECT_EQ(distance(f, v, u), 1);
      }
    }
  }
}

TEST(Tree, DistanceMatchesBreadthFirstSearch) {
  const Field& f = Field::get_prime(3);
  const std::vector<Vertex> vs = testing::ball(f, Vertex(1), 3);
  std::mt19937 rng(1);
  for (int t = 0; t < 200; ++t) {
    const Vertex& a = vs[rng() % vs.size()];
    const Vertex& b = vs[rng() % vs.size()];
    EXPECT_EQ(distance(f, a, b), testing::bfs_distance(f, a, b, 6));
  }
  for (const Vertex& v : vs) {
    EXPECT_EQ(distance_to_base(v), testing::bfs_distance(f, v, Vertex(0), 8));
  }
}

TEST(Tree, GeodesicIsAPathOfMinimalLength) {
  const Field& f = Field::get_prime(5);
  const std::vector<Vertex> vs = testing::ball(f, Vertex(-1), 3);
  std::mt19937 rng(2);
  for (int t = 0; t < 100; ++t) {
    const Vertex& a = vs[rng() % vs.size()];
    const Vertex& b = vs[rng() % vs.size()];
    const std::vector<Vertex> path = geodesic(f, a, b);
    ASSERT_FALSE(path.empty());
    EXPECT_EQ(path.front(), a);
    EXPECT_EQ(path.back(), b);
    EXPECT_EQ(static_cast<int>(path.size()) - 1, distance(f, a, b));
    for (std::size_t i = 1; i < path.size(); ++i) EXPECT_EQ(distance(f, path[i - 1], path[i]), 1);
  }
  const std::vector<Vertex> up = geodesic_to_base(Vertex(3, 1, {2, 1}));
  EXPECT_EQ(up.back(), Vertex(0));
  EXPECT_EQ(static_cast<int>(up.size()) - 1, distance_to_base(Vertex(3, 1, {2, 1})));
}

TEST(Tree, ActionIsAnIsometry) {
  const Field& f = Field::get_prime(3);
  const std::vector<Vertex> vs = testing::ball(f, Vertex(0), 2);
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Mat2 g = random_matrix(f, rng, false);
    for (int k = 0; k < 10; ++k) {
      const Vertex& a = vs[rng() % vs.size()];
      const Vertex& b = vs[rng() % vs.size()];
      EXPECT_EQ(distance(f, act(g, a), act(g, b)), distance(f, a, b));
    }
  }
}

TEST(Tree, DegNCountsLeadingDigits) {
  const Field& f = Field::get_prime(5);
  EXPECT_EQ(deg_n(Vertex(3)), 0);
  EXPECT_EQ(deg_n(Vertex(3, 2, {1})), 1);
  EXPECT_EQ(deg_n(Laurent::monomial(f, 1, -2), 0), 2);
}

}  // namespace
}  // namespace quatgraph
