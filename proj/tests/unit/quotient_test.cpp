// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "quatgraph/errors.hpp"
#include "quatgraph/graph_io.hpp"
#include "quatgraph/quotient.hpp"
#include "support/oracles.hpp"

namespace quatgraph {
namespace {

using testing::P;

std::vector<Poly> example_primes() {
  const Field& f = Field::get_prime(5);
  return {P(f, {0, 1}), P(f, {1, 1}), P(f, {2, 1}), P(f, {3, 1})};
}

// Shared across tests; computing the example takes a few milliseconds.
const QuotientGraph& example_graph() {
  static const QuotientGraph g =
      compute_quotient(build_algebra(Field::get_prime(5).spec(), example_primes()));
  return g;
}

QuotientGraph small_graph(std::vector<std::vector<long long>> primes) {
  const Field& f = Field::get_prime(3);
  std::vector<Poly> ps;
  for (const auto& c : primes) ps.push_back(P(f, c));
  return compute_quotient(build_algebra(f.spec(), ps));
}

TEST(Quotient, ExampleInvariants) {
  const QuotientGraph& g = example_graph();
  const StructureReport rep = verify_structure(g);
  for (const Check& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_EQ(rep.num_vertices, 12);
  EXPECT_EQ(rep.v1, 8);
  EXPECT_EQ(rep.v_q1, 4);
  EXPECT_EQ(rep.h1, 5);
  EXPECT_EQ(rep.genus, 5);
  EXPECT_EQ(rep.paired, 5);
  EXPECT_EQ(rep.expected_v1, 8);
  EXPECT_EQ(rep.expected_v_q1, 4);
  EXPECT_FALSE(g.two_vertex_case);
  for (int id = 0; id < static_cast<int>(g.vertices.size()); ++id) {
    const int deg = g.degree(id);
    EXPECT_EQ(deg, g.vertices[id].stability == Stability::kUnstable ? 1 : 6);
  }
  const Presentation p = presentation(g);
  EXPECT_EQ(p.generators.size(), 14u);
  EXPECT_EQ(p.num_vertex_generators, 8);
  EXPECT_EQ(p.num_edge_generators, 5);
}

TEST(Quotient, NoTwoVerticesAreEquivalent) {
  const QuotientGraph& g = example_graph();
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
      EXPECT_TRUE(hom(*g.alg, g.vertices[a].nf, g.vertices[b].nf).empty());
    }
  }
}

TEST(Quotient, TwoVertexCase) {
  const QuotientGraph g = small_graph({{0, 1}, {1, 1}});
  EXPECT_TRUE(g.two_vertex_case);
  ASSERT_EQ(g.vertices.size(), 2u);
  EXPECT_EQ(g.vertices[g.initial].nf, Vertex(1));
  EXPECT_EQ(g.edges.size(), 2u);
  const StructureReport rep = verify_structure(g);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.genus, 0);
}

TEST(Quotient, MixedDegrees) {
  const QuotientGraph g = small_graph({{0, 1}, {1, 0, 1}});
  const StructureReport rep = verify_structure(g);
  for (const Check& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_FALSE(rep.odd);
}

TEST(Quotient, DeterministicAcrossRunsAndThreads) {
  const auto alg = build_algebra(Field::get_prime(5).spec(), example_primes());
  const std::string a = graph_to_json(compute_quotient(alg));
  const std::string b = graph_to_json(compute_quotient(alg));
  QuotientOptions o;
  o.threads = 3;
  const std::string c = graph_to_json(compute_quotient(alg, o));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Quotient, EdgeLabelsAreConsistent) {
  const QuotientGraph& g = example_graph();
  const AlgebraData& alg = *g.alg;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const QuotientEdge& e = g.edges[i];
    if (e.kind == EdgeKind::kTree) {
      EXPECT_EQ(e.tree_edge.origin, g.vertices[e.src].nf);
      EXPECT_EQ(e.tree_edge.target, g.vertices[e.dst].nf);
    } else if (e.kind == EdgeKind::kPairing) {
      ASSERT_TRUE(alg.is_unit(e.pairing));
      EXPECT_EQ(act_quat(alg, e.pairing, e.tree_edge.target), g.vertices[e.dst].nf);
      EXPECT_EQ(act_quat(alg, e.pairing, e.tree_edge.origin), e.image);
      ASSERT_LT(i + 1, g.edges.size());
      EXPECT_EQ(g.edges[i + 1].kind, EdgeKind::kOpposite);
      EXPECT_EQ(g.edges[i + 1].src, e.dst);
      EXPECT_EQ(g.edges[i + 1].dst, e.src);
    }
  }
}

TEST(Reduction, EveryNearbyVertexReduces) {
  const QuotientGraph& g = example_graph();
  const Field& f = g.alg->field();
  const Presentation p = presentation(g);
  for (const Vertex& v : testing::ball(f, Vertex(0), 3)) {
    const ReductionResult r = reduce(g, p, v);
    ASSERT_GE(r.w_id, 0);
    EXPECT_EQ(g.vertices[r.w_id].nf, r.w);
    EXPECT_EQ(act_quat(*g.alg, r.gamma, r.w), v);
    EXPECT_EQ(evaluate_word(*g.alg, p, r.word), r.gamma);
  }
}

TEST(Reduction, VerticesOfTheGraphAreFixed) {
  const QuotientGraph& g = example_graph();
  for (std::size_t id = 0; id < g.vertices.size(); ++id) {
    const ReductionResult r = reduce(g, g.vertices[id].nf);
    EXPECT_EQ(r.w_id, static_cast<int>(id));
  }
}

TEST(Reduction, ExpressRoundTrip) {
  const QuotientGraph& g = example_graph();
  const AlgebraData& alg = *g.alg;
  const Presentation p = presentation(g);
  EXPECT_EQ(evaluate_word(alg, p, express_in_generators(g, p, alg.one())), alg.one());
  EXPECT_EQ(evaluate_word(alg, p, {}), alg.one());
  std::mt19937 rng(21);
  for (int t = 0; t < 30; ++t) {
    QuatElem x = alg.one();
    for (int k = 0; k < 5; ++k) {
      const QuatElem& gen = p.generators[rng() % p.generators.size()];
      x = alg.mul(x, rng() % 2 ? gen : alg.inverse(gen));
    }
    const Word w = express_in_generators(g, p, x);
    EXPECT_EQ(evaluate_word(alg, p, w), x);
  }
  QuatElem t = alg.from_poly(P(alg.field(), {0, 1}));
  EXPECT_THROW(express_in_generators(g, p, t), InvalidInput);
}

TEST(Presentation, RelationsAreListed) {
  const Presentation p = presentation(example_graph());
  ASSERT_FALSE(p.relations.empty());
  EXPECT_EQ(p.relations.front(), "g0^4 = 1");
  EXPECT_EQ(p.names.front(), "g0");
  EXPECT_EQ(p.vertex_of.size(), p.generators.size());
}

}  // namespace
}  // namespace quatgraph
