// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "quatgraph/errors.hpp"
#include "quatgraph/graph_io.hpp"
#include "quatgraph/text_format.hpp"
#include "support/oracles.hpp"

namespace quatgraph {
namespace {

using testing::P;

TEST(Text, ElementsOfPrimeAndExtensionFields) {
  const Field& f5 = Field::get_prime(5);
  for (Elem a = 0; a < 5; ++a) EXPECT_EQ(parse_elem(f5, format_elem(f5, a)), a);
  const Field& f9 = Field::get(FieldSpec::from_q(9));
  for (Elem a = 0; a < 9; ++a) EXPECT_EQ(parse_elem(f9, format_elem(f9, a)), a);
  EXPECT_THROW(parse_elem(f5, "x"), InvalidInput);
}

TEST(Text, PolynomialRoundTrip) {
  for (int q : {3, 7, 9}) {
    const Field& f = Field::get(FieldSpec::from_q(q));
    std::mt19937 rng(q);
    for (int t = 0; t < 50; ++t) {
      std::vector<Elem> c(1 + rng() % 6);
      for (Elem& x : c) x = rng() % q;
      const Poly p(f, c);
      EXPECT_EQ(parse_poly(f, format_poly(p)), p) << format_poly(p);
    }
  }
}

TEST(Text, PolynomialSyntax) {
  const Field& f = Field::get_prime(5);
  EXPECT_EQ(parse_poly(f, "T^2 + 2T + 3"), P(f, {3, 2, 1}));
  EXPECT_EQ(parse_poly(f, "(T+1)(T+2)"), P(f, {2, 3, 1}));
  EXPECT_EQ(parse_poly(f, "-T"), P(f, {0, 4}));
  EXPECT_EQ(parse_poly_list(f, "T, T+1,(T+2)*(T+3)").size(), 3u);
  EXPECT_THROW(parse_poly(f, "T^"), InvalidInput);
  EXPECT_THROW(parse_poly(f, "T+"), InvalidInput);
  EXPECT_THROW(parse_poly(f, "(T"), InvalidInput);
}

TEST(Text, VertexRoundTrip) {
  const Field& f = Field::get_prime(3);
  for (const Vertex& v : testing::ball(f, Vertex(-1), 3)) {
    EXPECT_EQ(parse_vertex(f, format_vertex(f, v)), v) << format_vertex(f, v);
  }
  EXPECT_EQ(parse_vertex(f, "(4; 0)"), Vertex(4));
  EXPECT_EQ(parse_vertex(f, "(2; pi^-1 + 2*pi)"), Vertex(2, -1, {1, 0, 2}));
  EXPECT_THROW(parse_vertex(f, "(2, 0)"), InvalidInput);
  EXPECT_THROW(parse_vertex(f, "2; 0"), InvalidInput);
}

TEST(Text, QuaternionRoundTrip) {
  const Field& f = Field::get_prime(5);
  const auto alg = build_algebra(f.spec(), {P(f, {0, 1}), P(f, {1, 1}), P(f, {2, 1}), P(f, {3, 1})});
  std::mt19937 rng(4);
  for (int t = 0; t < 50; ++t) {
    QuatElem x = alg->zero();
    for (Poly& c : x.c) {
      std::vector<Elem> v(rng() % 4);
      for (Elem& e : v) e = rng() % 5;
      c = Poly(f, v);
    }
    EXPECT_EQ(parse_quat(*alg, format_quat(x)), x) << format_quat(x);
  }
  EXPECT_EQ(parse_quat(*alg, "1"), alg->one());
  EXPECT_EQ(parse_quat(*alg, "(T+1)*j"), alg->mul(alg->from_poly(P(f, {1, 1})), alg->basis(2)));
  EXPECT_THROW(parse_quat(*alg, "1 + q"), InvalidInput);
}

class GraphIo : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    const Field& f = Field::get_prime(5);
    graph_ = new QuotientGraph(compute_quotient(
        build_algebra(f.spec(), {P(f, {0, 1}), P(f, {1, 1}), P(f, {2, 1}), P(f, {3, 1})})));
  }
  static void TearDownTestSuite() { delete graph_; }
  static QuotientGraph* graph_;
};

QuotientGraph* GraphIo::graph_ = nullptr;

TEST_F(GraphIo, JsonRoundTripIsExact) {
  const std::string a = graph_to_json(*graph_);
  const QuotientGraph back = graph_from_json(a);
  EXPECT_EQ(graph_to_json(back), a);
  ASSERT_EQ(back.vertices.size(), graph_->vertices.size());
  for (std::size_t i = 0; i < back.vertices.size(); ++i) {
    EXPECT_EQ(back.vertices[i].nf, graph_->vertices[i].nf);
  }
  EXPECT_TRUE(verify_structure(back).passed());
}

TEST_F(GraphIo, RejectsDamagedJson) {
  EXPECT_THROW(graph_from_json("{"), InvalidInput);
  EXPECT_THROW(graph_from_json("[]"), InvalidInput);
  std::string text = graph_to_json(*graph_);
  const std::string key = "\"format_version\": 1";
  const auto pos = text.find(key);
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, key.size(), "\"format_version\": 99");
  EXPECT_THROW(graph_from_json(text), InvalidInput);
}

TEST_F(GraphIo, DotAndSummary) {
  const std::string dot = graph_to_dot(*graph_);
  EXPECT_EQ(dot.rfind("graph quotient {", 0), 0u);
  EXPECT_NE(dot.find("--"), std::string::npos);
  const StructureReport rep = verify_structure(*graph_);
  const std::string s = graph_summary(*graph_, &rep);
  EXPECT_NE(s.find("12"), std::string::npos);
}

}  // namespace
}  // namespace quatgraph
