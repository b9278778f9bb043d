// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "quatgraph/homspace.hpp"
#include "quatgraph/quaternion.hpp"
#include "quatgraph/tree.hpp"

namespace quatgraph {

struct QuotientVertex {
  Vertex nf;
  Stability stability = Stability::kStable;
  // F_q-basis of End(nf) together with zero; one scalar for stable vertices.
  std::vector<QuatElem> end_basis;
  // Generator of the cyclic stabilizer of an unstable vertex.
  QuatElem stabilizer_generator;
  int parent = -1;  // spanning-tree parent, -1 for the initial vertex
  int level = 0;    // spanning-tree distance from the initial vertex
};

enum class EdgeKind {
  kTree,      // label (e, 1)
  kPairing,   // label (e, g_e): g_e maps t(e) into the spanning tree
  kOpposite,  // label (e, -1): the reverse of a pairing edge
};

struct QuotientEdge {
  int src = 0;
  int dst = 0;
  int index = 0;  // slot among parallel edges src -> dst
  EdgeKind kind = EdgeKind::kTree;
  // For tree edges the realized edge itself; for pairing and opposite edges
  // the tree edge e = (o(e), t(e)) with o(e) the source of the pairing edge.
  Edge tree_edge;
  QuatElem pairing;  // g_e, set on pairing and opposite edges
  Vertex image;      // g_e o(e), a tree neighbour of g_e t(e)
};

struct QuotientOptions {
  // Worker threads for the stabilizer computations of one BFS level.
  int threads = 1;
  HomOptions hom;
};

class QuotientGraph {
 public:
  std::shared_ptr<const AlgebraData> alg;
  std::vector<QuotientVertex> vertices;
  std::vector<QuotientEdge> edges;
  int initial = 0;
  int levels = 0;
  // Both L(0,0) and L(1,0) are unstable: the graph is a single edge.
  bool two_vertex_case = false;
  QuatElem g0;  // scalar generator of F_q^*
  // Precision cap for the group action in reduction and verification.
  int prec_cap = 1 << 14;

  // Vertex id, or -1.
  int find(const Vertex& v) const;
  int degree(int id) const;
  int add_vertex(QuotientVertex v);
  void add_edge(QuotientEdge e);
  std::vector<int> terminal_vertices() const;
  std::vector<int> pairing_edges() const;
  // Edge multiplicity n_{v,w} of directed edges v -> w.
  int multiplicity(int v, int w) const;

 private:
  std::unordered_map<Vertex, int, VertexHash> index_;
};

QuotientGraph compute_quotient(std::shared_ptr<const AlgebraData> alg,
                               const QuotientOptions& opts = {});

// One letter gen^exp of a word in the presentation generators.
struct Letter {
  int gen = 0;
  long long exp = 1;
  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

struct Presentation {
  // Generator 0 is g0; then g_v for terminal vertices in id order; then g_e
  // for pairing edges in edge order.
  std::vector<std::string> names;
  std::vector<QuatElem> generators;
  std::vector<int> vertex_of;  // vertex id of g_v, else -1
  std::vector<int> edge_of;    // edge id of g_e, else -1
  std::vector<std::string> relations;
  int num_vertex_generators = 0;
  int num_edge_generators = 0;
};

// Builds the presentation and verifies every relation by exact arithmetic;
// InternalError if a relation fails.
Presentation presentation(const QuotientGraph& g);

QuatElem evaluate_word(const AlgebraData& alg, const Presentation& p,
                       const Word& w);

struct ReductionResult {
  Vertex w;
  int w_id = -1;
  QuatElem gamma;  // v' = gamma w
  Word word;       // gamma as a word in the presentation generators
  int steps = 0;
};

ReductionResult reduce(const QuotientGraph& g, const Presentation& p,
                       const Vertex& v);
ReductionResult reduce(const QuotientGraph& g, const Vertex& v);

// A word equal to gamma exactly; InvalidInput if nrd(gamma) is not in F_q^*.
Word express_in_generators(const QuotientGraph& g, const Presentation& p,
                           const QuatElem& gamma);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct StructureReport {
  long long v1 = 0;
  long long v_q1 = 0;
  long long num_vertices = 0;
  long long num_edges = 0;  // directed edges
  long long h1 = 0;
  long long paired = 0;
  long long genus = 0;  // g(R)
  bool odd = false;
  long long expected_v1 = 0;
  long long expected_v_q1 = 0;
  int diameter = 0;
  double diameter_bound = 0;
  int improved_diameter_bound = 0;
  long long two_cycles = 0;           // sum over vertex pairs of C(n, 2)
  long long ordered_two_cycles = 0;   // sum over vertex pairs of n (n - 1)
  int max_label_height = 0;
  int global_height_bound = 0;
  std::vector<Check> checks;

  bool passed() const;
};

struct VerifyOptions {
  bool check_presentation = true;
};

StructureReport verify_structure(const QuotientGraph& g,
                                 const VerifyOptions& opts = {});

}  // namespace quatgraph
