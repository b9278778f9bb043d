// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quatgraph/laurent.hpp"

namespace quatgraph {

// Vertex of the Bruhat-Tits tree in normal form: the class of the lattice
// spanned by the columns of [[pi^n, g], [0, 1]], g taken modulo pi^n.
// g is stored as coefficients of pi^v ... pi^(n-1); g = 0 stores nothing and
// uses v = n.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(int n) : n_(n), v_(n) {}
  // g must be known modulo pi^n; it is truncated there.
  Vertex(int n, const Laurent& g);
  // Raw form: coefficients of pi^v, pi^(v+1), ...; canonicalized.
  Vertex(int n, int v, std::vector<Elem> coeffs);

  int n() const { return n_; }
  int g_valuation() const { return v_; }
  const std::vector<Elem>& g_coeffs() const { return c_; }
  bool g_is_zero() const { return c_.empty(); }
  Laurent g(const Field& f) const;
  Mat2 matrix(const Field& f) const;

  bool operator==(const Vertex& o) const = default;
  // Any fixed total order; used for sorted containers.
  bool operator<(const Vertex& o) const;

 private:
  int n_ = 0;
  int v_ = 0;
  std::vector<Elem> c_;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const;
};

struct Edge {
  Vertex origin;
  Vertex target;
  int index = 0;
  bool operator==(const Edge&) const = default;
};

// Normal form of the lattice class spanned by the columns of A.
Vertex vnf(const Mat2& a);
// Smallest i >= 0 with g in pi^(n-i) O_inf.
int deg_n(const Laurent& g, int n);
int deg_n(const Vertex& v);
// Up-neighbour first, then (n+1, g + c pi^n) for c in canonical F_q order.
std::vector<Vertex> neighbors(const Field& f, const Vertex& v);
std::vector<Vertex> geodesic_to_base(const Vertex& v);
std::vector<Vertex> geodesic(const Field& f, const Vertex& v, const Vertex& w);
int distance(const Field& f, const Vertex& v, const Vertex& w);
int distance_to_base(const Vertex& v);
Vertex act(const Mat2& a, const Vertex& v);

}  // namespace quatgraph
