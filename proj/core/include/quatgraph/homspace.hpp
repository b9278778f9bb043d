// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "quatgraph/quaternion.hpp"
#include "quatgraph/tree.hpp"

namespace quatgraph {

// Dense matrix over F_q, row-major.
struct FqMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Elem> data;

  FqMatrix() = default;
  FqMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  Elem& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  Elem at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(const Field& f, FqMatrix& m);
// Basis of {x : m x = 0} as the rows of a matrix in reduced row echelon form,
// so each basis vector has leading coefficient 1.
FqMatrix kernel_basis(const Field& f, FqMatrix m);

// Hom_Gamma(source, target) as an F_q-space minus zero.
struct HomSet {
  Vertex source;
  Vertex target;
  std::vector<QuatElem> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool empty() const { return basis.empty(); }
  long long cardinality(int q) const;
};

// Every nonzero F_q-combination of the basis, in canonical coefficient order.
std::vector<QuatElem> hom_elements(const AlgebraData& alg, const HomSet& h);

struct HomOptions {
  // Check every basis element with nrd and the vertex action.
  bool validate = true;
};

HomSet hom(const AlgebraData& alg, const Vertex& v, const Vertex& w,
           const HomOptions& opts = {});

enum class Stability { kStable, kUnstable };

struct EndResult {
  HomSet end;
  Stability stability;
};

EndResult end_and_classify(const AlgebraData& alg, const Vertex& v,
                           const HomOptions& opts = {});

// gamma * v with adaptive precision; InsufficientPrecision past prec_cap.
Vertex act_quat(const AlgebraData& alg, const QuatElem& gamma, const Vertex& v,
                int prec_cap = 1 << 14);

}  // namespace quatgraph
