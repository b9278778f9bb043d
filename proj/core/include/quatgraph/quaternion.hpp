// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quatgraph/laurent.hpp"
#include "quatgraph/poly.hpp"

namespace quatgraph {

struct RamificationSet {
  std::vector<Poly> primes;  // sorted in canonical order
  Poly r;                    // product of the primes
  int degree = 0;            // deg r
  bool odd = false;          // every prime has odd degree

  // Validates: even count >= 2, distinct, monic, irreducible.
  static RamificationSet make(const Field& f, std::vector<Poly> primes);
};

// Element of the maximal order in the basis f1 = 1, f2 = i, f3 = j,
// f4 = k = (eps i + i j) / alpha. Coordinates are polynomials in T.
struct QuatElem {
  std::array<Poly, 4> c;

  bool is_zero() const;
  bool operator==(const QuatElem& o) const = default;
  // Canonical order on coordinate tuples.
  bool operator<(const QuatElem& o) const;
};

int height(const QuatElem& x);

// Upper bound on deg(alpha) from the effective Chebotarev table, for l primes
// of total degree d.
int alpha_degree_bound(int q, int l, int d);

// First monic irreducible alpha of even degree that is a non-square modulo
// every prime of R.
Poly find_alpha(const RamificationSet& ram, bool check_degree_bound = true);

struct BuildOptions {
  bool check_degree_bound = true;
  // Use this alpha instead of searching; it must satisfy the same conditions.
  std::optional<Poly> alpha;
};

// The quaternion algebra (alpha, r) ramified exactly at R together with its
// maximal order and embedding into M_2(K_inf).
class AlgebraData {
 public:
  AlgebraData(const Field& f, RamificationSet ram, const BuildOptions& opts);

  const Field& field() const { return *f_; }
  const RamificationSet& ram() const { return ram_; }
  const Poly& alpha() const { return alpha_; }
  const Poly& epsilon() const { return eps_; }
  const Poly& nu() const { return nu_; }
  const Poly& r() const { return ram_.r; }
  int m() const { return m_; }
  // max(deg r, m)
  int d() const { return std::max(ram_.degree, m_); }

  QuatElem zero() const;
  QuatElem one() const { return scalar(f_->one()); }
  QuatElem scalar(Elem c) const;
  QuatElem from_poly(const Poly& p) const;
  QuatElem basis(int idx) const;

  QuatElem add(const QuatElem& x, const QuatElem& y) const;
  QuatElem sub(const QuatElem& x, const QuatElem& y) const;
  QuatElem scale(const QuatElem& x, Elem c) const;
  QuatElem mul(const QuatElem& x, const QuatElem& y) const;
  QuatElem conj(const QuatElem& x) const;
  Poly nrd(const QuatElem& x) const;
  Poly trd(const QuatElem& x) const;
  bool is_unit(const QuatElem& x) const;
  // Inverse of a unit; InvalidInput when nrd is not in F_q^*.
  QuatElem inverse(const QuatElem& x) const;
  QuatElem pow(const QuatElem& x, long long k) const;

  // Image in M_2(K_inf) with every entry known to absolute precision >= prec.
  Mat2 embed(const QuatElem& x, int prec) const;
  // sqrt(alpha) to absolute precision >= prec, from the shared memo.
  Laurent sqrt_alpha(int prec) const;
  // Images of the four basis elements, entries known to precision >= prec.
  std::array<Mat2, 4> basis_images(int prec) const;

  // Hilbert symbol (alpha, r) at w.
  int hilbert_at(const Poly& w) const;
  // Structure constants: product of basis elements a and b.
  const QuatElem& structure(int a, int b) const { return table_[a][b]; }

 private:
  const Field* f_;
  RamificationSet ram_;
  Poly alpha_, eps_, nu_;
  int m_ = 0;
  std::array<std::array<QuatElem, 4>, 4> table_;

  mutable std::mutex mu_;
  mutable std::optional<Laurent> sqrt_cache_;
  mutable std::map<int, std::array<Mat2, 4>> image_cache_;
};

std::shared_ptr<const AlgebraData> build_algebra(const FieldSpec& spec,
                                                 const std::vector<Poly>& primes,
                                                 const BuildOptions& opts = {});

}  // namespace quatgraph
