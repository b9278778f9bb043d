// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "quatgraph/tree.hpp"

#include <algorithm>
#include <cstdlib>

#include "quatgraph/errors.hpp"

namespace quatgraph {

Vertex::Vertex(int n, const Laurent& g) : n_(n), v_(n) {
  if (g.precision() < n) {
    throw InsufficientPrecision("vertex offset known only to pi^" +
                                std::to_string(g.precision()) + ", need pi^" +
                                std::to_string(n));
  }
  if (g.is_zero() || g.valuation() >= n) return;
  const int len = std::min<int>(g.coeffs().size(), n - g.valuation());
  *this = Vertex(n, g.valuation(),
                 std::vector<Elem>(g.coeffs().begin(), g.coeffs().begin() + len));
}

Vertex::Vertex(int n, int v, std::vector<Elem> coeffs)
    : n_(n), v_(v), c_(std::move(coeffs)) {
  if (v_ < n_ && static_cast<int>(c_.size()) > n_ - v_) c_.resize(n_ - v_);
  if (v_ >= n_) c_.clear();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  c_.erase(c_.begin(), c_.begin() + lead);
  v_ += static_cast<int>(lead);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) v_ = n_;
}

Laurent Vertex::g(const Field& f) const {
  if (c_.empty()) return Laurent(f);
  return Laurent(f, v_, c_);
}

Mat2 Vertex::matrix(const Field& f) const {
  return {Laurent::pi_power(f, n_), g(f), Laurent(f), Laurent::one(f)};
}

bool Vertex::operator<(const Vertex& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (v_ != o.v_) return v_ > o.v_;
  return c_ < o.c_;
}

std::size_t VertexHash::operator()(const Vertex& v) const {
  std::size_t h = std::hash<int>()(v.n()) * 0x9e3779b97f4a7c15ULL;
  h ^= static_cast<std::size_t>(v.g_valuation()) + 0x7f4a7c15 + (h << 6);
  for (Elem c : v.g_coeffs()) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

namespace {

// Decides whether the pivot x has valuation at most that of y, given that
// either may be zero at its precision.
bool pivot_ok(const Laurent& x, const Laurent& y) {
  if (x.is_zero()) return false;
  if (y.is_zero()) return y.precision() >= x.valuation();
  return x.valuation() <= y.valuation();
}

// g = num / den modulo pi^n.
Laurent quotient_mod(const Laurent& num, const Laurent& den, int n) {
  const Field& f = den.field();
  if (num.is_zero()) {
    return Laurent(f, num.precision() >= Laurent::kExact
                          ? Laurent::kExact
                          : num.precision() - den.valuation());
  }
  const int cap = n - num.valuation() + 1;
  return num * den.inverse(cap);
}

}  // namespace

Vertex vnf(const Mat2& m) {
  const Laurent* a = &m.a;
  const Laurent* b = &m.b;
  const Laurent* c = &m.c;
  const Laurent* d = &m.d;
  if (!pivot_ok(*d, *c)) {
    if (!pivot_ok(*c, *d)) {
      throw InsufficientPrecision("bottom row undetermined at this precision");
    }
    std::swap(a, b);
    std::swap(c, d);
  }
  const Laurent det = (*a) * (*d) - (*b) * (*c);
  if (det.is_zero()) {
    throw InsufficientPrecision("determinant is zero at precision " +
                                std::to_string(det.precision()));
  }
  const int n = det.valuation() - 2 * d->valuation();
  const Laurent g = quotient_mod(*b, *d, n);
  return Vertex(n, g);
}

int deg_n(const Laurent& g, int n) {
  if (g.is_zero() || g.valuation() >= n) return 0;
  return n - g.valuation();
}

int deg_n(const Vertex& v) {
  if (v.g_is_zero()) return 0;
  return v.n() - v.g_valuation();
}

std::vector<Vertex> neighbors(const Field& f, const Vertex& v) {
  std::vector<Vertex> out;
  out.reserve(f.q() + 1);
  // Up-neighbour: g modulo pi^(n-1).
  out.emplace_back(v.n() - 1, v.g_valuation(), v.g_coeffs());
  const int n = v.n();
  // Down-neighbours: g + c pi^n.
  std::vector<Elem> base;
  int lo = n;
  if (!v.g_is_zero()) {
    lo = v.g_valuation();
    base = v.g_coeffs();
  }
  base.resize(n - lo + 1, 0);
  for (int c = 0; c < f.q(); ++c) {
    base[n - lo] = static_cast<Elem>(c);
    out.emplace_back(n + 1, lo, base);
  }
  return out;
}

int distance_to_base(const Vertex& v) {
  const int delta = deg_n(v);
  return delta + std::abs(v.n() - delta);
}

std::vector<Vertex> geodesic_to_base(const Vertex& v) {
  std::vector<Vertex> path{v};
  Vertex cur = v;
  while (!cur.g_is_zero()) {
    cur = Vertex(cur.n() - 1, cur.g_valuation(), cur.g_coeffs());
    path.push_back(cur);
  }
  int n = cur.n();
  while (n != 0) {
    n += n > 0 ? -1 : 1;
    path.emplace_back(n);
  }
  return path;
}

std::vector<Vertex> geodesic(const Field& f, const Vertex& v, const Vertex& w) {
  (void)f;
  std::vector<Vertex> pv = geodesic_to_base(v);
  std::vector<Vertex> pw = geodesic_to_base(w);
  while (pv.size() >= 2 && pw.size() >= 2 &&
         pv[pv.size() - 2] == pw[pw.size() - 2]) {
    pv.pop_back();
    pw.pop_back();
  }
  // pv.back() == pw.back() is the meeting vertex.
  pw.pop_back();
  pv.insert(pv.end(), pw.rbegin(), pw.rend());
  return pv;
}

int distance(const Field& f, const Vertex& v, const Vertex& w) {
  // Translate by the inverse of v's matrix: w goes to
  // (n_w - n_v, (g_w - g_v) pi^(-n_v)) and v goes to the base vertex.
  const Laurent h = (w.g(f) - v.g(f)).shifted(-v.n());
  return distance_to_base(Vertex(w.n() - v.n(), h));
}

Vertex act(const Mat2& a, const Vertex& v) {
  return vnf(a * v.matrix(a.a.field()));
}

}  // namespace quatgraph
