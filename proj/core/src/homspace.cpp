// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "quatgraph/homspace.hpp"

#include <algorithm>
#include <cstdlib>

#include "quatgraph/errors.hpp"

namespace quatgraph {

std::vector<int> rref(const Field& f, FqMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      std::swap_ranges(&m.at(sel, 0), &m.at(sel, 0) + m.cols, &m.at(row, 0));
    }
    const Elem inv = f.inv(m.at(row, col));
    Elem* pr = &m.at(row, 0);
    for (int c = col; c < m.cols; ++c) pr[c] = f.mul(pr[c], inv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      Elem* rr = &m.at(r, 0);
      const Elem factor = rr[col];
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (int c = col; c < m.cols; ++c) {
        if (pr[c] != 0) rr[c] = f.add(rr[c], f.mul(nf, pr[c]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

FqMatrix kernel_basis(const Field& f, FqMatrix m) {
  const std::vector<int> pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  FqMatrix k(static_cast<int>(free_cols.size()), m.cols);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const int fc = free_cols[i];
    k.at(static_cast<int>(i), fc) = f.one();
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      k.at(static_cast<int>(i), pivots[p]) = f.neg(m.at(static_cast<int>(p), fc));
    }
  }
  rref(f, k);
  return k;
}

long long HomSet::cardinality(int q) const {
  long long c = 1;
  for (int i = 0; i < dim(); ++i) c *= q;
  return c - 1;
}

std::vector<QuatElem> hom_elements(const AlgebraData& alg, const HomSet& h) {
  const Field& f = alg.field();
  std::vector<QuatElem> out;
  const int dim = h.dim();
  if (dim == 0) return out;
  std::vector<int> digits(dim, 0);
  for (;;) {
    int i = dim - 1;
    while (i >= 0 && ++digits[i] == f.q()) digits[i--] = 0;
    if (i < 0) break;
    QuatElem x = alg.zero();
    for (int k = 0; k < dim; ++k) {
      if (digits[k]) x = alg.add(x, alg.scale(h.basis[k], static_cast<Elem>(digits[k])));
    }
    out.push_back(std::move(x));
  }
  return out;
}

Vertex act_quat(const AlgebraData& alg, const QuatElem& gamma, const Vertex& v,
                int prec_cap) {
  int prec = 2 * (std::abs(v.n()) + height(gamma) + alg.d() + alg.m()) + 8;
  if (!v.g_is_zero()) prec += std::abs(v.g_valuation());
  for (;;) {
    try {
      return act(alg.embed(gamma, prec), v);
    } catch (const InsufficientPrecision&) {
      if (prec >= prec_cap) throw;
      prec = std::min(2 * prec, prec_cap);
    }
  }
}

namespace {

// pi^h * Minv_w * X * M_v for the four basis images X.
std::array<Mat2, 4> transported_images(const AlgebraData& alg, const Vertex& v,
                                       const Vertex& w, int h, int prec) {
  const Field& f = alg.field();
  const auto im = alg.basis_images(prec);
  const Mat2 mv = v.matrix(f);
  const Laurent pinw = Laurent::pi_power(f, -w.n());
  const Mat2 mw_inv{pinw, -(w.g(f) * pinw), Laurent(f), Laurent::one(f)};
  std::array<Mat2, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = (mw_inv * (im[i] * mv)).shifted(h);
  return out;
}

}  // namespace

HomSet hom(const AlgebraData& alg, const Vertex& v, const Vertex& w,
           const HomOptions& opts) {
  HomSet out{v, w, {}};
  if ((v.n() - w.n()) % 2 != 0) return out;
  const Field& f = alg.field();
  const int h = (w.n() - v.n()) / 2;
  const int n = std::max(distance_to_base(v), distance_to_base(w));
  const int H = n + alg.m();

  // Unknowns lambda_{i,k} (coefficient of T^k in coordinate i), k <= H.
  // lambda_{i,k} T^k contributes pi^(-k) Y_i, so the pi^x coefficient of the
  // combination is sum coeff_{x+k}(Y_i) lambda_{i,k}; it must vanish for x < 0.
  int prec = 2 * n + alg.d() + alg.m() + 1 + H;
  std::array<Mat2, 4> y;
  for (;;) {
    y = transported_images(alg, v, w, h, prec);
    int got = Laurent::kExact;
    for (const Mat2& m : y) got = std::min(got, m.precision());
    if (got >= H) break;
    prec += H - got;
  }

  const int ncols = 4 * (H + 1);
  std::vector<Elem> rows;
  int nrows = 0;
  for (int e = 0; e < 4; ++e) {
    auto entry = [&](int i) -> const Laurent& {
      const Mat2& m = y[i];
      return e == 0 ? m.a : e == 1 ? m.b : e == 2 ? m.c : m.d;
    };
    int lo = 0;
    for (int i = 0; i < 4; ++i) {
      if (!entry(i).is_zero()) lo = std::min(lo, entry(i).valuation());
    }
    for (int x = lo - H; x < 0; ++x) {
      std::vector<Elem> row(ncols, 0);
      bool any = false;
      for (int i = 0; i < 4; ++i) {
        const Laurent& l = entry(i);
        if (l.is_zero()) continue;
        for (int k = 0; k <= H; ++k) {
          const int ex = x + k;
          if (ex < l.valuation() || ex > l.top()) continue;
          const Elem c = l.coeff(ex);
          row[i * (H + 1) + k] = c;
          any = any || c != 0;
        }
      }
      if (any) {
        rows.insert(rows.end(), row.begin(), row.end());
        ++nrows;
      }
    }
  }
  FqMatrix sys(nrows, ncols);
  sys.data = std::move(rows);
  const FqMatrix ker = kernel_basis(f, std::move(sys));
  QG_CHECK(ker.rows <= 2, "Hom space of dimension " + std::to_string(ker.rows));

  for (int r = 0; r < ker.rows; ++r) {
    QuatElem g = alg.zero();
    for (int i = 0; i < 4; ++i) {
      std::vector<Elem> c(H + 1);
      for (int k = 0; k <= H; ++k) c[k] = ker.at(r, i * (H + 1) + k);
      g.c[i] = Poly(f, std::move(c));
    }
    out.basis.push_back(std::move(g));
  }

  if (opts.validate) {
    for (const QuatElem& g : out.basis) {
      QG_CHECK(alg.is_unit(g), "Hom solution with nrd not in F_q^*");
      QG_CHECK(height(g) <= H, "Hom solution above the height bound");
      QG_CHECK(act_quat(alg, g, v) == w, "Hom solution does not move v to w");
    }
    if (out.dim() == 2 && f.q() * f.q() <= 64) {
      for (const QuatElem& g : hom_elements(alg, out)) {
        QG_CHECK(alg.is_unit(g), "Hom combination with nrd not in F_q^*");
      }
    }
  }
  return out;
}

EndResult end_and_classify(const AlgebraData& alg, const Vertex& v,
                           const HomOptions& opts) {
  HomSet e = hom(alg, v, v, opts);
  if (e.dim() == 1) return {std::move(e), Stability::kStable};
  if (e.dim() == 2) return {std::move(e), Stability::kUnstable};
  throw InternalError("stabilizer of dimension " + std::to_string(e.dim()));
}

}  // namespace quatgraph
