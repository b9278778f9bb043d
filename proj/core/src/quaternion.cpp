// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "quatgraph/quaternion.hpp"

#include <algorithm>
#include <set>

#include "quatgraph/errors.hpp"

namespace quatgraph {

RamificationSet RamificationSet::make(const Field& f, std::vector<Poly> primes) {
  if (primes.size() % 2 != 0 || primes.empty()) {
    throw InvalidInput("ramification set must have even cardinality");
  }
  for (Poly& p : primes) {
    if (p.field_ptr() != &f) throw InvalidInput("prime over the wrong field");
    if (!p.is_monic()) throw InvalidInput("prime " + p.to_string() + " is not monic");
    if (!is_irreducible(p)) {
      throw InvalidInput("prime " + p.to_string() + " is not irreducible");
    }
  }
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 1; i < primes.size(); ++i) {
    if (primes[i] == primes[i - 1]) {
      throw InvalidInput("repeated prime " + primes[i].to_string());
    }
  }
  RamificationSet s;
  s.r = Poly::constant(f, f.one());
  s.odd = true;
  for (const Poly& p : primes) {
    s.r = s.r * p;
    if (p.degree() % 2 == 0) s.odd = false;
  }
  s.degree = s.r.degree();
  s.primes = std::move(primes);
  return s;
}

bool QuatElem::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Poly& p) { return p.is_zero(); });
}

bool QuatElem::operator<(const QuatElem& o) const {
  for (int i = 0; i < 4; ++i) {
    const auto cmp = c[i] <=> o.c[i];
    if (cmp != 0) return cmp < 0;
  }
  return false;
}

int height(const QuatElem& x) {
  if (x.is_zero()) throw InvalidInput("height of the zero element");
  int h = 0;
  for (const Poly& p : x.c) h = std::max(h, p.degree());
  return h;
}

int alpha_degree_bound(int q, int l, int d) {
  if (q == 3) return l <= 4 ? d + 7 : (l == 6 ? d + 5 : d + 1);
  if (q == 5 || q == 7) return l <= 6 ? d + 3 : d + 1;
  if (q == 9) return l <= 4 ? d + 3 : d + 1;
  return l == 2 ? d + 3 : d + 1;
}

Poly find_alpha(const RamificationSet& ram, bool check_degree_bound) {
  const Field& f = ram.r.field();
  const int l = static_cast<int>(ram.primes.size());
  const int bound = alpha_degree_bound(f.q(), l, ram.degree);
  const int limit = check_degree_bound ? bound : std::max(bound, 64);
  for (int deg = 2; deg <= limit; deg += 2) {
    std::optional<Poly> found;
    for_each_monic_irreducible(f, deg, [&](const Poly& a) {
      for (const Poly& w : ram.primes) {
        if (legendre(a, w) != -1) return true;
      }
      found = a;
      return false;
    });
    if (found) return *found;
  }
  throw InternalError("no alpha of degree <= " + std::to_string(limit) +
                      " found; the degree-bound table rules this out");
}

namespace {

// Product in the standard basis (1, i, j, ij) with i^2 = a, j^2 = b.
std::array<Poly, 4> std_mul(const std::array<Poly, 4>& x,
                            const std::array<Poly, 4>& y, const Poly& a,
                            const Poly& b) {
  const Poly ab = a * b;
  return {x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - ab * x[3] * y[3],
          x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2],
          x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1],
          x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]};
}

Poly det4(std::array<std::array<Poly, 4>, 4> m) {
  const Field& f = m[0][0].field();
  Poly total(f);
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
    }
    Poly term = Poly::constant(f, f.one());
    for (int i = 0; i < 4; ++i) term = term * m[i][perm[i]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

AlgebraData::AlgebraData(const Field& f, RamificationSet ram,
                         const BuildOptions& opts)
    : f_(&f), ram_(std::move(ram)) {
  if (opts.alpha) {
    alpha_ = Poly(f, opts.alpha->coeffs());
    if (!alpha_.is_monic() || alpha_.degree() % 2 != 0 || !is_irreducible(alpha_)) {
      throw InvalidInput("alpha must be monic irreducible of even degree");
    }
    for (const Poly& w : ram_.primes) {
      if (legendre(alpha_, w) != -1) {
        throw InvalidInput("alpha is a square modulo " + w.to_string());
      }
    }
  } else {
    alpha_ = find_alpha(ram_, opts.check_degree_bound);
  }
  m_ = alpha_.degree() / 2;
  eps_ = sqrt_mod_irreducible(ram_.r, alpha_).rep;
  nu_ = exact_div(eps_ * eps_ - ram_.r, alpha_);

  // Basis elements times alpha, in the standard basis.
  const Poly zero(f);
  const std::array<std::array<Poly, 4>, 4> scaled_basis{{
      {alpha_, zero, zero, zero},
      {zero, alpha_, zero, zero},
      {zero, zero, alpha_, zero},
      {zero, eps_, zero, Poly::constant(f, f.one())},
  }};
  const Poly alpha2 = alpha_ * alpha_;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const auto p = std_mul(scaled_basis[a], scaled_basis[b], alpha_, ram_.r);
      QuatElem e;
      e.c[0] = exact_div(p[0], alpha2);
      e.c[1] = exact_div(p[1] - eps_ * p[3], alpha2);
      e.c[2] = exact_div(p[2], alpha2);
      e.c[3] = exact_div(p[3], alpha_);
      table_[a][b] = std::move(e);
    }
  }

  // The reduced trace form has determinant a unit times r^2.
  std::array<std::array<Poly, 4>, 4> gram;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) gram[a][b] = trd(table_[a][b]);
  }
  const Poly disc = det4(gram);
  const Poly r2 = ram_.r * ram_.r;
  QG_CHECK(!disc.is_zero() && disc.degree() == r2.degree() &&
               disc == r2.scaled(disc.lead()),
           "reduced discriminant of the order differs from r");

  for (const Poly& w : ram_.primes) {
    QG_CHECK(hilbert_at(w) == -1, "algebra not ramified at " + w.to_string());
  }
  QG_CHECK(hilbert_at(alpha_) == 1, "algebra ramified at alpha");
}

QuatElem AlgebraData::zero() const {
  QuatElem z;
  for (Poly& p : z.c) p = Poly(*f_);
  return z;
}

QuatElem AlgebraData::scalar(Elem c) const {
  QuatElem z = zero();
  z.c[0] = Poly::constant(*f_, c);
  return z;
}

QuatElem AlgebraData::from_poly(const Poly& p) const {
  QuatElem z = zero();
  z.c[0] = p;
  return z;
}

QuatElem AlgebraData::basis(int idx) const {
  QuatElem z = zero();
  z.c[idx] = Poly::constant(*f_, f_->one());
  return z;
}

QuatElem AlgebraData::add(const QuatElem& x, const QuatElem& y) const {
  QuatElem z = zero();
  for (int i = 0; i < 4; ++i) z.c[i] = x.c[i] + y.c[i];
  return z;
}

QuatElem AlgebraData::sub(const QuatElem& x, const QuatElem& y) const {
  QuatElem z = zero();
  for (int i = 0; i < 4; ++i) z.c[i] = x.c[i] - y.c[i];
  return z;
}

QuatElem AlgebraData::scale(const QuatElem& x, Elem c) const {
  QuatElem z = zero();
  for (int i = 0; i < 4; ++i) z.c[i] = Poly(*f_) + x.c[i].scaled(c);
  return z;
}

QuatElem AlgebraData::mul(const QuatElem& x, const QuatElem& y) const {
  QuatElem z = zero();
  for (int a = 0; a < 4; ++a) {
    if (x.c[a].is_zero()) continue;
    for (int b = 0; b < 4; ++b) {
      if (y.c[b].is_zero()) continue;
      const Poly xy = x.c[a] * y.c[b];
      const QuatElem& s = table_[a][b];
      for (int k = 0; k < 4; ++k) {
        if (!s.c[k].is_zero()) z.c[k] += xy * s.c[k];
      }
    }
  }
  return z;
}

QuatElem AlgebraData::conj(const QuatElem& x) const {
  QuatElem z = zero();
  z.c[0] = Poly(*f_) + x.c[0];
  for (int i = 1; i < 4; ++i) z.c[i] = Poly(*f_) - x.c[i];
  return z;
}

Poly AlgebraData::nrd(const QuatElem& x) const {
  const QuatElem n = mul(x, conj(x));
  QG_CHECK(n.c[1].is_zero() && n.c[2].is_zero() && n.c[3].is_zero(),
           "x * conj(x) is not central");
  return n.c[0];
}

Poly AlgebraData::trd(const QuatElem& x) const {
  return (Poly(*f_) + x.c[0]).scaled(f_->from_int(2));
}

bool AlgebraData::is_unit(const QuatElem& x) const {
  const Poly n = nrd(x);
  return n.degree() == 0;
}

QuatElem AlgebraData::inverse(const QuatElem& x) const {
  const Poly n = nrd(x);
  if (n.degree() != 0) throw InvalidInput("nrd not in F_q^*");
  return scale(conj(x), f_->inv(n.coeff(0)));
}

QuatElem AlgebraData::pow(const QuatElem& x, long long k) const {
  QuatElem base = k < 0 ? inverse(x) : x;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
  QuatElem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

Laurent AlgebraData::sqrt_alpha(int prec) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!sqrt_cache_ || sqrt_cache_->precision() < prec) {
    const int old = sqrt_cache_ ? sqrt_cache_->precision() : 0;
    const int target = std::max({prec, 2 * old, 32});
    sqrt_cache_ = newton_sqrt(alpha_, target - m_);
  }
  return sqrt_cache_->truncated(prec);
}

std::array<Mat2, 4> AlgebraData::basis_images(int prec) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = image_cache_.find(prec);
    if (it != image_cache_.end()) return it->second;
  }
  const Field& f = *f_;
  const Laurent s = sqrt_alpha(prec + ram_.degree + 1);
  const Laurent inv_s = s.inverse();
  const Laurent zero(f);
  const Laurent one = Laurent::one(f);
  const Laurent r = poly_to_laurent(ram_.r);
  const Laurent eps = poly_to_laurent(eps_);
  auto cut = [prec](const Laurent& x) { return x.truncated(prec); };
  std::array<Mat2, 4> im{
      Mat2{one, zero, zero, one},
      Mat2{cut(s), zero, zero, cut(-s)},
      Mat2{zero, one, r, zero},
      Mat2{cut(eps * inv_s), cut(inv_s), cut(-(r * inv_s)), cut(-(eps * inv_s))},
  };
  for (const Mat2& m : im) {
    QG_CHECK(m.precision() >= prec, "basis image below requested precision");
  }
  std::lock_guard<std::mutex> lock(mu_);
  image_cache_.emplace(prec, im);
  return im;
}

Mat2 AlgebraData::embed(const QuatElem& x, int prec) const {
  const Field& f = *f_;
  int h = 0;
  for (const Poly& p : x.c) h = std::max(h, p.degree());
  const auto im = basis_images(prec + h);
  Mat2 out{Laurent(f), Laurent(f), Laurent(f), Laurent(f)};
  for (int a = 0; a < 4; ++a) {
    if (x.c[a].is_zero()) continue;
    const Laurent l = poly_to_laurent(x.c[a]);
    out = out + Mat2{l * im[a].a, l * im[a].b, l * im[a].c, l * im[a].d};
  }
  out = {out.a.truncated(prec), out.b.truncated(prec), out.c.truncated(prec),
         out.d.truncated(prec)};
  QG_CHECK(out.precision() >= prec, "embedding below requested precision");
  return out;
}

int AlgebraData::hilbert_at(const Poly& w) const {
  return hilbert_symbol(alpha_, ram_.r, w);
}

std::shared_ptr<const AlgebraData> build_algebra(const FieldSpec& spec,
                                                 const std::vector<Poly>& primes,
                                                 const BuildOptions& opts) {
  const Field& f = Field::get(spec);
  std::vector<Poly> ps;
  ps.reserve(primes.size());
  for (const Poly& p : primes) ps.push_back(Poly(f, p.coeffs()));
  return std::make_shared<const AlgebraData>(f, RamificationSet::make(f, ps), opts);
}

}  // namespace quatgraph
