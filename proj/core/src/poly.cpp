// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "quatgraph/poly.hpp"

#include <algorithm>
#include <sstream>

#include "quatgraph/errors.hpp"

namespace quatgraph {

Poly::Poly(const Field& f, std::vector<Elem> coeffs)
    : f_(&f), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, Elem c, int k) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(f, std::move(v));
}

Poly Poly::from_ints(const Field& f, const std::vector<long long>& coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (long long c : coeffs) v.push_back(f.from_int(c));
  return Poly(f, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Elem Poly::eval(Elem x) const {
  Elem r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = f_->add(f_->mul(r, x), *it);
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Elem& c : r.c_) c = f_->neg(c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!f_) f_ = o.f_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!f_) f_ = o.f_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  const Field* f = a.f_ ? a.f_ : b.f_;
  Poly r(*f);
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r.c_[i + j] = f->add(r.c_[i + j], f->mul(a.c_[i], b.c_[j]));
    }
  }
  r.trim();
  return r;
}

Poly Poly::scaled(Elem c) const {
  Poly r = *this;
  for (Elem& x : r.c_) x = f_->mul(x, c);
  r.trim();
  return r;
}

Poly Poly::shifted(int k) const {
  if (c_.empty()) return *this;
  Poly r = *this;
  r.c_.insert(r.c_.begin(), k, 0);
  return r;
}

std::strong_ordering Poly::operator<=>(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() <=> o.c_.size();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return c_[i] <=> o.c_[i];
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Elem c = c_[k];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    const bool unit = c == f_->one();
    if (k == 0) {
      os << f_->to_string(c);
      continue;
    }
    if (!unit) os << f_->to_string(c) << '*';
    os << 'T';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

DivMod poly_divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw InvalidInput("division by the zero polynomial");
  const Field& F = g.field();
  if (f.degree() < g.degree()) return {Poly(F), f.field_ptr() ? f : Poly(F)};
  std::vector<Elem> r = f.coeffs();
  const int dg = g.degree();
  std::vector<Elem> q(f.degree() - dg + 1, 0);
  const Elem inv_lead = F.inv(g.lead());
  const auto& gc = g.coeffs();
  for (int i = f.degree(); i >= dg; --i) {
    if (r[i] == 0) continue;
    const Elem c = F.mul(r[i], inv_lead);
    q[i - dg] = c;
    for (int k = 0; k <= dg; ++k) {
      r[i - dg + k] = F.sub(r[i - dg + k], F.mul(c, gc[k]));
    }
  }
  r.resize(dg);
  return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly operator%(const Poly& f, const Poly& g) {
  if (f.degree() < g.degree() && !g.is_zero()) return f.field_ptr() ? f : Poly(g.field());
  return poly_divmod(f, g).remainder;
}

Poly exact_div(const Poly& f, const Poly& g) {
  auto qr = poly_divmod(f, g);
  QG_CHECK(qr.remainder.is_zero(), "inexact polynomial division");
  return qr.quotient;
}

Poly make_monic(const Poly& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.field().inv(f.lead()));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

Poly ext_gcd(const Poly& a, const Poly& b, Poly* s, Poly* t) {
  const Field& F = a.field_ptr() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, F.one()), s1(F);
  Poly t0(F), t1 = Poly::constant(F, F.one());
  while (!r1.is_zero()) {
    auto qr = poly_divmod(r0, r1);
    r0 = std::exchange(r1, qr.remainder);
    s0 = std::exchange(s1, s0 - qr.quotient * s1);
    t0 = std::exchange(t1, t0 - qr.quotient * t1);
  }
  if (!r0.is_zero()) {
    const Elem c = F.inv(r0.lead());
    r0 = r0.scaled(c);
    s0 = s0.scaled(c);
    t0 = t0.scaled(c);
  }
  if (s) *s = s0;
  if (t) *t = t0;
  return r0;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& a, std::uint64_t k, const Poly& m) {
  const Field& F = m.field();
  Poly r = Poly::constant(F, F.one()) % m;
  Poly b = a % m;
  while (k > 0) {
    if (k & 1) r = mulmod(r, b, m);
    k >>= 1;
    if (k) b = mulmod(b, b, m);
  }
  return r;
}

Poly invmod(const Poly& a, const Poly& m) {
  Poly s;
  const Poly g = ext_gcd(a % m, m, &s, nullptr);
  if (!g.is_one()) throw InvalidInput("polynomial not invertible modulo " + m.to_string());
  return s % m;
}

bool is_irreducible(const Poly& f0) {
  if (f0.is_zero()) throw InvalidInput("zero polynomial has no factorization");
  const Poly f = make_monic(f0);
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Field& F = f.field();
  const Poly x = Poly::T(F);
  // x^(q^i) mod f for i = 0..n.
  std::vector<Poly> frob{x % f};
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), F.q(), f));
  if (!(frob[n] - x).is_zero() && !((frob[n] - x) % f).is_zero()) return false;
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r != 0) continue;
    while (m % r == 0) m /= r;
    if (!gcd(frob[n / r] - x, f).is_one()) return false;
  }
  return true;
}

int legendre(const Poly& a, const Poly& w) {
  if (!w.is_monic() || !is_irreducible(w)) {
    throw InvalidInput("legendre symbol needs a monic irreducible modulus");
  }
  const Poly r = a % w;
  if (r.is_zero()) return 0;
  // a^((Q-1)/2) equals N(a)^((q-1)/2) with N the norm down to F_q.
  const Field& F = w.field();
  Poly b = r, prod = r;
  for (int i = 1; i < w.degree(); ++i) {
    b = powmod(b, F.q(), w);
    prod = mulmod(prod, b, w);
  }
  QG_CHECK(prod.is_constant() && !prod.is_zero(), "norm not in F_q^*");
  return F.is_square(prod.coeff(0)) ? 1 : -1;
}

int valuation_at(const Poly& a, const Poly& w, Poly* unit) {
  if (a.is_zero()) throw InvalidInput("valuation of zero");
  int v = 0;
  Poly u = a;
  for (;;) {
    auto qr = poly_divmod(u, w);
    if (!qr.remainder.is_zero()) break;
    u = std::move(qr.quotient);
    ++v;
  }
  if (unit) *unit = u;
  return v;
}

int hilbert_symbol(const Poly& a, const Poly& b, const Poly& w) {
  if (a.is_zero() || b.is_zero()) throw InvalidInput("hilbert symbol of zero");
  Poly u, v;
  const int al = valuation_at(a, w, &u);
  const int be = valuation_at(b, w, &v);
  const int eps = ((w.field().q() - 1) / 2 * w.degree()) % 2;
  int s = (al * be * eps) % 2 ? -1 : 1;
  if (be % 2) s *= legendre(u, w);
  if (al % 2) s *= legendre(v, w);
  return s;
}

Poly crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli) {
  if (residues.size() != moduli.size() || moduli.empty()) {
    throw InvalidInput("crt needs matching nonempty residue and modulus lists");
  }
  Poly x = residues[0] % moduli[0];
  Poly m = moduli[0];
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    if (!gcd(m, moduli[i]).is_one()) throw InvalidInput("crt moduli not coprime");
    const Poly inv = invmod(m, moduli[i]);
    const Poly t = mulmod(residues[i] - x, inv, moduli[i]);
    x = x + m * t;
    m = m * moduli[i];
  }
  return x % m;
}

namespace {

std::uint64_t checked_pow(std::uint64_t b, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (std::uint64_t{1} << 62) / b) {
      throw InvalidInput("residue field too large for square roots");
    }
    r *= b;
  }
  return r;
}

}  // namespace

ResidueElem sqrt_mod_irreducible(const Poly& a, const Poly& f) {
  if (legendre(a, f) != 1) {
    if ((a % f).is_zero()) return {Poly(f.field()), f};
    throw InvalidInput("not a square modulo " + f.to_string());
  }
  const Field& F = f.field();
  const Poly one = Poly::constant(F, F.one());
  const std::uint64_t Q = checked_pow(F.q(), f.degree());
  std::uint64_t t = Q - 1;
  int s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  // First quadratic non-residue, scanning residues in canonical order.
  Poly z;
  bool found = false;
  for (int d = 0; d < f.degree() && !found; ++d) {
    for_each_monic(F, d, [&](const Poly& m) {
      for (Elem c = 1; c < F.q(); ++c) {
        Poly cand = m.scaled(c);
        if (legendre(cand, f) == -1) {
          z = cand;
          found = true;
          return false;
        }
      }
      return true;
    });
  }
  QG_CHECK(found, "no quadratic non-residue");
  const Poly ar = a % f;
  Poly c = powmod(z, t, f);
  Poly x = powmod(ar, (t + 1) / 2, f);
  Poly b = powmod(ar, t, f);
  int m = s;
  while (!b.is_one()) {
    int i = 0;
    Poly bb = b;
    while (!bb.is_one()) {
      bb = mulmod(bb, bb, f);
      ++i;
      QG_CHECK(i < m, "Tonelli-Shanks did not converge");
    }
    Poly g = c;
    for (int k = 0; k < m - i - 1; ++k) g = mulmod(g, g, f);
    x = mulmod(x, g, f);
    c = mulmod(g, g, f);
    b = mulmod(b, c, f);
    m = i;
  }
  QG_CHECK((mulmod(x, x, f) - ar).is_zero(), "square root check failed");
  const Poly y = (-x) % f;
  return {std::min(x, y), f};
}

void for_each_monic(const Field& f, int degree,
                    const std::function<bool(const Poly&)>& visit) {
  const int q = f.q();
  std::vector<Elem> c(degree + 1, 0);
  c[degree] = f.one();
  // Odometer with c[0] the most significant digit.
  for (;;) {
    if (!visit(Poly(f, c))) return;
    int i = degree - 1;
    while (i >= 0) {
      if (++c[i] < q) break;
      c[i] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

void for_each_monic_irreducible(const Field& f, int degree,
                                const std::function<bool(const Poly&)>& visit) {
  if (degree < 1) throw InvalidInput("degree must be at least 1");
  for_each_monic(f, degree, [&](const Poly& p) {
    return is_irreducible(p) ? visit(p) : true;
  });
}

std::vector<Poly> enumerate_monic_irreducibles(const Field& f, int degree) {
  std::vector<Poly> out;
  for_each_monic_irreducible(f, degree, [&](const Poly& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::size_t PolyHash::operator()(const Poly& p) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Elem c : p.coeffs()) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

}  // namespace quatgraph
