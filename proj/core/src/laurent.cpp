// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "quatgraph/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "quatgraph/errors.hpp"

namespace quatgraph {
namespace {

int sat(long long x) {
  return static_cast<int>(std::min<long long>(x, Laurent::kExact));
}

}  // namespace

Laurent::Laurent(const Field& f, int val, std::vector<Elem> coeffs, int prec)
    : f_(&f), val_(val), prec_(prec), coeffs_(std::move(coeffs)) {
  if (val_ > prec_) val_ = prec_;
  if (!exact() && static_cast<int>(coeffs_.size()) > prec_ - val_) {
    coeffs_.resize(prec_ - val_);
  }
  normalize();
}

void Laurent::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    val_ = prec_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    val_ += static_cast<int>(lead);
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

Laurent Laurent::monomial(const Field& f, Elem c, int k) {
  return Laurent(f, k, {c});
}

Elem Laurent::coeff(int k) const {
  if (k >= prec_) {
    throw InsufficientPrecision("coefficient of pi^" + std::to_string(k) +
                                " beyond precision " + std::to_string(prec_));
  }
  if (k < val_) return 0;
  const int i = k - val_;
  return i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Elem{0};
}

Laurent Laurent::truncated(int prec) const {
  if (prec >= prec_) return *this;
  Laurent r = *this;
  r.prec_ = prec;
  if (r.coeffs_.empty() || prec <= r.val_) {
    r.coeffs_.clear();
    r.val_ = prec;
    return r;
  }
  if (static_cast<int>(r.coeffs_.size()) > prec - r.val_) {
    r.coeffs_.resize(prec - r.val_);
  }
  r.normalize();
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  if (!exact()) r.prec_ = prec_ + k;
  if (!r.coeffs_.empty() || !exact()) r.val_ = val_ + k;
  return r;
}

Laurent Laurent::scaled(Elem c) const {
  if (c == 0) return Laurent(*f_, prec_);
  Laurent r = *this;
  for (Elem& x : r.coeffs_) x = f_->mul(x, c);
  return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  const Field& F = a.f_ ? *a.f_ : *b.f_;
  const int prec = std::min(a.prec_, b.prec_);
  if (b.coeffs_.empty()) return a.truncated(prec);
  if (a.coeffs_.empty()) return b.truncated(prec);
  const int lo = std::min(a.val_, b.val_);
  int hi = std::max(a.top(), b.top()) + 1;
  hi = std::min(hi, prec);
  if (hi <= lo) return Laurent(F, prec);
  std::vector<Elem> c(hi - lo, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int k = a.val_ + static_cast<int>(i) - lo;
    if (k >= hi - lo) break;
    c[k] = a.coeffs_[i];
  }
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
    const int k = b.val_ + static_cast<int>(i) - lo;
    if (k >= hi - lo) break;
    c[k] = F.add(c[k], b.coeffs_[i]);
  }
  return Laurent(F, lo, std::move(c), prec);
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  const Field& F = a.f_ ? *a.f_ : *b.f_;
  // An exact factor contributes no error term of its own.
  const int prec =
      std::min(a.exact() ? Laurent::kExact : sat(static_cast<long long>(a.prec_) + b.val_),
               b.exact() ? Laurent::kExact : sat(static_cast<long long>(b.prec_) + a.val_));
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Laurent(F, prec);
  const int val = a.val_ + b.val_;
  const int full = static_cast<int>(a.coeffs_.size() + b.coeffs_.size()) - 1;
  const int len = std::min<long long>(full, static_cast<long long>(prec) - val);
  if (len <= 0) return Laurent(F, prec);
  std::vector<Elem> c(len, 0);
  const int la = static_cast<int>(a.coeffs_.size());
  const int lb = static_cast<int>(b.coeffs_.size());
  for (int i = 0; i < la && i < len; ++i) {
    const Elem x = a.coeffs_[i];
    if (x == 0) continue;
    const int jmax = std::min(lb, len - i);
    for (int j = 0; j < jmax; ++j) {
      c[i + j] = F.add(c[i + j], F.mul(x, b.coeffs_[j]));
    }
  }
  return Laurent(F, val, std::move(c), prec);
}

Laurent Laurent::inverse(int prec_cap) const {
  if (coeffs_.empty()) {
    throw InsufficientPrecision("inverse of a value that is zero at precision " +
                                std::to_string(prec_));
  }
  const Field& F = *f_;
  const int val = -val_;
  if (coeffs_.size() == 1 && exact()) {
    Laurent r(F, val, {F.inv(coeffs_[0])});
    return r.truncated(prec_cap);
  }
  long long rel = exact() ? Laurent::kExact : static_cast<long long>(prec_) - val_;
  int prec = sat(val + rel);
  prec = std::min(prec, prec_cap);
  if (prec >= Laurent::kExact) {
    throw InvalidInput("inverse of an exact non-monomial needs a precision cap");
  }
  const int len = prec - val;
  if (len <= 0) return Laurent(F, prec);
  const Elem inv0 = F.inv(coeffs_[0]);
  std::vector<Elem> r(len, 0);
  r[0] = inv0;
  const int la = static_cast<int>(coeffs_.size());
  for (int k = 1; k < len; ++k) {
    Elem s = 0;
    const int jmax = std::min(k, la - 1);
    for (int j = 1; j <= jmax; ++j) s = F.add(s, F.mul(coeffs_[j], r[k - j]));
    r[k] = F.neg(F.mul(s, inv0));
  }
  return Laurent(F, val, std::move(r), prec);
}

bool Laurent::agrees_with(const Laurent& o) const {
  const int prec = std::min(prec_, o.prec_);
  const Laurent d = truncated(prec) - o.truncated(prec);
  return d.is_zero();
}

std::string Laurent::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << f_->to_string(coeffs_[i]) << "*pi^" << val_ + static_cast<int>(i);
  }
  if (!exact()) {
    if (!first) os << " + ";
    first = false;
    os << "O(pi^" << prec_ << ")";
  }
  if (first) os << "0";
  return os.str();
}

Laurent poly_to_laurent(const Poly& f, int prec) {
  if (f.field_ptr() == nullptr) throw InvalidInput("polynomial without a field");
  const Field& F = f.field();
  if (f.is_zero()) return Laurent(F);
  if (prec <= -f.degree()) {
    throw InvalidInput("precision must exceed the valuation of the polynomial");
  }
  std::vector<Elem> c(f.coeffs().rbegin(), f.coeffs().rend());
  return Laurent(F, -f.degree(), std::move(c), prec);
}

Laurent newton_sqrt(const Poly& f, int prec, NewtonStats* stats) {
  if (f.is_zero() || !f.is_monic() || f.degree() % 2 != 0) {
    throw InvalidInput("newton_sqrt needs a monic polynomial of even degree");
  }
  const Field& F = f.field();
  const int m = f.degree() / 2;
  // u^2 = a with a = pi^(2m) f(1/pi) a 1-unit; u is needed modulo pi^K.
  const int K = std::max(1, prec + 2 * m);
  std::vector<Elem> a(K, 0);
  for (int j = 0; j < K && j <= f.degree(); ++j) a[j] = f.coeff(f.degree() - j);
  std::vector<Elem> u(K, 0);
  u[0] = F.one();
  const Elem half = F.inv(F.from_int(2));
  std::uint64_t ops = 0;
  std::vector<Elem> sq(K);
  for (int k = 1; k < K; ++k) {
    // Full square of the current approximation modulo pi^K.
    std::fill(sq.begin(), sq.end(), 0);
    for (int i = 0; i < K; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; i + j < K; ++j) {
        sq[i + j] = F.add(sq[i + j], F.mul(u[i], u[j]));
        ++ops;
      }
    }
    const Elem digit = F.sub(sq[k], a[k]);
    u[k] = F.sub(u[k], F.mul(digit, half));
    ++ops;
  }
  if (stats) stats->field_ops += ops;
  return Laurent(F, -m, std::move(u), K - m);
}

Mat2 Mat2::identity(const Field& f) {
  return {Laurent::one(f), Laurent(f), Laurent(f), Laurent::one(f)};
}

int Mat2::valuation() const {
  return std::min({a.valuation(), b.valuation(), c.valuation(), d.valuation()});
}

int Mat2::precision() const {
  return std::min({a.precision(), b.precision(), c.precision(), d.precision()});
}

Mat2 Mat2::inverse(int prec_cap) const {
  const Laurent det_inv = det().inverse(prec_cap);
  return {d * det_inv, -(b * det_inv), -(c * det_inv), a * det_inv};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

}  // namespace quatgraph
