// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quatgraph/field.hpp"
#include "quatgraph/poly.hpp"

namespace quatgraph {

// Element of K_inf = F_q((pi)), pi = 1/T, known modulo pi^prec.
//
// coeffs_[k] is the coefficient of pi^(val_ + k). The first stored
// coefficient is nonzero and trailing zeros are not stored; exponents in
// [val_ + size, prec_) are zero. A value whose known coefficients all vanish
// has no coefficients and val_ == prec_ ("zero at this precision").
// prec_ == kExact marks an exactly known value.
class Laurent {
 public:
  static constexpr int kExact = 1 << 29;

  Laurent() = default;
  explicit Laurent(const Field& f, int prec = kExact)
      : f_(&f), val_(prec), prec_(prec) {}
  Laurent(const Field& f, int val, std::vector<Elem> coeffs, int prec = kExact);

  static Laurent monomial(const Field& f, Elem c, int k);
  static Laurent one(const Field& f) { return monomial(f, f.one(), 0); }
  static Laurent pi_power(const Field& f, int k) { return monomial(f, f.one(), k); }

  const Field& field() const { return *f_; }
  int valuation() const { return val_; }
  int precision() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  // Coefficient of pi^k; InsufficientPrecision when k >= precision().
  Elem coeff(int k) const;
  Elem lead() const { return coeffs_.empty() ? Elem{0} : coeffs_[0]; }
  // Largest exponent carrying a nonzero coefficient (valuation - 1 if none).
  int top() const { return val_ + static_cast<int>(coeffs_.size()) - 1; }

  Laurent truncated(int prec) const;
  // Multiplication by pi^k.
  Laurent shifted(int k) const;
  Laurent scaled(Elem c) const;
  Laurent operator-() const { return scaled(f_->neg(f_->one())); }
  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  // Inverse. Exact non-monomials have infinite expansions; their inverse is
  // computed to absolute precision prec_cap. Finite-precision inputs keep
  // their relative precision, further limited by prec_cap.
  Laurent inverse(int prec_cap = kExact) const;

  // Same known coefficients and same precision.
  bool operator==(const Laurent& o) const {
    return val_ == o.val_ && prec_ == o.prec_ && coeffs_ == o.coeffs_;
  }
  // Agreement modulo pi^k for every k up to both precisions.
  bool agrees_with(const Laurent& o) const;

  std::string to_string() const;

 private:
  void normalize();

  const Field* f_ = nullptr;
  int val_ = kExact;
  int prec_ = kExact;
  std::vector<Elem> coeffs_;
};

// The image of f under A -> K_inf, T -> 1/pi, known modulo pi^prec.
Laurent poly_to_laurent(const Poly& f, int prec = Laurent::kExact);

struct NewtonStats {
  std::uint64_t field_ops = 0;
};

// Square root of the monic even-degree f with leading behaviour
// pi^(-m)(1 + O(pi)), known to absolute precision prec + m so that its
// square agrees with f through pi^(prec - 1).
Laurent newton_sqrt(const Poly& f, int prec, NewtonStats* stats = nullptr);

struct Mat2 {
  Laurent a, b, c, d;

  static Mat2 identity(const Field& f);
  Laurent det() const { return a * d - b * c; }
  int valuation() const;
  int precision() const;
  Mat2 inverse(int prec_cap = Laurent::kExact) const;
  Mat2 shifted(int k) const { return {a.shifted(k), b.shifted(k), c.shifted(k), d.shifted(k)}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator+(const Mat2& x, const Mat2& y);
};

inline Mat2 mat2_mul(const Mat2& x, const Mat2& y) { return x * y; }
inline Mat2 mat2_inv(const Mat2& x) { return x.inverse(); }
inline Laurent mat2_det(const Mat2& x) { return x.det(); }

}  // namespace quatgraph
