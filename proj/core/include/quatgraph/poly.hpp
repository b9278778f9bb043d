// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "quatgraph/field.hpp"

namespace quatgraph {

// Element of A = F_q[T]. Coefficients are ascending; the zero polynomial has
// no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& f) : f_(&f) {}
  Poly(const Field& f, std::vector<Elem> coeffs);

  static Poly constant(const Field& f, Elem c);
  static Poly monomial(const Field& f, Elem c, int k);
  static Poly T(const Field& f) { return monomial(f, f.one(), 1); }
  // Integer coefficients, ascending, reduced into F_p.
  static Poly from_ints(const Field& f, const std::vector<long long>& coeffs);

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == f_->one(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == f_->one(); }
  Elem coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Elem{0};
  }
  Elem lead() const { return c_.empty() ? Elem{0} : c_.back(); }
  Elem eval(Elem x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Elem c) const;
  Poly shifted(int k) const;  // times T^k, k >= 0

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  // Canonical order: by degree, then coefficients compared from the constant
  // term up.
  std::strong_ordering operator<=>(const Poly& o) const;

  std::string to_string() const;

 private:
  void trim();

  const Field* f_ = nullptr;
  std::vector<Elem> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod poly_divmod(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
// f / g, raising InternalError unless g divides f.
Poly exact_div(const Poly& f, const Poly& g);
Poly make_monic(const Poly& f);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
// Returns g = gcd(a, b) (monic) and s, t with s*a + t*b = g.
Poly ext_gcd(const Poly& a, const Poly& b, Poly* s, Poly* t);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, std::uint64_t k, const Poly& m);
// Inverse of a modulo m; InvalidInput if not coprime.
Poly invmod(const Poly& a, const Poly& m);

bool is_irreducible(const Poly& f);
// Leg(a / w) for a monic irreducible w.
int legendre(const Poly& a, const Poly& w);
// Valuation of a nonzero a at the irreducible w; the cofactor goes to *unit.
int valuation_at(const Poly& a, const Poly& w, Poly* unit = nullptr);
// Local Hilbert symbol (a, b) at the place w.
int hilbert_symbol(const Poly& a, const Poly& b, const Poly& w);
Poly crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli);

// Element of the residue field A/(f).
struct ResidueElem {
  Poly rep;
  Poly modulus;
  bool operator==(const ResidueElem&) const = default;
};

// Square root of a modulo the irreducible f, choosing the smaller of the two
// roots in canonical order.
ResidueElem sqrt_mod_irreducible(const Poly& a, const Poly& f);

// Calls visit for each monic polynomial of the given degree in canonical
// order; stops when visit returns false.
void for_each_monic(const Field& f, int degree,
                    const std::function<bool(const Poly&)>& visit);
// Same, restricted to irreducible polynomials.
void for_each_monic_irreducible(const Field& f, int degree,
                                const std::function<bool(const Poly&)>& visit);
std::vector<Poly> enumerate_monic_irreducibles(const Field& f, int degree);

struct PolyHash {
  std::size_t operator()(const Poly& p) const;
};

}  // namespace quatgraph
