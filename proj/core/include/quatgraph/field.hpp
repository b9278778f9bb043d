// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quatgraph {

// Index of an element of F_q. The integer order of indices is the canonical
// order of F_q: coordinate vectors (c0, ..., c_{e-1}) compared
// lexicographically, c0 first.
using Elem = std::uint16_t;

struct FieldSpec {
  int p = 0;
  int e = 1;
  // Ascending coefficients over F_p of the defining polynomial, monic of
  // degree e. Empty for prime fields.
  std::vector<int> modulus;

  int q() const;
  bool operator==(const FieldSpec&) const = default;

  // Validates p, e and the modulus. An empty modulus for e > 1 selects the
  // built-in default (q = 9, 25, 27, 49) or else the first irreducible in
  // canonical order.
  static FieldSpec make(int p, int e = 1, std::vector<int> modulus = {});
  // Accepts q itself (a prime power) and splits it as p^e.
  static FieldSpec from_q(int q, std::vector<int> modulus = {});
};

// Table-driven arithmetic in F_q. Instances are interned for the lifetime of
// the process, so references and pointers to a Field never dangle.
class Field {
 public:
  static constexpr int kMaxQ = 1024;

  static const Field& get(const FieldSpec& spec);
  static const Field& get_prime(int p) { return get(FieldSpec::make(p)); }

  const FieldSpec& spec() const { return spec_; }
  int p() const { return spec_.p; }
  int e() const { return spec_.e; }
  int q() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  // Image of an integer under Z -> F_p -> F_q.
  Elem from_int(long long k) const;
  Elem from_coords(const std::vector<int>& coords) const;
  std::vector<int> coords(Elem a) const;

  bool is_square(Elem a) const;
  // Square root when a is a square; the smaller of the two roots.
  Elem sqrt(Elem a) const;
  // The first generator of F_q^* in canonical order.
  Elem primitive_element() const { return primitive_; }
  int multiplicative_order(Elem a) const;

  std::string to_string(Elem a) const;

 private:
  explicit Field(const FieldSpec& spec);

  FieldSpec spec_;
  int q_ = 0;
  Elem one_ = 0;
  Elem primitive_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> sqrt_;  // sqrt_[a] = root, or q_ when a is a non-square
};

}  // namespace quatgraph
