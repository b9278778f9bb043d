// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "quatgraph/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "quatgraph/errors.hpp"

namespace quatgraph {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int mod(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of a modulo the monic b, both ascending over F_p.
std::vector<int> fp_rem(std::vector<int> a, const std::vector<int>& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const int c = a[i];
    if (c == 0) continue;
    for (int k = 0; k <= db; ++k) {
      a[i - db + k] = mod(a[i - db + k] - static_cast<long long>(c) * b[k], p);
    }
  }
  a.resize(std::min<std::size_t>(a.size(), db));
  return a;
}

// Trial division by every monic polynomial of degree <= e/2.
bool fp_irreducible(const std::vector<int>& f, int p) {
  const int e = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= e; ++d) {
    std::vector<int> g(d + 1, 0);
    g[d] = 1;
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      long long t = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      const auto r = fp_rem(f, g, p);
      bool zero = true;
      for (int c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::vector<int> default_modulus(int p, int e) {
  const int q = [&] {
    int r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
  }();
  switch (q) {
    case 9: return {1, 0, 1};
    case 25: return {2, 0, 1};
    case 27: return {1, 2, 0, 1};
    case 49: return {1, 0, 1};
    default: break;
  }
  // First monic irreducible of degree e, lower coefficients in lex order.
  std::vector<int> f(e + 1, 0);
  f[e] = 1;
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long idx = 0; idx < count; ++idx) {
    long long t = idx;
    for (int i = e - 1; i >= 0; --i) {
      f[i] = static_cast<int>(t % p);
      t /= p;
    }
    if (fp_irreducible(f, p)) return f;
  }
  throw InternalError("no irreducible polynomial found");
}

}  // namespace

int FieldSpec::q() const {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

FieldSpec FieldSpec::make(int p, int e, std::vector<int> modulus) {
  if (!is_prime(p) || p == 2) {
    throw InvalidInput("characteristic must be an odd prime, got " +
                       std::to_string(p));
  }
  if (e < 1) throw InvalidInput("extension degree must be at least 1");
  FieldSpec s;
  s.p = p;
  s.e = e;
  if (s.q() > Field::kMaxQ || s.q() <= 0) {
    throw InvalidInput("field size exceeds " + std::to_string(Field::kMaxQ));
  }
  if (e == 1) {
    if (!modulus.empty() &&
        !(modulus.size() == 2 && mod(modulus[1], p) == 1)) {
      throw InvalidInput("a prime field takes no modulus");
    }
    return s;
  }
  if (modulus.empty()) {
    s.modulus = default_modulus(p, e);
    return s;
  }
  for (int& c : modulus) c = mod(c, p);
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (static_cast<int>(modulus.size()) != e + 1 || modulus.back() != 1) {
    throw InvalidInput("modulus must be monic of degree " + std::to_string(e));
  }
  if (!fp_irreducible(modulus, p)) {
    throw InvalidInput("modulus is reducible over F_" + std::to_string(p));
  }
  s.modulus = std::move(modulus);
  return s;
}

FieldSpec FieldSpec::from_q(int q, std::vector<int> modulus) {
  if (q < 3) throw InvalidInput("q must be an odd prime power");
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  int t = q;
  while (t % p == 0) {
    t /= p;
    ++e;
  }
  if (t != 1) throw InvalidInput("q must be a prime power, got " +
                                 std::to_string(q));
  return make(p, e, std::move(modulus));
}

const Field& Field::get(const FieldSpec& spec) {
  static std::mutex mu;
  static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<Field>>
      interned;
  const FieldSpec canon = FieldSpec::make(spec.p, spec.e, spec.modulus);
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(canon.p, canon.e == 1 ? std::vector<int>{}
                                                  : canon.modulus);
  auto it = interned.find(key);
  if (it == interned.end()) {
    it = interned.emplace(key, std::unique_ptr<Field>(new Field(canon))).first;
  }
  return *it->second;
}

Field::Field(const FieldSpec& spec) : spec_(spec), q_(spec.q()) {
  const int p = spec_.p;
  const int e = spec_.e;
  std::vector<std::vector<int>> co(q_);
  for (int a = 0; a < q_; ++a) {
    std::vector<int> c(e);
    int t = a;
    for (int i = e - 1; i >= 0; --i) {
      c[i] = t % p;
      t /= p;
    }
    co[a] = std::move(c);
  }
  auto index = [&](const std::vector<int>& c) {
    int r = 0;
    for (int i = 0; i < e; ++i) r = r * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return static_cast<Elem>(r);
  };
  one_ = index(std::vector<int>{1});
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    std::vector<int> n(e);
    for (int i = 0; i < e; ++i) n[i] = mod(-co[a][i], p);
    neg_[a] = index(n);
    for (int b = 0; b < q_; ++b) {
      std::vector<int> s(e);
      for (int i = 0; i < e; ++i) s[i] = (co[a][i] + co[b][i]) % p;
      add_[a * q_ + b] = index(s);
      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i) {
        for (int j = 0; j < e; ++j) {
          prod[i + j] = (prod[i + j] + co[a][i] * co[b][j]) % p;
        }
      }
      if (e > 1) prod = fp_rem(prod, spec_.modulus, p);
      prod.resize(e, 0);
      mul_[a * q_ + b] = index(prod);
    }
  }
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == one_) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }
    }
    QG_CHECK(inv_[a] != 0, "zero divisor in field tables");
  }
  sqrt_.assign(q_, static_cast<Elem>(q_));
  for (int a = q_ - 1; a >= 0; --a) sqrt_[mul_[a * q_ + a]] = static_cast<Elem>(a);
  for (int a = 1; a < q_; ++a) {
    if (multiplicative_order(static_cast<Elem>(a)) == q_ - 1) {
      primitive_ = static_cast<Elem>(a);
      break;
    }
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw InvalidInput("division by zero in F_q");
  return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  Elem r = one_;
  Elem b = a;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

Elem Field::from_int(long long k) const {
  std::vector<int> c(spec_.e, 0);
  c[0] = mod(k, spec_.p);
  return from_coords(c);
}

Elem Field::from_coords(const std::vector<int>& coords) const {
  if (static_cast<int>(coords.size()) > spec_.e) {
    throw InvalidInput("too many coordinates for F_" + std::to_string(q_));
  }
  int r = 0;
  for (int i = 0; i < spec_.e; ++i) {
    r = r * spec_.p +
        (i < static_cast<int>(coords.size()) ? mod(coords[i], spec_.p) : 0);
  }
  return static_cast<Elem>(r);
}

std::vector<int> Field::coords(Elem a) const {
  std::vector<int> c(spec_.e);
  int t = a;
  for (int i = spec_.e - 1; i >= 0; --i) {
    c[i] = t % spec_.p;
    t /= spec_.p;
  }
  return c;
}

bool Field::is_square(Elem a) const { return sqrt_[a] != q_; }

Elem Field::sqrt(Elem a) const {
  if (!is_square(a)) throw InvalidInput("not a square in F_q");
  return sqrt_[a];
}

int Field::multiplicative_order(Elem a) const {
  if (a == 0) throw InvalidInput("zero has no multiplicative order");
  int k = 1;
  Elem x = a;
  while (x != one_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::string Field::to_string(Elem a) const {
  if (spec_.e == 1) return std::to_string(a);
  std::ostringstream os;
  os << '[';
  const auto c = coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

}  // namespace quatgraph
