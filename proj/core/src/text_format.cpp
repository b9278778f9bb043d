// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "quatgraph/text_format.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "quatgraph/errors.hpp"

namespace quatgraph {

namespace {

enum class Tok { kNum, kElem, kIdent, kSym, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::kNum, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::kIdent, std::string(s.substr(start, i - start)), start});
    } else if (c == '[') {
      const std::size_t close = s.find(']', i);
      if (close == std::string_view::npos) {
        throw InvalidInput("unterminated '[' at position " + std::to_string(i));
      }
      out.push_back({Tok::kElem, std::string(s.substr(i + 1, close - i - 1)), start});
      i = close + 1;
    } else if (std::string_view("+-*^()").find(c) != std::string_view::npos) {
      out.push_back({Tok::kSym, std::string(1, c), start});
      ++i;
    } else {
      throw InvalidInput("unexpected character '" + std::string(1, c) +
                         "' at position " + std::to_string(i));
    }
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

long long to_int(const std::string& s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw InvalidInput("bad integer '" + s + "'");
  }
  return v;
}

Elem elem_from_coords(const Field& f, const std::string& body) {
  std::vector<int> coords;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t a = part.find_first_not_of(" \t");
    std::size_t b = part.find_last_not_of(" \t");
    if (a == std::string::npos) throw InvalidInput("empty coordinate in '[" + body + "]'");
    const long long v = to_int(part.substr(a, b - a + 1));
    coords.push_back(static_cast<int>(((v % f.p()) + f.p()) % f.p()));
  }
  return f.from_coords(coords);
}

// Recursive-descent evaluation over a ring R providing value, field(),
// elem(Elem), var(name), add, sub, neg, mul and pow(x, k).
template <class R>
class Parser {
 public:
  using V = typename R::value;

  Parser(const R& ring, std::string_view src)
      : ring_(ring), src_(src), toks_(tokenize(src)) {}

  V parse() {
    V v = expr();
    if (peek().kind != Tok::kEnd) fail(peek());
    return v;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  bool sym(char c) const { return peek().kind == Tok::kSym && peek().text[0] == c; }

  [[noreturn]] void fail(const Token& t) const {
    const std::string what = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw InvalidInput("cannot parse '" + std::string(src_) + "': unexpected " + what +
                       " at position " + std::to_string(t.pos));
  }

  V expr() {
    V acc;
    if (sym('-')) {
      ++at_;
      acc = ring_.neg(term());
    } else {
      acc = term();
    }
    while (sym('+') || sym('-')) {
      const bool minus = peek().text[0] == '-';
      ++at_;
      V t = term();
      acc = minus ? ring_.sub(acc, t) : ring_.add(acc, t);
    }
    return acc;
  }

  bool starts_factor() const {
    const Token& t = peek();
    return t.kind == Tok::kNum || t.kind == Tok::kElem || t.kind == Tok::kIdent || sym('(');
  }

  V term() {
    V acc = factor();
    for (;;) {
      if (sym('*')) {
        ++at_;
        acc = ring_.mul(acc, factor());
      } else if (starts_factor()) {
        acc = ring_.mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  V factor() {
    V base = primary();
    if (!sym('^')) return base;
    ++at_;
    bool neg = false;
    if (sym('-')) {
      neg = true;
      ++at_;
    }
    if (peek().kind != Tok::kNum) fail(peek());
    const long long k = to_int(toks_[at_++].text);
    return ring_.pow(base, neg ? -k : k);
  }

  V primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNum:
        ++at_;
        return ring_.elem(ring_.field().from_int(to_int(t.text)));
      case Tok::kElem:
        ++at_;
        return ring_.elem(elem_from_coords(ring_.field(), t.text));
      case Tok::kIdent: {
        ++at_;
        auto v = ring_.var(t.text);
        if (!v) fail(t);
        return *v;
      }
      case Tok::kSym:
        if (t.text[0] == '(') {
          ++at_;
          V v = expr();
          if (!sym(')')) fail(peek());
          ++at_;
          return v;
        }
        fail(t);
      case Tok::kEnd:
        break;
    }
    fail(t);
  }

  const R& ring_;
  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

struct PolyRing {
  using value = Poly;
  const Field& f;
  const Field& field() const { return f; }
  Poly elem(Elem c) const { return Poly::constant(f, c); }
  std::optional<Poly> var(const std::string& name) const {
    if (name == "T") return Poly::T(f);
    return std::nullopt;
  }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly neg(const Poly& a) const { return -a; }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  Poly pow(const Poly& a, long long k) const {
    if (k < 0) throw InvalidInput("negative power of a polynomial");
    Poly r = Poly::constant(f, f.one());
    for (long long i = 0; i < k; ++i) r = r * a;
    return r;
  }
};

// Finite sums of c pi^k, k any integer.
struct LaurentRing {
  using value = std::map<int, Elem>;
  const Field& f;
  const Field& field() const { return f; }
  value elem(Elem c) const {
    value v;
    if (c != 0) v[0] = c;
    return v;
  }
  std::optional<value> var(const std::string& name) const {
    if (name == "pi") return value{{1, f.one()}};
    if (name == "T") return value{{-1, f.one()}};
    return std::nullopt;
  }
  value add(value a, const value& b) const {
    for (const auto& [k, c] : b) {
      const Elem s = f.add(a[k], c);
      if (s == 0) {
        a.erase(k);
      } else {
        a[k] = s;
      }
    }
    return a;
  }
  value neg(value a) const {
    for (auto& [k, c] : a) c = f.neg(c);
    return a;
  }
  value sub(const value& a, const value& b) const { return add(a, neg(b)); }
  value mul(const value& a, const value& b) const {
    value r;
    for (const auto& [i, x] : a) {
      for (const auto& [j, y] : b) r = add(std::move(r), value{{i + j, f.mul(x, y)}});
    }
    return r;
  }
  value pow(const value& a, long long k) const {
    value base = a;
    if (k < 0) {
      if (a.size() != 1) throw InvalidInput("negative power of a non-monomial");
      base = value{{-a.begin()->first, f.inv(a.begin()->second)}};
      k = -k;
    }
    value r = elem(f.one());
    for (long long i = 0; i < k; ++i) r = mul(r, base);
    return r;
  }
};

struct QuatRing {
  using value = QuatElem;
  const AlgebraData& alg;
  const Field& field() const { return alg.field(); }
  QuatElem elem(Elem c) const { return alg.scalar(c); }
  std::optional<QuatElem> var(const std::string& name) const {
    if (name == "T") return alg.from_poly(Poly::T(alg.field()));
    if (name == "i") return alg.basis(1);
    if (name == "j") return alg.basis(2);
    if (name == "k") return alg.basis(3);
    return std::nullopt;
  }
  QuatElem add(const QuatElem& a, const QuatElem& b) const { return alg.add(a, b); }
  QuatElem sub(const QuatElem& a, const QuatElem& b) const { return alg.sub(a, b); }
  QuatElem neg(const QuatElem& a) const { return alg.sub(alg.zero(), a); }
  QuatElem mul(const QuatElem& a, const QuatElem& b) const { return alg.mul(a, b); }
  QuatElem pow(const QuatElem& a, long long k) const {
    if (k < 0 && !alg.is_unit(a)) throw InvalidInput("nrd not in F_q^*");
    return alg.pow(a, k);
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Elem parse_elem(const Field& f, std::string_view s) {
  const Poly p = parse_poly(f, s);
  if (p.degree() > 0) throw InvalidInput("'" + std::string(s) + "' is not a field element");
  return p.coeff(0);
}

std::string format_elem(const Field& f, Elem a) { return f.to_string(a); }

Poly parse_poly(const Field& f, std::string_view s) {
  if (trim(s).empty()) throw InvalidInput("empty polynomial");
  PolyRing ring{f};
  return Parser<PolyRing>(ring, s).parse();
}

std::vector<Poly> parse_poly_list(const Field& f, std::string_view s) {
  std::vector<Poly> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && (s[i] == '[' || s[i] == '(')) ++depth;
    if (i < s.size() && (s[i] == ']' || s[i] == ')')) --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.push_back(parse_poly(f, s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::string format_poly(const Poly& p) { return p.to_string(); }

Vertex parse_vertex(const Field& f, std::string_view s0) {
  const std::string_view s = trim(s0);
  const std::string whole(s0);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw InvalidInput("vertex must look like '(n; g)': '" + whole + "'");
  }
  const std::string_view body = s.substr(1, s.size() - 2);
  const std::size_t semi = body.find(';');
  if (semi == std::string_view::npos) {
    throw InvalidInput("vertex is missing ';': '" + whole + "'");
  }
  const std::string ns(trim(body.substr(0, semi)));
  long long n = 0;
  try {
    const bool neg = !ns.empty() && ns[0] == '-';
    n = to_int(ns.substr(neg ? 1 : 0));
    if (neg) n = -n;
  } catch (const InvalidInput&) {
    throw InvalidInput("bad vertex level '" + ns + "' in '" + whole + "'");
  }
  const std::string_view gs = trim(body.substr(semi + 1));
  if (gs.empty()) throw InvalidInput("vertex is missing g: '" + whole + "'");
  LaurentRing ring{f};
  const auto terms = Parser<LaurentRing>(ring, gs).parse();
  if (terms.empty()) return Vertex(static_cast<int>(n));
  const int v = terms.begin()->first;
  const int top = terms.rbegin()->first;
  std::vector<Elem> coeffs(top - v + 1, 0);
  for (const auto& [k, c] : terms) coeffs[k - v] = c;
  return Vertex(static_cast<int>(n), v, std::move(coeffs));
}

std::string format_vertex(const Field& f, const Vertex& v) {
  std::ostringstream os;
  os << '(' << v.n() << "; ";
  if (v.g_is_zero()) {
    os << "0)";
    return os.str();
  }
  bool first = true;
  const auto& c = v.g_coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const int k = v.g_valuation() + static_cast<int>(i);
    if (!first) os << '+';
    first = false;
    if (k == 0) {
      os << f.to_string(c[i]);
      continue;
    }
    if (c[i] != f.one()) os << f.to_string(c[i]) << '*';
    os << "pi";
    if (k != 1) os << '^' << k;
  }
  os << ')';
  return os.str();
}

QuatElem parse_quat(const AlgebraData& alg, std::string_view s) {
  if (trim(s).empty()) throw InvalidInput("empty quaternion");
  QuatRing ring{alg};
  return Parser<QuatRing>(ring, s).parse();
}

std::string format_quat(const QuatElem& x) {
  static const char* kNames[4] = {"", "i", "j", "k"};
  std::string out;
  for (int a = 0; a < 4; ++a) {
    const Poly& p = x.c[a];
    if (p.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string ps = p.to_string();
    const bool simple = ps.find('+') == std::string::npos;
    if (a == 0) {
      out += simple ? ps : "(" + ps + ")";
    } else if (ps == "1") {
      out += kNames[a];
    } else {
      out += (simple ? ps : "(" + ps + ")") + "*" + kNames[a];
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_word(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += '*';
    out += p.names.at(l.gen);
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

}  // namespace quatgraph
