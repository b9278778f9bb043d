// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quatgraph/quotient.hpp"

namespace quatgraph {

// Text syntax shared by the CLI and the JSON artifacts. Parsers accept sums,
// products, powers, parentheses and implicit multiplication; numbers are
// reduced mod p and "[c0,c1,...]" gives an element of F_q by coordinates.
// Every parser throws InvalidInput naming the offending token.

Elem parse_elem(const Field& f, std::string_view s);
std::string format_elem(const Field& f, Elem a);

// Polynomials in T, e.g. "T^2+2*T+3".
Poly parse_poly(const Field& f, std::string_view s);
// Comma-separated polynomials; commas inside brackets do not split.
std::vector<Poly> parse_poly_list(const Field& f, std::string_view s);
std::string format_poly(const Poly& p);

// "(n; g)" with g a sum of c*pi^k, e.g. "(2; 4*pi)", "(4; 0)".
Vertex parse_vertex(const Field& f, std::string_view s);
std::string format_vertex(const Field& f, const Vertex& v);

// "l1 + (l2)*i + (l3)*j + (l4)*k" in the order basis 1, i, j, k.
QuatElem parse_quat(const AlgebraData& alg, std::string_view s);
std::string format_quat(const QuatElem& x);

// "g_v1^2*g3^-1"; the empty word is "1".
std::string format_word(const Presentation& p, const Word& w);

}  // namespace quatgraph
