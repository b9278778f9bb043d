// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "quatgraph/quotient.hpp"

namespace quatgraph {

inline constexpr int kGraphFormatVersion = 1;

// Deterministic JSON artifact. Loading rebuilds the algebra from q, the
// primes and the stored alpha, then checks epsilon and nu against it.
std::string graph_to_json(const QuotientGraph& g);
QuotientGraph graph_from_json(const std::string& text);

// Graphviz: stable vertices filled, terminal vertices open, paired edges
// annotated with their generator names.
std::string graph_to_dot(const QuotientGraph& g);

// Plain-text summary; the report is optional.
std::string graph_summary(const QuotientGraph& g, const StructureReport* report);

}  // namespace quatgraph
