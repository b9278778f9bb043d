// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace quatgraph {

// Raised when a Laurent value is zero at its precision but a nonzero leading
// term is needed. Callers retry with more precision.
class InsufficientPrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: reducible primes, odd ramification set, malformed text.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define QG_CHECK(cond, msg)                                              \
  do {                                                                   \
    if (!(cond)) {                                                       \
      throw ::quatgraph::InternalError(std::string(__FILE__) + ":" +     \
                                       std::to_string(__LINE__) + ": " + \
                                       (msg));                           \
    }                                                                    \
  } while (0)

}  // namespace quatgraph
