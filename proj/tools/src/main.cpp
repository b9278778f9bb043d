// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "quatgraph_cli/cli.hpp"

int main(int argc, char** argv) {
  return quatgraph::cli::run(argc, argv, std::cout, std::cerr);
}
