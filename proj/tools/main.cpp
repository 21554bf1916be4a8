// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return pi2::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
