// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return multidet::cli::run(std::vector<std::string>(argv, argv + argc), std::cout,
                            std::cerr);
}
