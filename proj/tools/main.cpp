// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "xorsat/cli.hpp"

int main(int argc, char** argv) { return xorsat::run_cli(argc, argv, std::cout, std::cerr); }
