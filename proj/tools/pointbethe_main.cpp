// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "pointbethe/cli/run.hpp"

#include <iostream>

int main(int argc, char** argv) { return pointbethe::cli::main_entry(argc, argv, std::cout, std::cerr); }
