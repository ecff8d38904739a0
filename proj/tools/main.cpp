// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rfopt/cli.hpp"

int main(int argc, char** argv) { return rfopt::cli::run(argc, argv); }
