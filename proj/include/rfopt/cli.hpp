// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace rfopt::cli {

// Dispatches the rfopt subcommands. Exit code 0 on success, 1 on domain
// errors, 2 on usage errors.
int run(int argc, const char* const* argv);

}  // namespace rfopt::cli
