// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace maform {

// Runs the embedded consistency suite, printing one line per check.
// Returns true when every check passes.
bool run_selftest(std::ostream& out);

}  // namespace maform
