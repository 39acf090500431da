// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HILBERT_CLI_HPP
#define HILBERT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbert {

/// Command-line front door, callable in-process for testing.
/// Exit codes: 0 success / certified, 1 input or usage error,
/// 2 certified negative (e.g. not unitary under --expect-unitary).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbert

#endif  // HILBERT_CLI_HPP
