// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PI2_TOOLS_CLI_HPP
#define PI2_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pi2::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // rule refuted, derivation rejected, "no" answer
inline constexpr int kInputError = 2;

// Runs `pi2 <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pi2::cli

#endif  // PI2_TOOLS_CLI_HPP
