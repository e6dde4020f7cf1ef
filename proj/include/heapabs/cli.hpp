// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Exit codes:
//   0  success
//   1  check failed (invalid witness, no witness found)
//   2  input error (unreadable file, parse/schema/model error, invalid heap)
//   3  internal invariant breach

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace heapabs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternal = 3;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heapabs::cli
