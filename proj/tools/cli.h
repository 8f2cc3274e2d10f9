//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef VGRAM_TOOLS_CLI_H_
#define VGRAM_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace vgram::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRecordFailed = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming the default grammar (built-in name or path).
inline constexpr const char *kGrammarEnv = "VGRAM_GRAMMAR";

// args excludes the program name.
int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err);

}  // namespace vgram::cli

#endif  // VGRAM_TOOLS_CLI_H_
