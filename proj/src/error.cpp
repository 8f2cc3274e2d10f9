//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/error.h"

namespace vgram {

std::string_view category_name(ErrorCategory category) {
  switch (category) {
  case ErrorCategory::kInvalidInput:
    return "invalid input";
  case ErrorCategory::kSymbolRange:
    return "symbol out of range";
  case ErrorCategory::kUnknownToken:
    return "unknown token";
  case ErrorCategory::kSyntax:
    return "syntax error";
  case ErrorCategory::kUnmatchedBranch:
    return "unmatched parenthesis";
  case ErrorCategory::kUnmatchedRingBond:
    return "unmatched ring bond";
  case ErrorCategory::kRingBondConflict:
    return "conflicting ring bond";
  case ErrorCategory::kUnsupported:
    return "unsupported character";
  case ErrorCategory::kDuplicateBond:
    return "duplicate bond";
  case ErrorCategory::kSelfLoop:
    return "self loop";
  case ErrorCategory::kValence:
    return "valence violation";
  case ErrorCategory::kAromaticity:
    return "aromaticity error";
  case ErrorCategory::kKekulization:
    return "kekulization failure";
  case ErrorCategory::kUnknownElement:
    return "unknown element";
  case ErrorCategory::kEncodingOverflow:
    return "encoding overflow";
  case ErrorCategory::kDisconnected:
    return "disconnected graph";
  case ErrorCategory::kSizeLimit:
    return "size limit exceeded";
  case ErrorCategory::kMalformedGrammar:
    return "malformed grammar";
  case ErrorCategory::kMalformedMatrix:
    return "malformed matrix";
  }
  return "error";
}

Error::Error(ErrorCategory category, const std::string &what,
             std::optional<std::size_t> position)
    : std::runtime_error(what), category_(category), position_(position) { }

}  // namespace vgram
