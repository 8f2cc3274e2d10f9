//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef VGRAM_ERROR_H_
#define VGRAM_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vgram {

enum class ErrorCategory {
  kInvalidInput,
  kSymbolRange,
  kUnknownToken,
  kSyntax,
  kUnmatchedBranch,
  kUnmatchedRingBond,
  kRingBondConflict,
  kUnsupported,
  kDuplicateBond,
  kSelfLoop,
  kValence,
  kAromaticity,
  kKekulization,
  kUnknownElement,
  kEncodingOverflow,
  kDisconnected,
  kSizeLimit,
  kMalformedGrammar,
  kMalformedMatrix,
};

std::string_view category_name(ErrorCategory category);

// All recoverable failures of the library are reported through this type.
// `position` is a character (text inputs) or symbol (symbol strings) offset
// when one is meaningful.
class Error: public std::runtime_error {
public:
  Error(ErrorCategory category, const std::string &what,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCategory category() const noexcept { return category_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

private:
  ErrorCategory category_;
  std::optional<std::size_t> position_;
};

}  // namespace vgram

#endif  // VGRAM_ERROR_H_
