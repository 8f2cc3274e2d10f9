//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef VGRAM_GRAMMAR_JSON_H_
#define VGRAM_GRAMMAR_JSON_H_

#include <string>
#include <string_view>

#include "vgram/grammar.h"

namespace vgram {

inline constexpr int kGrammarFormatVersion = 1;

// {"version", "r", "types", "alphabet", "productions"}; productions are a
// dense array of (r + 1) rows with one tagged cell per symbol. Output is
// deterministic, so dump(load(dump(g))) == dump(g) byte for byte.
std::string grammar_to_json(const GrammarSpec &spec);

// Throws Error(kMalformedGrammar) for syntax or schema errors. The result is
// not validated; call validate_grammar.
GrammarSpec grammar_from_json(std::string_view text);

// Aligned rule table for people.
std::string grammar_table(const GrammarSpec &spec);

}  // namespace vgram

#endif  // VGRAM_GRAMMAR_JSON_H_
