//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef VGRAM_CODEC_H_
#define VGRAM_CODEC_H_

#include <span>
#include <string>
#include <string_view>

#include "vgram/chem.h"
#include "vgram/derivation.h"
#include "vgram/grammar.h"
#include "vgram/graph.h"

namespace vgram {

// "[F][=C][=C][#N]" -> symbol indices. Throws Error(kUnknownToken) with the
// character offset of the first token that is not in the alphabet, and
// Error(kSyntax) for text outside brackets.
SymbolString tokenize(std::string_view text,
                      const GrammarSpec &grammar = chem_grammar());

std::string to_text(std::span<const int> symbols,
                    const GrammarSpec &grammar = chem_grammar());

// Never fails for in-range symbols; the result passes validate_molecule.
LabeledGraph decode(std::span<const int> symbols,
                    const GrammarSpec &grammar = chem_grammar());

// Decoded molecule as SMILES; an empty decode yields "".
std::string decode_to_smiles(std::span<const int> symbols,
                             const GrammarSpec &grammar = chem_grammar());

// Depth-first from vertex 0 with neighbors in index order. For each vertex
// the last tree child continues the chain and earlier children become
// branches; back edges become rings emitted at their later endpoint.
//
// Throws Error(kDisconnected), Error(kUnknownElement) for labels outside the
// grammar, Error(kValence) for invalid input, Error(kUnsupported) for bond
// orders without a matching symbol, and Error(kEncodingOverflow) when a
// branch length or ring distance does not fit a single number symbol.
SymbolString encode(const LabeledGraph &g,
                    const GrammarSpec &grammar = chem_grammar());

SymbolString encode_smiles(std::string_view smiles,
                           const GrammarSpec &grammar = chem_grammar());

}  // namespace vgram

#endif  // VGRAM_CODEC_H_
