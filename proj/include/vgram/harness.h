//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef VGRAM_HARNESS_H_
#define VGRAM_HARNESS_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vgram/chem.h"
#include "vgram/derivation.h"
#include "vgram/error.h"
#include "vgram/grammar.h"
#include "vgram/graph.h"

namespace vgram {

enum class Representation { kSmiles, kSelfies };

std::string_view representation_name(Representation rep);

// Character set SMILES strings are mutated over.
inline constexpr std::string_view kSmilesMutationAlphabet =
    "CNOFcno-=#()123456789%";

// splitmix64 of (seed, index); seeds the generator of trial `index`.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Replaces k distinct positions, chosen uniformly without replacement, by
// uniform draws from `alphabet` minus the token being replaced, so exactly k
// positions change. Throws Error(kInvalidInput) if k is negative or exceeds
// the length, or if the alphabet offers no replacement.
template <class T>
std::vector<T> mutate_string(std::vector<T> tokens, std::span<const T> alphabet,
                             int k, std::uint64_t seed) {
  if (k < 0 || static_cast<std::size_t>(k) > tokens.size())
    throw Error(ErrorCategory::kInvalidInput,
                "mutation count must lie in 0..length");
  if (k == 0)
    return tokens;
  if (alphabet.empty())
    throw Error(ErrorCategory::kInvalidInput, "empty mutation alphabet");

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> positions(tokens.size());
  std::iota(positions.begin(), positions.end(), std::size_t { 0 });
  // Partial Fisher-Yates: the first k entries are a uniform k-subset.
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, positions.size() - 1);
    std::swap(positions[i], positions[pick(rng)]);
  }
  for (int i = 0; i < k; ++i) {
    T &token = tokens[positions[i]];
    const auto self = std::find(alphabet.begin(), alphabet.end(), token);
    const std::size_t choices =
        alphabet.size() - (self != alphabet.end() ? 1 : 0);
    if (choices == 0)
      throw Error(ErrorCategory::kInvalidInput,
                  "mutation alphabet has no replacement token");
    std::uniform_int_distribution<std::size_t> draw(0, choices - 1);
    std::size_t pick = draw(rng);
    if (self != alphabet.end()
        && pick >= static_cast<std::size_t>(self - alphabet.begin()))
      ++pick;
    token = alphabet[pick];
  }
  return tokens;
}

std::string mutate_smiles(std::string_view smiles, int k, std::uint64_t seed);
SymbolString mutate_symbols(const SymbolString &symbols,
                            const GrammarSpec &grammar, int k,
                            std::uint64_t seed);

struct MutationReport {
  Representation rep = Representation::kSelfies;
  int k = 0;
  int trials = 0;
  int valid = 0;
  double rate = 0.0;
  // Distinct canonical forms among valid results.
  int unique = 0;
  std::uint64_t seed = 0;
};

// `start` is SMILES text or bracketed symbol text depending on `rep`.
// SELFIES results are checked with validate_molecule against the grammar's
// valence table. Throws Error(kInvalidInput) if `start` itself is invalid.
// Results do not depend on `workers`.
MutationReport mutation_experiment(std::string_view start, Representation rep,
                                   int k, int trials, std::uint64_t seed,
                                   const GrammarSpec &grammar = chem_grammar(),
                                   int workers = 1);

using GraphValidator = std::function<bool(const LabeledGraph &)>;

// validate_molecule with the grammar's own valence table.
GraphValidator molecule_validator(const GrammarSpec &grammar);
// validate_experiment.
GraphValidator experiment_validator();

struct SamplingReport {
  int count = 0;
  int min_len = 0;
  int max_len = 0;
  int valid = 0;
  double rate = 0.0;
  // Distinct canonical forms among valid graphs of at most
  // kCanonicalSizeLimit vertices.
  int unique = 0;
  std::uint64_t seed = 0;
};

// Random string of uniform length in [min_len, max_len] with uniform symbols.
SymbolString random_symbols(const GrammarSpec &grammar, int min_len,
                            int max_len, std::mt19937_64 &rng);

// Decodes `count` random strings. count == 0 yields an empty report.
SamplingReport sample_random(const GrammarSpec &grammar, int min_len,
                             int max_len, int count, std::uint64_t seed,
                             const GraphValidator &validator, int workers = 1);

std::string report_json(const MutationReport &r);
std::string report_text(const MutationReport &r);
std::string report_json(const SamplingReport &r);
std::string report_text(const SamplingReport &r);

// Rows = max length, columns = alphabet size, one 1 per row; padding rows
// select the Nop column.
struct OneHotMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> cells;

  std::uint8_t at(int r, int c) const {
    return cells[static_cast<std::size_t>(r) * cols + c];
  }
};

// Throws Error(kInvalidInput) if |s| > max_len or the grammar has no Nop.
OneHotMatrix to_one_hot(std::span<const int> s, int max_len,
                        const GrammarSpec &grammar = chem_grammar());
// Trailing Nop rows are dropped. Throws Error(kMalformedMatrix).
SymbolString from_one_hot(const OneHotMatrix &m);

// Headerless CSV, one matrix row per line.
std::string one_hot_csv(const OneHotMatrix &m);
// Alphabet names in column order, one per line.
std::string one_hot_alphabet(const GrammarSpec &grammar);
// Inverse of one_hot_csv; `rows` lines form one matrix. Throws
// Error(kMalformedMatrix).
OneHotMatrix parse_one_hot_csv(std::string_view csv);

// MDMA, CNC(C)CC1=CC=C2OCOC2=C1, built atom by atom.
LabeledGraph mdma_graph();

}  // namespace vgram

#endif  // VGRAM_HARNESS_H_
