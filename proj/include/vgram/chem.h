//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef VGRAM_CHEM_H_
#define VGRAM_CHEM_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vgram/grammar.h"
#include "vgram/graph.h"

namespace vgram {

// Element symbol -> maximum valence, in insertion order.
class ValenceTable {
public:
  ValenceTable() = default;
  // Throws Error(kInvalidInput) on duplicates or valences < 1.
  explicit ValenceTable(std::vector<std::pair<std::string, int>> entries);

  // {C:4, N:3, O:2, F:1}
  static ValenceTable core();
  // "C:4,N:3,O:2,F:1"
  static ValenceTable parse(std::string_view text);
  // {"C": 4, "N": 3}; key order is preserved.
  static ValenceTable from_json(std::string_view json_text);
  static ValenceTable from_grammar(const GrammarSpec &spec);

  std::optional<int> max_valence(std::string_view element) const;
  const std::vector<std::pair<std::string, int>> &entries() const {
    return entries_;
  }
  bool empty() const { return entries_.empty(); }

private:
  std::vector<std::pair<std::string, int>> entries_;
};

// Chemistry grammar: every element gets vertex symbols for multiplicities
// 1..D, bonds are capped at 3 and rings of order 1..3 are available.
// Throws Error(kInvalidInput) for an empty table.
GrammarSpec build_chem_grammar(const ValenceTable &table);

// Grammar for the core table, built once.
const GrammarSpec &chem_grammar();

enum class ViolationKind { kValence, kSelfLoop, kDuplicateBond };

struct MoleculeViolation {
  ViolationKind kind = ViolationKind::kValence;
  int atom = -1;
  int used = 0;
  int max = 0;
};

struct MoleculeReport {
  // max valence - used valence, clamped at 0.
  std::vector<int> implicit_hydrogens;
  bool valid = true;
  std::vector<MoleculeViolation> violations;
};

// Checks valences against `table` (not the graph's stored capacities).
// Throws Error(kUnknownElement) for labels missing from the table.
MoleculeReport validate_molecule(const LabeledGraph &g,
                                 const ValenceTable &table);

inline constexpr int kCanonicalSizeLimit = 64;

// Isomorphism-invariant text for a labeled multigraph: equal strings iff the
// graphs are isomorphic (labels and edge multiplicities respected).
// Throws Error(kSizeLimit) above kCanonicalSizeLimit vertices.
std::string canonical_form(const LabeledGraph &g);

}  // namespace vgram

#endif  // VGRAM_CHEM_H_
