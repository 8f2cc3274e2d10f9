//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef VGRAM_SMILES_H_
#define VGRAM_SMILES_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vgram/chem.h"
#include "vgram/graph.h"

namespace vgram {

// Supported subset: organic atoms C N O F, aromatic c n o, bonds - = #,
// branches, ring closures 1-9 and %10-%99. Brackets, charges, stereo marks,
// dots and ':' are rejected.

struct SmilesToken {
  enum class Kind { kAtom, kBond, kBranchOpen, kBranchClose, kRingBond };

  Kind kind = Kind::kAtom;
  std::string element;
  bool aromatic = false;
  // kBond: 1..3.
  int bond_order = 0;
  // kRingBond: 1..99.
  int ring_id = 0;
  std::size_t position = 0;
};

// Throws Error(kUnsupported / kSyntax) with the offending position.
std::vector<SmilesToken> tokenize_smiles(std::string_view text);

// A graph whose aromatic bonds still carry the placeholder order 1.
struct AromaticGraph {
  LabeledGraph graph;
  std::vector<bool> aromatic_atoms;
  std::vector<bool> aromatic_bonds;
};

// Assigns double bonds to a perfect matching of the aromatic atoms that
// still have free valence. Throws Error(kAromaticity) for aromatic atoms
// outside aromatic rings and Error(kKekulization) when no matching exists.
LabeledGraph kekulize(AromaticGraph g);

// Parses and kekulizes; the result always passes validate_molecule.
// Throws Error with the category and character position of the problem.
LabeledGraph parse_smiles(std::string_view text,
                          const ValenceTable &table = ValenceTable::core());

bool is_valid_smiles(std::string_view text,
                     const ValenceTable &table = ValenceTable::core());

// Kekulé SMILES: depth-first from vertex 0, neighbors in index order, the
// last child continues the chain, ring digits reused lowest-first.
// Throws Error(kDisconnected) for disconnected or empty graphs.
std::string write_smiles(const LabeledGraph &g);

}  // namespace vgram

#endif  // VGRAM_SMILES_H_
