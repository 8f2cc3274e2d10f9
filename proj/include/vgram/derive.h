//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef VGRAM_DERIVE_H_
#define VGRAM_DERIVE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgram/grammar.h"

namespace vgram {

struct VertexType {
  std::string label;
  int max_degree = 0;
};

// Vertex types with their maximal degrees D_i.
struct TypeSpec {
  std::vector<VertexType> types;

  // M = max_i D_i (0 for an empty spec).
  int max_degree() const;

  // Parses "C:4,N:3,O:2,F:1". Throws Error(kInvalidInput).
  static TypeSpec parse(std::string_view text);
};

struct DeriveOptions {
  // Largest edge multiplicity ever realized; defaults to M.
  std::optional<int> multiplicity_cap;
  // Number of ring symbols; ring symbol k closes rings of order up to k.
  int ring_orders = 1;
};

// Builds the complete grammar for `types`:
//
//  * [nop] at index 0,
//  * one vertex symbol per type and requested multiplicity 1..D_i,
//  * M - 1 branch symbols ([Branch], [=Branch], ...),
//  * `ring_orders` ring symbols ([Ring], [=Ring], ...),
//
// with r = M. Throws Error(kInvalidInput) for an empty or malformed spec.
GrammarSpec derive_grammar(const TypeSpec &types,
                           const DeriveOptions &options = {});

struct RuleCounts {
  int vertex_rules = 0;  // n
  int branch_rules = 0;  // m
  int ring_rules = 0;    // p
  int max_state = 0;     // r
  // Cells in the table plus the number row.
  int total = 0;

  bool operator==(const RuleCounts &) const = default;
};

RuleCounts rule_counts(const GrammarSpec &spec);

}  // namespace vgram

#endif  // VGRAM_DERIVE_H_
