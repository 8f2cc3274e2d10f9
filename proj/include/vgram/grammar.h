//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef VGRAM_GRAMMAR_H_
#define VGRAM_GRAMMAR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vgram {

enum class SymbolKind { kNop, kVertex, kBranch, kRing };

// One alphabet symbol ("rule vector" column of the production table).
struct SymbolDef {
  std::string name;
  SymbolKind kind = SymbolKind::kNop;
  // Vertex symbols only.
  int type_id = -1;
  // Requested edge multiplicity (vertex), bond class (branch) or ring order.
  int order = 0;
  // Position in the alphabet.
  int index = 0;
  // Number this symbol stands for when it follows a branch or ring symbol.
  // Equals `index` unless the grammar carries an explicit value table.
  int value = 0;

  bool operator==(const SymbolDef &) const = default;
};

enum class ProductionKind { kEpsilon, kVertex, kTerminal, kBranch, kRing };

// Content of one (state, symbol) cell.
//
//   kVertex   add a vertex of `type_id` bonded to the current vertex with
//             multiplicity `bond_order`, continue in `next_state`
//   kTerminal like kVertex, but the (sub-)derivation ends afterwards
//   kBranch   B(N, X_branch_state) X_next_state
//   kRing     R(N), at most `bond_order`; continues in X_{j - realized order}
struct Production {
  ProductionKind kind = ProductionKind::kEpsilon;
  int type_id = -1;
  int bond_order = 0;
  int branch_state = 0;
  int next_state = 0;

  static Production epsilon() { return {}; }
  static Production vertex(int type_id, int bond_order, int next_state) {
    return { ProductionKind::kVertex, type_id, bond_order, 0, next_state };
  }
  static Production terminal(int type_id, int bond_order) {
    return { ProductionKind::kTerminal, type_id, bond_order, 0, 0 };
  }
  static Production branch(int branch_state, int next_state) {
    return { ProductionKind::kBranch, -1, 0, branch_state, next_state };
  }
  static Production ring(int max_order) {
    return { ProductionKind::kRing, -1, max_order, 0, 0 };
  }

  bool operator==(const Production &) const = default;
};

struct TypeDef {
  std::string label;
  int max_degree = 0;

  bool operator==(const TypeDef &) const = default;
};

// Complete rule system: states X_0..X_r, alphabet and production table.
struct GrammarSpec {
  // r, the largest edge multiplicity a state may allow.
  int max_state = 0;
  std::vector<TypeDef> types;
  std::vector<SymbolDef> alphabet;
  // Row-major, (max_state + 1) rows of alphabet.size() cells.
  std::vector<Production> productions;

  int num_states() const { return max_state + 1; }
  int num_symbols() const { return static_cast<int>(alphabet.size()); }

  const Production &production(int state, int symbol) const {
    return productions[static_cast<std::size_t>(state) * alphabet.size()
                       + symbol];
  }
  Production &production(int state, int symbol) {
    return productions[static_cast<std::size_t>(state) * alphabet.size()
                       + symbol];
  }

  std::optional<int> find_symbol(std::string_view name) const;
  bool has_nop() const {
    return !alphabet.empty() && alphabet[0].kind == SymbolKind::kNop;
  }

  bool operator==(const GrammarSpec &) const = default;
};

struct GrammarViolation {
  // -1 when the violation is not tied to a table cell.
  int state = -1;
  int symbol = -1;
  std::string message;
};

// Returns every broken invariant; an empty result means the grammar is valid.
std::vector<GrammarViolation> validate_grammar(const GrammarSpec &spec);

// Numeric value of `symbol` (by name). Throws Error(kUnknownToken) when the
// symbol is not part of the alphabet.
int symbol_number(const GrammarSpec &spec, std::string_view symbol);

// Text prefix used for bond multiplicities in symbol names: "", "=", "#",
// "$", then "<n>*".
std::string bond_prefix(int multiplicity);

}  // namespace vgram

#endif  // VGRAM_GRAMMAR_H_
