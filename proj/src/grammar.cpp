//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/grammar.h"

#include <algorithm>
#include <set>
#include <string>

#include <fmt/format.h>

#include "vgram/error.h"

namespace vgram {

std::optional<int> GrammarSpec::find_symbol(std::string_view name) const {
  for (const SymbolDef &sym: alphabet) {
    if (sym.name == name)
      return sym.index;
  }
  return std::nullopt;
}

int symbol_number(const GrammarSpec &spec, std::string_view symbol) {
  std::optional<int> idx = spec.find_symbol(symbol);
  if (!idx)
    throw Error(ErrorCategory::kUnknownToken,
                fmt::format("symbol {} is not in the alphabet", symbol));
  return spec.alphabet[*idx].value;
}

std::string bond_prefix(int multiplicity) {
  switch (multiplicity) {
  case 1:
    return "";
  case 2:
    return "=";
  case 3:
    return "#";
  case 4:
    return "$";
  default:
    return fmt::format("{}*", multiplicity);
  }
}

namespace {

class Checker {
public:
  explicit Checker(const GrammarSpec &spec): spec_(spec) { }

  std::vector<GrammarViolation> run() {
    check_header();
    if (!table_ok_)
      return std::move(out_);

    for (int j = 0; j < spec_.num_states(); ++j)
      for (int s = 0; s < spec_.num_symbols(); ++s)
        check_cell(j, s);
    return std::move(out_);
  }

private:
  template <class... Args>
  void fail(int state, int symbol, fmt::format_string<Args...> f,
            Args &&...args) {
    out_.push_back(
        { state, symbol, fmt::format(f, std::forward<Args>(args)...) });
  }

  void check_header() {
    if (spec_.max_state < 1)
      fail(-1, -1, "max edge multiplicity r must be at least 1, got {}",
           spec_.max_state);

    for (std::size_t t = 0; t < spec_.types.size(); ++t) {
      if (spec_.types[t].max_degree < 1)
        fail(-1, -1, "type {} ({}) has max degree {} < 1", t,
             spec_.types[t].label, spec_.types[t].max_degree);
    }

    std::set<std::string> names;
    for (int i = 0; i < spec_.num_symbols(); ++i) {
      const SymbolDef &sym = spec_.alphabet[i];
      if (sym.index != i)
        fail(-1, i, "symbol {} stored at position {} has index {}", sym.name,
             i, sym.index);
      if (sym.name.empty())
        fail(-1, i, "symbol at position {} has an empty name", i);
      else if (!names.insert(sym.name).second)
        fail(-1, i, "duplicate symbol name {}", sym.name);
      if (sym.value < 0)
        fail(-1, i, "symbol {} has negative numeric value", sym.name);

      switch (sym.kind) {
      case SymbolKind::kNop:
        if (i != 0)
          fail(-1, i, "nop symbol {} must sit at index 0", sym.name);
        break;
      case SymbolKind::kVertex:
        if (sym.type_id < 0
            || sym.type_id >= static_cast<int>(spec_.types.size()))
          fail(-1, i, "vertex symbol {} refers to unknown type {}", sym.name,
               sym.type_id);
        [[fallthrough]];
      case SymbolKind::kBranch:
      case SymbolKind::kRing:
        if (sym.order < 1)
          fail(-1, i, "symbol {} has order {} < 1", sym.name, sym.order);
        break;
      }
    }

    const std::size_t expected = static_cast<std::size_t>(spec_.num_states())
                                 * spec_.alphabet.size();
    if (spec_.max_state < 0 || spec_.productions.size() != expected) {
      fail(-1, -1, "table size mismatch: expected {} cells, found {}",
           spec_.max_state < 0 ? 0 : expected, spec_.productions.size());
      table_ok_ = false;
    }
  }

  bool valid_type(int type_id) const {
    return type_id >= 0 && type_id < static_cast<int>(spec_.types.size());
  }

  void check_cell(int j, int s) {
    const SymbolDef &sym = spec_.alphabet[s];
    const Production &p = spec_.production(j, s);
    const int r = spec_.max_state;

    switch (p.kind) {
    case ProductionKind::kEpsilon:
      return;

    case ProductionKind::kVertex:
    case ProductionKind::kTerminal: {
      if (sym.kind != SymbolKind::kVertex) {
        fail(j, s, "vertex production under non-vertex symbol {}", sym.name);
        return;
      }
      if (p.type_id != sym.type_id || !valid_type(p.type_id)) {
        fail(j, s, "production type {} does not match symbol type {}",
             p.type_id, sym.type_id);
        return;
      }
      const int degree = spec_.types[p.type_id].max_degree;
      if (j == 0 && p.bond_order != 0)
        fail(j, s, "X_0 has no previous vertex, bond order must be 0, got {}",
             p.bond_order);
      if (j > 0 && (p.bond_order < 1 || p.bond_order > j))
        fail(j, s, "bond order {} outside 1..{}", p.bond_order, j);
      if (p.bond_order > sym.order)
        fail(j, s, "bond order {} exceeds requested multiplicity {}",
             p.bond_order, sym.order);
      if (p.bond_order > degree)
        fail(j, s, "bond order {} exceeds max degree {}", p.bond_order,
             degree);
      if (p.kind == ProductionKind::kVertex) {
        if (p.next_state < 1 || p.next_state > r)
          fail(j, s, "successor state X_{} outside 1..{}", p.next_state, r);
        else if (p.next_state > degree - p.bond_order)
          fail(j, s, "successor X_{} exceeds remaining capacity {}",
               p.next_state, degree - p.bond_order);
      }
      return;
    }

    case ProductionKind::kBranch:
      if (sym.kind != SymbolKind::kBranch) {
        fail(j, s, "branch production under non-branch symbol {}", sym.name);
        return;
      }
      if (j < 2)
        fail(j, s, "branch production in state X_{} (needs j >= 2)", j);
      if (p.branch_state < 0 || p.branch_state > j - 1)
        fail(j, s, "branch start state X_{} outside 0..{}", p.branch_state,
             j - 1);
      if (p.next_state < 0 || p.branch_state + p.next_state > j)
        fail(j, s, "branch start X_{} plus successor X_{} exceed X_{}",
             p.branch_state, p.next_state, j);
      return;

    case ProductionKind::kRing:
      if (sym.kind != SymbolKind::kRing) {
        fail(j, s, "ring production under non-ring symbol {}", sym.name);
        return;
      }
      if (j < 1)
        fail(j, s, "ring production in state X_0");
      if (p.bond_order < 1 || p.bond_order > sym.order
          || p.bond_order > r)
        fail(j, s, "ring order {} outside 1..{}", p.bond_order,
             std::min(sym.order, r));
      return;
    }
  }

  const GrammarSpec &spec_;
  std::vector<GrammarViolation> out_;
  bool table_ok_ = true;
};

}  // namespace

std::vector<GrammarViolation> validate_grammar(const GrammarSpec &spec) {
  return Checker(spec).run();
}

}  // namespace vgram
