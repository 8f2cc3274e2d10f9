//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/derive.h"

#include <algorithm>
#include <charconv>
#include <set>

#include <fmt/format.h>

#include "vgram/error.h"

namespace vgram {

int TypeSpec::max_degree() const {
  int m = 0;
  for (const VertexType &t: types)
    m = std::max(m, t.max_degree);
  return m;
}

TypeSpec TypeSpec::parse(std::string_view text) {
  TypeSpec spec;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find(',', begin);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view item = text.substr(begin, end - begin);
    while (!item.empty() && item.front() == ' ')
      item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ')
      item.remove_suffix(1);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos || colon == 0)
      throw Error(ErrorCategory::kInvalidInput,
                  fmt::format("expected LABEL:DEGREE, got '{}'", item),
                  begin);

    std::string_view digits = item.substr(colon + 1);
    int degree = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), degree);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw Error(ErrorCategory::kInvalidInput,
                  fmt::format("bad degree in '{}'", item), begin + colon + 1);

    spec.types.push_back({ std::string(item.substr(0, colon)), degree });
    begin = end + 1;
  }
  return spec;
}

GrammarSpec derive_grammar(const TypeSpec &types,
                           const DeriveOptions &options) {
  if (types.types.empty())
    throw Error(ErrorCategory::kInvalidInput, "type spec is empty");

  std::set<std::string, std::less<>> labels;
  for (const VertexType &t: types.types) {
    if (t.label.empty()
        || t.label.find_first_of("[]") != std::string::npos)
      throw Error(ErrorCategory::kInvalidInput,
                  fmt::format("invalid vertex label '{}'", t.label));
    if (!labels.insert(t.label).second)
      throw Error(ErrorCategory::kInvalidInput,
                  fmt::format("duplicate vertex label '{}'", t.label));
    if (t.max_degree < 1)
      throw Error(ErrorCategory::kInvalidInput,
                  fmt::format("max degree of {} must be >= 1", t.label));
  }

  const int m = types.max_degree();
  const int cap = options.multiplicity_cap.value_or(m);
  if (cap < 1)
    throw Error(ErrorCategory::kInvalidInput,
                "multiplicity cap must be >= 1");
  if (options.ring_orders < 0)
    throw Error(ErrorCategory::kInvalidInput,
                "ring order count must be >= 0");

  GrammarSpec g;
  g.max_state = m;

  auto add_symbol = [&](std::string name, SymbolKind kind, int type_id,
                        int order) {
    const int index = g.num_symbols();
    g.alphabet.push_back(
        { std::move(name), kind, type_id, order, index, index });
  };

  add_symbol("[nop]", SymbolKind::kNop, -1, 0);
  for (std::size_t t = 0; t < types.types.size(); ++t) {
    const VertexType &vt = types.types[t];
    g.types.push_back({ vt.label, vt.max_degree });
    for (int gamma = 1; gamma <= vt.max_degree; ++gamma)
      add_symbol("[" + bond_prefix(gamma) + vt.label + "]",
                 SymbolKind::kVertex, static_cast<int>(t), gamma);
  }
  for (int l = 1; l <= m - 1; ++l)
    add_symbol("[" + bond_prefix(l) + "Branch]", SymbolKind::kBranch, -1, l);
  for (int o = 1; o <= options.ring_orders; ++o)
    add_symbol("[" + bond_prefix(o) + "Ring]", SymbolKind::kRing, -1, o);

  for (const SymbolDef &sym: g.alphabet) {
    if (std::count_if(g.alphabet.begin(), g.alphabet.end(),
                      [&](const SymbolDef &o) { return o.name == sym.name; })
        > 1)
      throw Error(ErrorCategory::kInvalidInput,
                  fmt::format("label produces clashing symbol {}", sym.name));
  }

  g.productions.resize(static_cast<std::size_t>(g.num_states())
                       * g.alphabet.size());
  for (int j = 0; j <= m; ++j) {
    for (const SymbolDef &sym: g.alphabet) {
      Production &cell = g.production(j, sym.index);
      switch (sym.kind) {
      case SymbolKind::kNop:
        break;

      case SymbolKind::kVertex: {
        const int degree = g.types[sym.type_id].max_degree;
        if (j == 0) {
          cell = Production::vertex(sym.type_id, 0, degree);
          break;
        }
        const int mu = std::min({ j, sym.order, cap });
        const int next = degree - mu;
        cell = next == 0 ? Production::terminal(sym.type_id, mu)
                         : Production::vertex(sym.type_id, mu, next);
        break;
      }

      case SymbolKind::kBranch:
        if (j >= 2) {
          const int start = std::min(sym.order, j - 1);
          cell = Production::branch(start, j - start);
        }
        break;

      case SymbolKind::kRing:
        if (j >= 1)
          cell = Production::ring(std::min({ sym.order, cap, m }));
        break;
      }
    }
  }
  return g;
}

RuleCounts rule_counts(const GrammarSpec &spec) {
  RuleCounts c;
  for (const SymbolDef &sym: spec.alphabet) {
    switch (sym.kind) {
    case SymbolKind::kVertex:
      ++c.vertex_rules;
      break;
    case SymbolKind::kBranch:
      ++c.branch_rules;
      break;
    case SymbolKind::kRing:
      ++c.ring_rules;
      break;
    case SymbolKind::kNop:
      break;
    }
  }
  c.max_state = spec.max_state;
  c.total = static_cast<int>(spec.productions.size()) + spec.num_symbols();
  return c;
}

}  // namespace vgram
