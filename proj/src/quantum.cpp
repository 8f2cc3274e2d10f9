//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/quantum.h"

#include <array>

#include <fmt/format.h>

#include "vgram/error.h"

namespace vgram {

const ComponentTable &ComponentTable::standard() {
  static const ComponentTable table = [] {
    ComponentTable t;
    t.entries_ = { { "SPDC", 2 }, { "BS", 4 }, { "Holo", 2 },
                   { "DP", 2 },   { "Ref", 2 }, { "Det", 1 } };
    return t;
  }();
  return table;
}

std::optional<int> ComponentTable::max_degree(std::string_view c) const {
  for (const auto &[name, degree]: entries_)
    if (name == c)
      return degree;
  return std::nullopt;
}

namespace {

GrammarSpec build_quantum_grammar() {
  const ComponentTable &table = ComponentTable::standard();
  GrammarSpec g;
  g.max_state = 3;
  for (const auto &[name, degree]: table.entries())
    g.types.push_back({ name, degree });

  constexpr std::array<int, 8> kValues { 1, 2, 3, 4, 5, 6, 8, 9 };
  const int num_types = static_cast<int>(g.types.size());
  for (int t = 0; t < num_types; ++t) {
    g.alphabet.push_back({ .name = "[" + g.types[t].label + "]",
                           .kind = SymbolKind::kVertex,
                           .type_id = t,
                           .order = 1,
                           .index = t,
                           .value = kValues[t] });
  }
  g.alphabet.push_back({ .name = "[Branch]",
                         .kind = SymbolKind::kBranch,
                         .order = 1,
                         .index = num_types,
                         .value = kValues[num_types] });
  g.alphabet.push_back({ .name = "[Ring]",
                         .kind = SymbolKind::kRing,
                         .order = 1,
                         .index = num_types + 1,
                         .value = kValues[num_types + 1] });

  // Successors from a fresh (X_0) position and after an incoming edge.
  constexpr std::array<int, 6> kRootNext { 2, 3, 1, 1, 1, 0 };
  constexpr std::array<int, 6> kNext { 1, 3, 1, 1, 1, 0 };
  const int det = num_types - 1;

  g.productions.resize(4 * g.alphabet.size());
  for (int j = 0; j <= 3; ++j) {
    const int bond = j == 0 ? 0 : 1;
    for (int t = 0; t < num_types; ++t) {
      g.production(j, t) =
          t == det ? Production::terminal(t, bond)
                   : Production::vertex(t, bond, j == 0 ? kRootNext[t]
                                                        : kNext[t]);
    }
    const int y = num_types;
    const int z = num_types + 1;
    g.production(j, y) =
        j >= 2 ? Production::branch(0, j - 1) : Production::epsilon();
    g.production(j, z) = j >= 1 ? Production::ring(1) : Production::epsilon();
  }
  return g;
}

}  // namespace

const GrammarSpec &quantum_grammar() {
  static const GrammarSpec spec = build_quantum_grammar();
  return spec;
}

ExperimentReport validate_experiment(const LabeledGraph &g) {
  const ComponentTable &table = ComponentTable::standard();
  ExperimentReport report;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const std::string &label = g.vertex(v).label;
    std::optional<int> max = table.max_degree(label);
    if (!max)
      throw Error(ErrorCategory::kUnknownElement,
                  fmt::format("unknown optical component '{}'", label));
    const int degree = g.bond_sum(v);
    if (degree > *max)
      report.violations.push_back({ v, degree, *max });
  }
  report.valid = report.violations.empty();
  return report;
}

}  // namespace vgram
