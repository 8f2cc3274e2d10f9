//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/chem.h"

#include <algorithm>
#include <set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "vgram/derive.h"
#include "vgram/error.h"

namespace vgram {

ValenceTable::ValenceTable(std::vector<std::pair<std::string, int>> entries)
    : entries_(std::move(entries)) {
  std::set<std::string, std::less<>> seen;
  for (const auto &[element, valence]: entries_) {
    if (element.empty())
      throw Error(ErrorCategory::kInvalidInput, "empty element symbol");
    if (!seen.insert(element).second)
      throw Error(ErrorCategory::kInvalidInput,
                  fmt::format("duplicate element {}", element));
    if (valence < 1)
      throw Error(ErrorCategory::kInvalidInput,
                  fmt::format("valence of {} must be >= 1", element));
  }
}

ValenceTable ValenceTable::core() {
  return ValenceTable({ { "C", 4 }, { "N", 3 }, { "O", 2 }, { "F", 1 } });
}

ValenceTable ValenceTable::parse(std::string_view text) {
  std::vector<std::pair<std::string, int>> entries;
  for (VertexType &t: TypeSpec::parse(text).types)
    entries.emplace_back(std::move(t.label), t.max_degree);
  return ValenceTable(std::move(entries));
}

ValenceTable ValenceTable::from_json(std::string_view json_text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCategory::kInvalidInput,
                fmt::format("valence table: {}", e.what()));
  }
  if (!doc.is_object())
    throw Error(ErrorCategory::kInvalidInput,
                "valence table must be a JSON object");

  std::vector<std::pair<std::string, int>> entries;
  for (const auto &[key, value]: doc.items()) {
    if (!value.is_number_integer())
      throw Error(ErrorCategory::kInvalidInput,
                  fmt::format("valence of {} is not an integer", key));
    entries.emplace_back(key, value.get<int>());
  }
  return ValenceTable(std::move(entries));
}

ValenceTable ValenceTable::from_grammar(const GrammarSpec &spec) {
  std::vector<std::pair<std::string, int>> entries;
  for (const TypeDef &t: spec.types)
    entries.emplace_back(t.label, t.max_degree);
  return ValenceTable(std::move(entries));
}

std::optional<int> ValenceTable::max_valence(std::string_view element) const {
  for (const auto &[e, v]: entries_) {
    if (e == element)
      return v;
  }
  return std::nullopt;
}

GrammarSpec build_chem_grammar(const ValenceTable &table) {
  if (table.empty())
    throw Error(ErrorCategory::kInvalidInput, "valence table is empty");

  TypeSpec types;
  for (const auto &[element, valence]: table.entries())
    types.types.push_back({ element, valence });

  // No quadruple bonds; ring orders follow the bond cap.
  const int cap = std::min(3, types.max_degree());
  return derive_grammar(types,
                        { .multiplicity_cap = cap, .ring_orders = cap });
}

const GrammarSpec &chem_grammar() {
  static const GrammarSpec grammar = build_chem_grammar(ValenceTable::core());
  return grammar;
}

MoleculeReport validate_molecule(const LabeledGraph &g,
                                 const ValenceTable &table) {
  MoleculeReport report;
  report.implicit_hydrogens.resize(g.num_vertices(), 0);

  std::vector<int> used(g.num_vertices(), 0);
  std::set<std::pair<int, int>> pairs;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge &edge = g.edge(e);
    if (edge.u == edge.v) {
      report.violations.push_back(
          { ViolationKind::kSelfLoop, edge.u, 0, 0 });
      continue;
    }
    if (!pairs.insert(std::minmax(edge.u, edge.v)).second)
      report.violations.push_back(
          { ViolationKind::kDuplicateBond, std::min(edge.u, edge.v), 0, 0 });
    used[edge.u] += edge.order;
    used[edge.v] += edge.order;
  }

  for (int v = 0; v < g.num_vertices(); ++v) {
    const std::string &element = g.vertex(v).label;
    std::optional<int> max = table.max_valence(element);
    if (!max)
      throw Error(ErrorCategory::kUnknownElement,
                  fmt::format("element {} (atom {}) is not in the valence "
                              "table",
                              element, v),
                  static_cast<std::size_t>(v));
    if (used[v] > *max)
      report.violations.push_back(
          { ViolationKind::kValence, v, used[v], *max });
    report.implicit_hydrogens[v] = std::max(0, *max - used[v]);
  }

  report.valid = report.violations.empty();
  return report;
}

}  // namespace vgram
