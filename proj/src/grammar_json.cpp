//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/grammar_json.h"

#include <algorithm>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "vgram/error.h"

namespace vgram {
namespace {

using Json = nlohmann::ordered_json;

std::string_view kind_name(SymbolKind k) {
  switch (k) {
  case SymbolKind::kNop:
    return "nop";
  case SymbolKind::kVertex:
    return "vertex";
  case SymbolKind::kBranch:
    return "branch";
  case SymbolKind::kRing:
    return "ring";
  }
  return "nop";
}

Json cell_to_json(const Production &p) {
  Json j;
  switch (p.kind) {
  case ProductionKind::kEpsilon:
    j["op"] = "epsilon";
    break;
  case ProductionKind::kVertex:
    j["op"] = "vertex";
    j["type"] = p.type_id;
    j["bond"] = p.bond_order;
    j["next"] = p.next_state;
    break;
  case ProductionKind::kTerminal:
    j["op"] = "terminal";
    j["type"] = p.type_id;
    j["bond"] = p.bond_order;
    break;
  case ProductionKind::kBranch:
    j["op"] = "branch";
    j["start"] = p.branch_state;
    j["next"] = p.next_state;
    break;
  case ProductionKind::kRing:
    j["op"] = "ring";
    j["max_order"] = p.bond_order;
    break;
  }
  return j;
}

[[noreturn]] void malformed(const std::string &what) {
  throw Error(ErrorCategory::kMalformedGrammar, what);
}

int get_int(const Json &obj, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer())
    malformed(fmt::format("missing integer field '{}'", key));
  return it->get<int>();
}

Production cell_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string())
    malformed("production cell needs an 'op' string");
  const std::string op = j["op"].get<std::string>();
  if (op == "epsilon")
    return Production::epsilon();
  if (op == "vertex")
    return Production::vertex(get_int(j, "type"), get_int(j, "bond"),
                              get_int(j, "next"));
  if (op == "terminal")
    return Production::terminal(get_int(j, "type"), get_int(j, "bond"));
  if (op == "branch")
    return Production::branch(get_int(j, "start"), get_int(j, "next"));
  if (op == "ring")
    return Production::ring(get_int(j, "max_order"));
  malformed(fmt::format("unknown production op '{}'", op));
}

}  // namespace

std::string grammar_to_json(const GrammarSpec &spec) {
  Json doc;
  doc["version"] = kGrammarFormatVersion;
  doc["r"] = spec.max_state;

  Json types = Json::array();
  for (const TypeDef &t: spec.types)
    types.push_back({ { "label", t.label }, { "max_degree", t.max_degree } });
  doc["types"] = std::move(types);

  Json alphabet = Json::array();
  for (const SymbolDef &s: spec.alphabet) {
    Json params = Json::object();
    if (s.kind == SymbolKind::kVertex)
      params["type"] = s.type_id;
    if (s.kind == SymbolKind::kVertex)
      params["multiplicity"] = s.order;
    else if (s.kind == SymbolKind::kBranch)
      params["class"] = s.order;
    else if (s.kind == SymbolKind::kRing)
      params["order"] = s.order;
    params["value"] = s.value;
    alphabet.push_back(
        { { "name", s.name }, { "kind", kind_name(s.kind) }, { "params", params } });
  }
  doc["alphabet"] = std::move(alphabet);

  Json rows = Json::array();
  for (int j = 0; j < spec.num_states(); ++j) {
    Json row = Json::array();
    for (int s = 0; s < spec.num_symbols(); ++s) {
      const std::size_t at =
          static_cast<std::size_t>(j) * spec.alphabet.size() + s;
      row.push_back(at < spec.productions.size()
                        ? cell_to_json(spec.productions[at])
                        : Json(nullptr));
    }
    rows.push_back(std::move(row));
  }
  doc["productions"] = std::move(rows);
  return doc.dump(2) + "\n";
}

GrammarSpec grammar_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    malformed(fmt::format("invalid JSON: {}", e.what()));
  }
  if (!doc.is_object())
    malformed("grammar document must be an object");

  const int version = get_int(doc, "version");
  if (version != kGrammarFormatVersion)
    malformed(fmt::format("unsupported grammar version {}", version));

  GrammarSpec spec;
  spec.max_state = get_int(doc, "r");
  if (spec.max_state < 0)
    malformed("'r' must be non-negative");

  if (!doc.contains("types") || !doc["types"].is_array())
    malformed("missing 'types' array");
  for (const Json &t: doc["types"]) {
    if (!t.is_object() || !t.contains("label") || !t["label"].is_string())
      malformed("type entries need a 'label' string");
    spec.types.push_back(
        { t["label"].get<std::string>(), get_int(t, "max_degree") });
  }

  if (!doc.contains("alphabet") || !doc["alphabet"].is_array())
    malformed("missing 'alphabet' array");
  for (const Json &a: doc["alphabet"]) {
    if (!a.is_object() || !a.contains("name") || !a["name"].is_string()
        || !a.contains("kind") || !a["kind"].is_string())
      malformed("alphabet entries need 'name' and 'kind' strings");
    SymbolDef s;
    s.name = a["name"].get<std::string>();
    s.index = static_cast<int>(spec.alphabet.size());
    const std::string kind = a["kind"].get<std::string>();
    const Json params = a.value("params", Json::object());
    if (!params.is_object())
      malformed("'params' must be an object");
    if (kind == "nop") {
      s.kind = SymbolKind::kNop;
    } else if (kind == "vertex") {
      s.kind = SymbolKind::kVertex;
      s.type_id = get_int(params, "type");
      s.order = get_int(params, "multiplicity");
    } else if (kind == "branch") {
      s.kind = SymbolKind::kBranch;
      s.order = get_int(params, "class");
    } else if (kind == "ring") {
      s.kind = SymbolKind::kRing;
      s.order = get_int(params, "order");
    } else {
      malformed(fmt::format("unknown symbol kind '{}'", kind));
    }
    s.value = params.contains("value") ? get_int(params, "value") : s.index;
    spec.alphabet.push_back(std::move(s));
  }

  if (!doc.contains("productions") || !doc["productions"].is_array())
    malformed("missing 'productions' array");
  for (const Json &row: doc["productions"]) {
    if (!row.is_array())
      malformed("production rows must be arrays");
    if (row.size() != spec.alphabet.size())
      malformed(fmt::format("production row has {} cells, alphabet has {}",
                            row.size(), spec.alphabet.size()));
    for (const Json &cell: row)
      spec.productions.push_back(cell_from_json(cell));
  }
  return spec;
}

namespace {

std::string cell_text(const GrammarSpec &spec, const Production &p) {
  auto label = [&](int type) {
    return type >= 0 && type < static_cast<int>(spec.types.size())
               ? spec.types[type].label
               : fmt::format("?{}", type);
  };
  switch (p.kind) {
  case ProductionKind::kEpsilon:
    return "ε";
  case ProductionKind::kVertex:
    return fmt::format("{}{} X{}", bond_prefix(std::max(p.bond_order, 1)),
                       label(p.type_id), p.next_state);
  case ProductionKind::kTerminal:
    return fmt::format("{}{}", bond_prefix(std::max(p.bond_order, 1)),
                       label(p.type_id));
  case ProductionKind::kBranch:
    return fmt::format("B(N,X{}) X{}", p.branch_state, p.next_state);
  case ProductionKind::kRing:
    return fmt::format("R{}(N)", p.bond_order);
  }
  return "?";
}

}  // namespace

std::string grammar_table(const GrammarSpec &spec) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header { "" };
  for (const SymbolDef &s: spec.alphabet)
    header.push_back(s.name);
  grid.push_back(std::move(header));
  for (int j = 0; j < spec.num_states(); ++j) {
    std::vector<std::string> row { fmt::format("X{}", j) };
    for (int s = 0; s < spec.num_symbols(); ++s)
      row.push_back(cell_text(spec, spec.production(j, s)));
    grid.push_back(std::move(row));
  }
  std::vector<std::string> numbers { "N" };
  for (const SymbolDef &s: spec.alphabet)
    numbers.push_back(std::to_string(s.value));
  grid.push_back(std::move(numbers));

  // Column widths in code points; "ε" is two bytes.
  auto width = [](const std::string &s) {
    std::size_t w = 0;
    for (unsigned char c: s)
      w += (c & 0xC0) != 0x80;
    return w;
  };
  std::vector<std::size_t> widths(grid.front().size(), 0);
  for (const auto &row: grid)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], width(row[c]));

  std::string out;
  for (const auto &row: grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size())
        out += std::string(widths[c] - width(row[c]) + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

}  // namespace vgram
