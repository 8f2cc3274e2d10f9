//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/codec.h"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "vgram/error.h"
#include "vgram/smiles.h"

namespace vgram {

SymbolString tokenize(std::string_view text, const GrammarSpec &grammar) {
  SymbolString out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '[')
      throw Error(ErrorCategory::kSyntax,
                  fmt::format("expected '[' at position {}", i), i);
    const std::size_t close = text.find(']', i);
    if (close == std::string_view::npos)
      throw Error(ErrorCategory::kSyntax,
                  fmt::format("unterminated token at position {}", i), i);
    std::string_view name = text.substr(i, close - i + 1);
    std::optional<int> idx = grammar.find_symbol(name);
    if (!idx)
      throw Error(ErrorCategory::kUnknownToken,
                  fmt::format("unknown token {} at position {}", name, i), i);
    out.push_back(*idx);
    i = close + 1;
  }
  return out;
}

std::string to_text(std::span<const int> symbols, const GrammarSpec &grammar) {
  std::string out;
  for (int s: symbols) {
    if (s < 0 || s >= grammar.num_symbols())
      throw Error(ErrorCategory::kSymbolRange,
                  fmt::format("symbol index {} is outside the alphabet", s));
    out += grammar.alphabet[s].name;
  }
  return out;
}

LabeledGraph decode(std::span<const int> symbols, const GrammarSpec &grammar) {
  return derive_graph(grammar, symbols);
}

std::string decode_to_smiles(std::span<const int> symbols,
                             const GrammarSpec &grammar) {
  LabeledGraph g = decode(symbols, grammar);
  if (g.empty())
    return {};
  return write_smiles(g);
}

namespace {

class Encoder {
public:
  Encoder(const LabeledGraph &g, const GrammarSpec &grammar)
      : g_(g), grammar_(grammar) {
    for (const SymbolDef &sym: grammar.alphabet) {
      switch (sym.kind) {
      case SymbolKind::kVertex:
        vertex_sym_.try_emplace({ sym.type_id, sym.order }, sym.index);
        break;
      case SymbolKind::kBranch:
        branch_sym_.try_emplace(sym.order, sym.index);
        break;
      case SymbolKind::kRing:
        ring_sym_.try_emplace(sym.order, sym.index);
        break;
      case SymbolKind::kNop:
        break;
      }
      number_sym_.try_emplace(sym.value, sym.index);
    }
  }

  SymbolString run() {
    if (g_.empty())
      return {};
    if (!g_.is_connected())
      throw Error(ErrorCategory::kDisconnected,
                  "only connected graphs can be encoded");
    resolve_types();
    build_tree();
    try {
      return emit();
    } catch (const Error &e) {
      if (e.category() != ErrorCategory::kEncodingOverflow)
        throw;
    }
    // Retry with the longest subtree as the main chain so that only the
    // shorter ones need a branch length.
    for (std::vector<int> &kids: children_)
      std::stable_sort(kids.begin(), kids.end(),
                       [&](int a, int b) { return length_[a] < length_[b]; });
    return emit();
  }

private:
  void resolve_types() {
    types_.resize(g_.num_vertices());
    for (int v = 0; v < g_.num_vertices(); ++v) {
      const std::string &label = g_.vertex(v).label;
      auto it = std::find_if(grammar_.types.begin(), grammar_.types.end(),
                             [&](const TypeDef &t) { return t.label == label; });
      if (it == grammar_.types.end())
        throw Error(ErrorCategory::kUnknownElement,
                    fmt::format("vertex {} has label {} outside the grammar",
                                v, label),
                    static_cast<std::size_t>(v));
      types_[v] = static_cast<int>(it - grammar_.types.begin());

      int used = 0;
      for (int e: g_.incident_edges(v)) {
        const Edge &edge = g_.edge(e);
        if (edge.u == edge.v || g_.find_edge(v, g_.other_end(e, v)) != e)
          throw Error(ErrorCategory::kValence,
                      fmt::format("vertex {} has a self-loop or repeated "
                                  "edge",
                                  v),
                      static_cast<std::size_t>(v));
        used += edge.order;
      }
      if (used > it->max_degree)
        throw Error(ErrorCategory::kValence,
                    fmt::format("vertex {} ({}) uses {} > {}", v, label, used,
                                it->max_degree),
                    static_cast<std::size_t>(v));
    }
  }

  void build_tree() {
    const int n = g_.num_vertices();
    std::vector<std::vector<int>> nbrs(n);
    for (int v = 0; v < n; ++v) {
      for (int e: g_.incident_edges(v))
        nbrs[v].push_back(g_.other_end(e, v));
      std::sort(nbrs[v].begin(), nbrs[v].end());
    }

    pre_.assign(n, -1);
    parent_.assign(n, -1);
    children_.assign(n, {});
    rings_.assign(n, {});
    int timer = 0;
    std::vector<std::pair<int, std::size_t>> stack { { 0, 0 } };
    pre_[0] = timer++;
    while (!stack.empty()) {
      auto &[v, next] = stack.back();
      if (next == nbrs[v].size()) {
        stack.pop_back();
        continue;
      }
      const int w = nbrs[v][next++];
      if (pre_[w] == -1) {
        pre_[w] = timer++;
        parent_[w] = v;
        children_[v].push_back(w);
        stack.emplace_back(w, 0);
      } else if (w != parent_[v] && pre_[w] < pre_[v]) {
        rings_[v].push_back(w);
      }
    }
    for (auto &r: rings_)
      std::sort(r.begin(), r.end(),
                [&](int a, int b) { return pre_[a] < pre_[b]; });

    // Symbols per subtree, children first.
    std::vector<int> by_pre(n);
    for (int v = 0; v < n; ++v)
      by_pre[pre_[v]] = v;
    length_.assign(n, 0);
    for (auto it = by_pre.rbegin(); it != by_pre.rend(); ++it) {
      const int v = *it;
      int len = 1 + 2 * static_cast<int>(rings_[v].size());
      for (std::size_t i = 0; i < children_[v].size(); ++i) {
        len += length_[children_[v][i]];
        if (i + 1 < children_[v].size())
          len += 2;
      }
      length_[v] = len;
    }
  }

  int bond(int u, int v) const { return g_.edge(*g_.find_edge(u, v)).order; }

  int number(int value, const char *what, int v) const {
    auto it = number_sym_.find(value);
    if (value < 0 || it == number_sym_.end())
      throw Error(ErrorCategory::kEncodingOverflow,
                  fmt::format("{} {} at vertex {} does not fit one number "
                              "symbol (max {})",
                              what, value, v, number_sym_.rbegin()->first),
                  static_cast<std::size_t>(v));
    return it->second;
  }

  int vertex_symbol(int v, int gamma) const {
    auto it = vertex_sym_.find({ types_[v], gamma });
    // The symbol must realize exactly `gamma` once enough capacity is there.
    if (it == vertex_sym_.end()
        || grammar_.production(grammar_.max_state, it->second).bond_order
               != gamma)
      throw Error(ErrorCategory::kUnsupported,
                  fmt::format("no symbol bonds {} with multiplicity {}",
                              g_.vertex(v).label, gamma),
                  static_cast<std::size_t>(v));
    return it->second;
  }

  int ring_symbol(int v, int order) const {
    auto it = ring_sym_.find(order);
    if (it == ring_sym_.end()
        || grammar_.production(grammar_.max_state, it->second).bond_order
               < order)
      throw Error(ErrorCategory::kUnsupported,
                  fmt::format("no ring symbol of order {} (vertex {})", order,
                              v),
                  static_cast<std::size_t>(v));
    return it->second;
  }

  int branch_symbol(int v, int cls) const {
    auto it = branch_sym_.find(cls);
    if (it == branch_sym_.end())
      throw Error(ErrorCategory::kUnsupported,
                  fmt::format("no branch symbol of class {} (vertex {})", cls,
                              v),
                  static_cast<std::size_t>(v));
    return it->second;
  }

  SymbolString emit() {
    SymbolString out;
    out.reserve(length_[0]);
    // Derivation index of each emitted vertex.
    std::vector<int> index(g_.num_vertices(), -1);
    int emitted = 0;

    struct Task {
      int vertex;
      int bond;
    };
    std::vector<Task> tasks { { 0, 0 } };
    while (!tasks.empty()) {
      const Task t = tasks.back();
      tasks.pop_back();
      const int v = t.vertex;
      if (v < 0) {
        // Branch header for the subtree rooted at -v - 1.
        const int c = -v - 1;
        const int b = bond(parent_[c], c);
        out.push_back(branch_symbol(c, b));
        out.push_back(number(length_[c], "branch length", c));
        continue;
      }

      out.push_back(vertex_symbol(v, t.bond == 0 ? 1 : t.bond));
      index[v] = emitted++;
      for (int anc: rings_[v]) {
        out.push_back(ring_symbol(v, bond(anc, v)));
        out.push_back(number(index[v] - index[anc] - 1, "ring distance", v));
      }

      const std::vector<int> &kids = children_[v];
      if (kids.empty())
        continue;
      tasks.push_back({ kids.back(), bond(v, kids.back()) });
      for (auto it = kids.rbegin() + 1; it != kids.rend(); ++it) {
        tasks.push_back({ *it, bond(v, *it) });
        tasks.push_back({ -*it - 1, 0 });
      }
    }
    return out;
  }

  const LabeledGraph &g_;
  const GrammarSpec &grammar_;
  std::map<std::pair<int, int>, int> vertex_sym_;
  std::map<int, int> branch_sym_, ring_sym_, number_sym_;
  std::vector<int> types_, pre_, parent_, length_;
  std::vector<std::vector<int>> children_, rings_;
};

}  // namespace

SymbolString encode(const LabeledGraph &g, const GrammarSpec &grammar) {
  return Encoder(g, grammar).run();
}

SymbolString encode_smiles(std::string_view smiles,
                           const GrammarSpec &grammar) {
  return encode(parse_smiles(smiles, ValenceTable::from_grammar(grammar)),
                grammar);
}

}  // namespace vgram
