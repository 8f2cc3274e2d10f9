//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/smiles.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "vgram/error.h"

namespace vgram {
namespace {

[[noreturn]] void fail(ErrorCategory category, std::size_t pos,
                       const std::string &what) {
  throw Error(category, fmt::format("{} at position {}", what, pos), pos);
}

bool is_digit(char c) {
  return c >= '0' && c <= '9';
}

std::string describe_unsupported(char c) {
  switch (c) {
  case '[':
  case ']':
    return "bracket atoms are not supported";
  case '.':
    return "disconnected fragments ('.') are not supported";
  case '/':
  case '\\':
  case '@':
    return "stereo marks are not supported";
  case '+':
    return "charges are not supported";
  case ':':
    return "aromatic bond ':' is not supported";
  case '$':
    return "quadruple bonds are not supported";
  case '*':
    return "wildcard atoms are not supported";
  default:
    if (std::isprint(static_cast<unsigned char>(c)))
      return fmt::format("unsupported character '{}'", c);
    return fmt::format("unsupported byte 0x{:02x}",
                       static_cast<unsigned char>(c));
  }
}

// Edmonds' blossom algorithm for maximum matching in a general graph.
class BlossomMatcher {
public:
  explicit BlossomMatcher(const std::vector<std::vector<int>> &adj)
      : adj_(adj), n_(static_cast<int>(adj.size())), match_(n_, -1),
        parent_(n_), base_(n_), used_(n_), blossom_(n_) { }

  std::vector<int> solve() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1)
        continue;
      for (int u: adj_[v]) {
        if (match_[u] == -1) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1)
        continue;
      int u = find_path(v);
      while (u != -1) {
        const int pv = parent_[u];
        const int ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    return match_;
  }

private:
  int lca(int a, int b) const {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1)
        break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b])
        return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);

    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to: adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to)
          continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1)
            return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<int>> &adj_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

// Edges of `bonds` that lie on a cycle of the subgraph they induce.
std::vector<bool> cycle_edges(const LabeledGraph &g,
                              const std::vector<bool> &bonds) {
  const int n = g.num_vertices();
  std::vector<bool> on_cycle(g.num_edges(), false);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;

  struct Frame {
    int v;
    int via;
    std::size_t next;
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1)
      continue;
    std::vector<Frame> stack { { s, -1, 0 } };
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame &f = stack.back();
      std::span<const int> inc = g.incident_edges(f.v);
      if (f.next < inc.size()) {
        const int e = inc[f.next++];
        if (!bonds[e] || e == f.via)
          continue;
        const int w = g.other_end(e, f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({ w, e, 0 });
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame &up = stack.back();
        low[up.v] = std::min(low[up.v], low[done.v]);
      }
    }
  }
  // A bond is a bridge iff the deeper endpoint cannot reach above it.
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!bonds[e])
      continue;
    const Edge &edge = g.edge(e);
    const int child = disc[edge.u] > disc[edge.v] ? edge.u : edge.v;
    const int parent = g.other_end(e, child);
    on_cycle[e] = low[child] <= disc[parent];
  }
  return on_cycle;
}

}  // namespace

std::vector<SmilesToken> tokenize_smiles(std::string_view text) {
  std::vector<SmilesToken> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    SmilesToken tok;
    tok.position = i;
    switch (c) {
    case 'C':
      if (i + 1 < text.size() && text[i + 1] == 'l')
        fail(ErrorCategory::kUnsupported, i, "element Cl is not supported");
      [[fallthrough]];
    case 'N':
    case 'O':
    case 'F':
      tok.kind = SmilesToken::Kind::kAtom;
      tok.element = std::string(1, c);
      break;
    case 'c':
    case 'n':
    case 'o':
      tok.kind = SmilesToken::Kind::kAtom;
      tok.element = std::string(
          1, static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
      tok.aromatic = true;
      break;
    case '-':
    case '=':
    case '#':
      tok.kind = SmilesToken::Kind::kBond;
      tok.bond_order = c == '-' ? 1 : c == '=' ? 2 : 3;
      break;
    case '(':
      tok.kind = SmilesToken::Kind::kBranchOpen;
      break;
    case ')':
      tok.kind = SmilesToken::Kind::kBranchClose;
      break;
    case '%':
      if (i + 2 >= text.size() || !is_digit(text[i + 1])
          || !is_digit(text[i + 2]))
        fail(ErrorCategory::kSyntax, i, "'%' must be followed by two digits");
      tok.kind = SmilesToken::Kind::kRingBond;
      tok.ring_id = (text[i + 1] - '0') * 10 + (text[i + 2] - '0');
      if (tok.ring_id == 0)
        fail(ErrorCategory::kSyntax, i, "ring bond id %00 is not allowed");
      i += 2;
      break;
    default:
      if (c >= '1' && c <= '9') {
        tok.kind = SmilesToken::Kind::kRingBond;
        tok.ring_id = c - '0';
        break;
      }
      if (c == '0')
        fail(ErrorCategory::kSyntax, i, "ring bond id 0 is not allowed");
      fail(ErrorCategory::kUnsupported, i, describe_unsupported(c));
    }
    out.push_back(std::move(tok));
  }
  return out;
}

LabeledGraph kekulize(AromaticGraph ag) {
  LabeledGraph &g = ag.graph;
  ag.aromatic_atoms.resize(g.num_vertices(), false);
  ag.aromatic_bonds.resize(g.num_edges(), false);
  if (std::none_of(ag.aromatic_atoms.begin(), ag.aromatic_atoms.end(),
                   [](bool b) { return b; }))
    return std::move(g);

  const std::vector<bool> ring_bond = cycle_edges(g, ag.aromatic_bonds);
  std::vector<bool> needs(g.num_vertices(), false);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!ag.aromatic_atoms[v])
      continue;
    bool in_ring = false;
    bool has_multiple = false;
    for (int e: g.incident_edges(v)) {
      in_ring = in_ring || ring_bond[e];
      has_multiple = has_multiple || g.edge(e).order > 1;
    }
    if (!in_ring)
      throw Error(ErrorCategory::kAromaticity,
                  fmt::format("aromatic atom {} is not in an aromatic ring",
                              v),
                  static_cast<std::size_t>(v));
    needs[v] = !has_multiple && g.free_capacity(v) >= 1;
  }

  std::vector<int> local(g.num_vertices(), -1), global;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (needs[v]) {
      local[v] = static_cast<int>(global.size());
      global.push_back(v);
    }
  }
  std::vector<std::vector<int>> adj(global.size());
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge &edge = g.edge(e);
    if (!ag.aromatic_bonds[e] || !needs[edge.u] || !needs[edge.v])
      continue;
    adj[local[edge.u]].push_back(local[edge.v]);
    adj[local[edge.v]].push_back(local[edge.u]);
  }

  const std::vector<int> match = BlossomMatcher(adj).solve();
  for (std::size_t i = 0; i < global.size(); ++i) {
    if (match[i] == -1)
      throw Error(ErrorCategory::kKekulization,
                  fmt::format("cannot assign a double bond to aromatic atom "
                              "{}",
                              global[i]),
                  static_cast<std::size_t>(global[i]));
  }
  for (std::size_t i = 0; i < global.size(); ++i) {
    const int u = global[i];
    const int v = global[match[i]];
    if (u < v)
      g.set_edge_order(*g.find_edge(u, v), 2);
  }
  return std::move(g);
}

LabeledGraph parse_smiles(std::string_view text, const ValenceTable &table) {
  const std::vector<SmilesToken> tokens = tokenize_smiles(text);
  if (tokens.empty())
    fail(ErrorCategory::kSyntax, 0, "empty SMILES");

  AromaticGraph ag;
  LabeledGraph &g = ag.graph;
  std::vector<std::size_t> atom_pos;

  // Explicit bond symbol waiting for its right-hand atom; order 0 = none.
  struct PendingBond {
    int order = 0;
    std::size_t pos = 0;
    explicit operator bool() const { return order != 0; }
    void reset() { order = 0; }
  };
  struct OpenRing {
    int atom;
    int order;  // 0 when unspecified
    std::size_t pos;
  };
  struct OpenBranch {
    int atom;
    int atoms_before;
    std::size_t pos;
  };

  int prev = -1;
  bool branch_fresh = false;
  PendingBond pending;
  std::map<int, OpenRing> rings;
  std::vector<OpenBranch> branches;

  auto connect = [&](int a, int b, int order, std::size_t pos) {
    if (a == b)
      fail(ErrorCategory::kSelfLoop, pos, "ring bond closes on its own atom");
    if (g.find_edge(a, b))
      fail(ErrorCategory::kDuplicateBond, pos, "atoms are already bonded");
    const bool aromatic =
        order == 0 && ag.aromatic_atoms[a] && ag.aromatic_atoms[b];
    g.add_edge(a, b, order == 0 ? 1 : order);
    ag.aromatic_bonds.push_back(aromatic);
  };

  for (const SmilesToken &tok: tokens) {
    switch (tok.kind) {
    case SmilesToken::Kind::kAtom: {
      std::optional<int> valence = table.max_valence(tok.element);
      if (!valence)
        fail(ErrorCategory::kUnknownElement, tok.position,
             fmt::format("element {} is not in the valence table",
                         tok.element));
      const int a = g.add_vertex(-1, tok.element, *valence);
      ag.aromatic_atoms.push_back(tok.aromatic);
      atom_pos.push_back(tok.position);
      if (prev >= 0)
        connect(prev, a, pending.order, tok.position);
      else if (pending)
        fail(ErrorCategory::kSyntax, pending.pos,
             "bond without a preceding atom");
      pending.reset();
      prev = a;
      branch_fresh = false;
      break;
    }

    case SmilesToken::Kind::kBond:
      if (prev < 0)
        fail(ErrorCategory::kSyntax, tok.position,
             "bond without a preceding atom");
      if (pending)
        fail(ErrorCategory::kSyntax, tok.position, "consecutive bond symbols");
      pending = PendingBond { tok.bond_order, tok.position };
      break;

    case SmilesToken::Kind::kBranchOpen:
      if (prev < 0)
        fail(ErrorCategory::kSyntax, tok.position,
             "branch without a preceding atom");
      if (pending)
        fail(ErrorCategory::kSyntax, tok.position, "bond before '('");
      branches.push_back({ prev, g.num_vertices(), tok.position });
      branch_fresh = true;
      break;

    case SmilesToken::Kind::kBranchClose:
      if (branches.empty())
        fail(ErrorCategory::kUnmatchedBranch, tok.position, "unmatched ')'");
      if (pending)
        fail(ErrorCategory::kSyntax, pending.pos, "dangling bond before ')'");
      if (branches.back().atoms_before == g.num_vertices())
        fail(ErrorCategory::kSyntax, tok.position, "empty branch");
      prev = branches.back().atom;
      branches.pop_back();
      branch_fresh = false;
      break;

    case SmilesToken::Kind::kRingBond: {
      if (prev < 0)
        fail(ErrorCategory::kSyntax, tok.position,
             "ring bond without a preceding atom");
      if (branch_fresh)
        fail(ErrorCategory::kSyntax, tok.position,
             "ring bond at the start of a branch");
      const int order = pending.order;
      pending.reset();
      auto it = rings.find(tok.ring_id);
      if (it == rings.end()) {
        rings.emplace(tok.ring_id, OpenRing { prev, order, tok.position });
        break;
      }
      const OpenRing open = it->second;
      rings.erase(it);
      if (open.order != 0 && order != 0 && open.order != order)
        fail(ErrorCategory::kRingBondConflict, tok.position,
             fmt::format("ring bond {} has conflicting bond orders",
                         tok.ring_id));
      connect(open.atom, prev, open.order != 0 ? open.order : order,
              tok.position);
      break;
    }
    }
  }

  if (pending)
    fail(ErrorCategory::kSyntax, pending.pos, "dangling bond at end");
  if (!branches.empty())
    fail(ErrorCategory::kUnmatchedBranch, branches.back().pos,
         "unmatched '('");
  if (!rings.empty()) {
    const OpenRing &open = rings.begin()->second;
    fail(ErrorCategory::kUnmatchedRingBond, open.pos,
         fmt::format("unmatched ring bond {}", rings.begin()->first));
  }

  LabeledGraph mol;
  try {
    mol = kekulize(std::move(ag));
  } catch (const Error &e) {
    const std::size_t atom = e.position().value_or(0);
    fail(e.category(), atom < atom_pos.size() ? atom_pos[atom] : 0,
         e.what());
  }

  const MoleculeReport report = validate_molecule(mol, table);
  if (!report.valid) {
    const MoleculeViolation &v = report.violations.front();
    fail(ErrorCategory::kValence, atom_pos[v.atom],
         fmt::format("atom {} uses valence {} > {}", mol.vertex(v.atom).label,
                     v.used, v.max));
  }
  return mol;
}

bool is_valid_smiles(std::string_view text, const ValenceTable &table) {
  try {
    parse_smiles(text, table);
    return true;
  } catch (const Error &) {
    return false;
  }
}

std::string write_smiles(const LabeledGraph &g) {
  if (g.empty())
    throw Error(ErrorCategory::kInvalidInput, "cannot write an empty graph");
  if (!g.is_connected())
    throw Error(ErrorCategory::kDisconnected,
                "SMILES output needs a connected graph");

  const int n = g.num_vertices();
  std::vector<std::vector<int>> nbrs(n);
  for (int v = 0; v < n; ++v) {
    for (int e: g.incident_edges(v))
      nbrs[v].push_back(g.other_end(e, v));
    std::sort(nbrs[v].begin(), nbrs[v].end());
  }

  // Depth-first tree; back edges become ring closures.
  std::vector<int> pre(n, -1), parent(n, -1);
  std::vector<std::vector<int>> children(n), opens(n), closes(n);
  {
    int timer = 0;
    std::vector<std::pair<int, std::size_t>> stack { { 0, 0 } };
    pre[0] = timer++;
    while (!stack.empty()) {
      auto &[v, next] = stack.back();
      if (next == nbrs[v].size()) {
        stack.pop_back();
        continue;
      }
      const int w = nbrs[v][next++];
      if (pre[w] == -1) {
        pre[w] = timer++;
        parent[w] = v;
        children[v].push_back(w);
        stack.emplace_back(w, 0);
      } else if (w != parent[v] && pre[w] < pre[v]) {
        opens[w].push_back(v);
        closes[v].push_back(w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    auto by_pre = [&](int a, int b) { return pre[a] < pre[b]; };
    std::sort(opens[v].begin(), opens[v].end(), by_pre);
    std::sort(closes[v].begin(), closes[v].end(), by_pre);
  }

  auto bond_text = [](int order) -> std::string {
    switch (order) {
    case 2:
      return "=";
    case 3:
      return "#";
    case 4:
      return "$";
    default:
      return "";
    }
  };
  auto digit_text = [](int id) {
    return id < 10 ? std::to_string(id) : fmt::format("%{:02d}", id);
  };

  std::set<int> free_ids;
  for (int id = 1; id <= 99; ++id)
    free_ids.insert(id);
  std::map<std::pair<int, int>, int> ring_id;

  struct Task {
    int vertex;  // -1 for literal text
    int bond;
    std::string text;
  };
  std::string out;
  std::vector<Task> tasks { { 0, 0, {} } };
  while (!tasks.empty()) {
    Task t = std::move(tasks.back());
    tasks.pop_back();
    if (t.vertex < 0) {
      out += t.text;
      continue;
    }

    const int v = t.vertex;
    out += bond_text(t.bond);
    out += g.vertex(v).label;

    std::vector<int> released;
    for (int anc: closes[v]) {
      const int id = ring_id.at({ anc, v });
      out += bond_text(g.edge(*g.find_edge(anc, v)).order);
      out += digit_text(id);
      released.push_back(id);
    }
    for (int desc: opens[v]) {
      if (free_ids.empty())
        throw Error(ErrorCategory::kEncodingOverflow,
                    "more than 99 simultaneously open ring bonds");
      const int id = *free_ids.begin();
      free_ids.erase(free_ids.begin());
      ring_id[{ v, desc }] = id;
      out += digit_text(id);
    }
    free_ids.insert(released.begin(), released.end());

    const std::vector<int> &kids = children[v];
    if (kids.empty())
      continue;
    auto bond_to = [&](int c) { return g.edge(*g.find_edge(v, c)).order; };
    tasks.push_back({ kids.back(), bond_to(kids.back()), {} });
    for (auto it = kids.rbegin() + 1; it != kids.rend(); ++it) {
      tasks.push_back({ -1, 0, ")" });
      tasks.push_back({ *it, bond_to(*it), {} });
      tasks.push_back({ -1, 0, "(" });
    }
  }
  return out;
}

}  // namespace vgram
