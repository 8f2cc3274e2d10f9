//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "vgram/chem.h"
#include "vgram/error.h"

namespace vgram {
namespace {

using Coloring = std::vector<int>;
using Permutation = std::vector<int>;

// Individualization-refinement search for the least adjacency encoding.
// Automorphisms found at equal leaves prune symmetric siblings.
class Canonicalizer {
public:
  explicit Canonicalizer(const LabeledGraph &g)
      : g_(g), n_(g.num_vertices()), adj_(n_ * n_, 0) {
    for (const Edge &e: g.edges()) {
      // Self-loops and repeated pairs are folded into the matrix; the
      // edge multiset is kept separately so they still count.
      adj_[e.u * n_ + e.v] += e.order;
      if (e.u != e.v)
        adj_[e.v * n_ + e.u] += e.order;
    }
    neighbors_.resize(n_);
    for (int v = 0; v < n_; ++v)
      for (int w = 0; w < n_; ++w)
        if (w != v && adj_[v * n_ + w] != 0)
          neighbors_[v].push_back(w);
  }

  std::string run() {
    if (n_ == 0)
      return "0|";

    std::vector<std::string> labels;
    for (const Vertex &v: g_.vertices())
      labels.push_back(v.label);
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Coloring c(n_);
    std::vector<std::tuple<int, int, int, int>> keys(n_);
    for (int v = 0; v < n_; ++v) {
      const int label = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), labels[v])
          - sorted.begin());
      keys[v] = { label, static_cast<int>(neighbors_[v].size()),
                  g_.bond_sum(v), adj_[v * n_ + v] };
    }
    c = rank(keys);
    refine(c);

    std::vector<int> path;
    search(c, path);
    return *best_;
  }

private:
  template <class Key>
  static Coloring rank(const std::vector<Key> &keys) {
    std::vector<Key> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    Coloring c(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v)
      c[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), keys[v])
          - distinct.begin());
    return c;
  }

  static int num_colors(const Coloring &c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  void refine(Coloring &c) const {
    int classes = num_colors(c);
    while (true) {
      std::vector<std::pair<int, std::vector<std::pair<int, int>>>> keys(n_);
      for (int v = 0; v < n_; ++v) {
        keys[v].first = c[v];
        for (int w: neighbors_[v])
          keys[v].second.emplace_back(c[w], adj_[v * n_ + w]);
        std::sort(keys[v].second.begin(), keys[v].second.end());
      }
      Coloring next = rank(keys);
      const int next_classes = num_colors(next);
      c = std::move(next);
      if (next_classes == classes)
        return;
      classes = next_classes;
    }
  }

  std::string encode(const Coloring &c) const {
    // c is discrete: vertex v sits at position c[v].
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v)
      at[c[v]] = v;

    std::string out = fmt::format("{}|", n_);
    for (int i = 0; i < n_; ++i) {
      out += g_.vertex(at[i]).label;
      out += i + 1 < n_ ? "," : "|";
    }
    std::vector<std::tuple<int, int, int>> edges;
    for (const Edge &e: g_.edges()) {
      auto [a, b] = std::minmax(c[e.u], c[e.v]);
      edges.emplace_back(a, b, e.order);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto &[a, b, o] = edges[i];
      out += fmt::format("{}{}-{}:{}", i == 0 ? "" : ",", a, b, o);
    }
    return out;
  }

  // Orbit representatives of `v` under automorphisms fixing `path`.
  std::vector<int> orbits(const std::vector<int> &path) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Permutation &p: automorphisms_) {
      if (!std::all_of(path.begin(), path.end(),
                       [&](int v) { return p[v] == v; }))
        continue;
      for (int v = 0; v < n_; ++v)
        parent[find(v)] = find(p[v]);
    }
    std::vector<int> root(n_);
    for (int v = 0; v < n_; ++v)
      root[v] = find(v);
    return root;
  }

  void search(const Coloring &c, std::vector<int> &path) {
    // Smallest non-singleton color class.
    std::vector<int> counts(n_, 0);
    for (int v = 0; v < n_; ++v)
      ++counts[c[v]];
    int target = -1;
    for (int col = 0; col < n_; ++col) {
      if (counts[col] > 1) {
        target = col;
        break;
      }
    }

    if (target < 0) {
      leaf(c);
      return;
    }

    std::vector<int> explored;
    for (int v = 0; v < n_; ++v) {
      if (c[v] != target)
        continue;
      if (!explored.empty()) {
        const std::vector<int> root = orbits(path);
        if (std::any_of(explored.begin(), explored.end(),
                        [&](int u) { return root[u] == root[v]; }))
          continue;
      }
      explored.push_back(v);

      std::vector<std::pair<int, int>> keys(n_);
      for (int u = 0; u < n_; ++u)
        keys[u] = { c[u], (u != v && c[u] == target) ? 1 : 0 };
      Coloring child = rank(keys);
      refine(child);
      path.push_back(v);
      search(child, path);
      path.pop_back();
    }
  }

  void leaf(const Coloring &c) {
    std::string code = encode(c);
    if (!best_ || code < *best_) {
      best_ = std::move(code);
      best_coloring_ = c;
      return;
    }
    if (code == *best_) {
      // Map the vertex at each position of this leaf onto the vertex at the
      // same position of the best leaf.
      std::vector<int> best_at(n_);
      for (int v = 0; v < n_; ++v)
        best_at[best_coloring_[v]] = v;
      Permutation p(n_);
      for (int v = 0; v < n_; ++v)
        p[v] = best_at[c[v]];
      automorphisms_.push_back(std::move(p));
    }
  }

  const LabeledGraph &g_;
  int n_;
  std::vector<int> adj_;
  std::vector<std::vector<int>> neighbors_;
  std::optional<std::string> best_;
  Coloring best_coloring_;
  std::vector<Permutation> automorphisms_;
};

}  // namespace

std::string canonical_form(const LabeledGraph &g) {
  if (g.num_vertices() > kCanonicalSizeLimit)
    throw Error(ErrorCategory::kSizeLimit,
                fmt::format("canonical form supports at most {} vertices, "
                            "got {}",
                            kCanonicalSizeLimit, g.num_vertices()));
  return Canonicalizer(g).run();
}

}  // namespace vgram
