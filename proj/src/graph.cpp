//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/graph.h"

#include <utility>

namespace vgram {

int LabeledGraph::add_vertex(int type_id, std::string label, int max_degree) {
  const int id = num_vertices();
  vertices_.push_back({ type_id, std::move(label), max_degree });
  order_.push_back(id);
  adjacency_.emplace_back();
  bond_sum_.push_back(0);
  return id;
}

int LabeledGraph::add_edge(int u, int v, int order) {
  const int id = num_edges();
  edges_.push_back({ u, v, order });
  adjacency_[u].push_back(id);
  if (v != u)
    adjacency_[v].push_back(id);
  bond_sum_[u] += order;
  bond_sum_[v] += order;
  return id;
}

void LabeledGraph::set_edge_order(int edge, int order) {
  Edge &e = edges_[edge];
  const int delta = order - e.order;
  bond_sum_[e.u] += delta;
  bond_sum_[e.v] += delta;
  e.order = order;
}

std::optional<int> LabeledGraph::find_edge(int u, int v) const {
  for (int e: adjacency_[u]) {
    if (other_end(e, u) == v)
      return e;
  }
  return std::nullopt;
}

bool LabeledGraph::is_connected() const {
  if (vertices_.empty())
    return true;

  std::vector<bool> seen(vertices_.size(), false);
  std::vector<int> stack { 0 };
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e: adjacency_[v]) {
      const int w = other_end(e, v);
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == num_vertices();
}

bool LabeledGraph::satisfies_invariants() const {
  for (int v = 0; v < num_vertices(); ++v) {
    if (bond_sum_[v] > vertices_[v].max_degree)
      return false;
    for (int e: adjacency_[v]) {
      const int w = other_end(e, v);
      if (w == v || edges_[e].order < 1)
        return false;
      if (find_edge(v, w) != e)
        return false;
    }
  }
  return true;
}

}  // namespace vgram
