//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef VGRAM_GRAPH_H_
#define VGRAM_GRAPH_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vgram {

struct Vertex {
  int type_id = -1;
  std::string label;
  int max_degree = 0;

  bool operator==(const Vertex &) const = default;
};

struct Edge {
  int u = 0;
  int v = 0;
  int order = 1;

  bool operator==(const Edge &) const = default;
};

/// Undirected multigraph with typed, capacity-bounded vertices.
///
/// Mutators perform no validity checks, so parsers can build a graph first
/// and report what is wrong with it afterwards. Graphs produced by the
/// derivation engine always satisfy satisfies_invariants().
class LabeledGraph {
public:
  int add_vertex(int type_id, std::string label, int max_degree);
  int add_edge(int u, int v, int order);
  void set_edge_order(int edge, int order);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return vertices_.empty(); }

  const Vertex &vertex(int v) const { return vertices_[v]; }
  const Edge &edge(int e) const { return edges_[e]; }
  const std::vector<Vertex> &vertices() const { return vertices_; }
  const std::vector<Edge> &edges() const { return edges_; }
  // Vertex indices in creation order.
  const std::vector<int> &derivation_order() const { return order_; }

  std::span<const int> incident_edges(int v) const { return adjacency_[v]; }
  int other_end(int edge, int v) const {
    const Edge &e = edges_[edge];
    return e.u == v ? e.v : e.u;
  }

  // Sum of incident edge multiplicities.
  int bond_sum(int v) const { return bond_sum_[v]; }
  int free_capacity(int v) const {
    return vertices_[v].max_degree - bond_sum_[v];
  }

  std::optional<int> find_edge(int u, int v) const;
  bool is_connected() const;

  // No self-loops, at most one edge per vertex pair, positive multiplicities
  // and every bond sum within the vertex capacity.
  bool satisfies_invariants() const;

  bool operator==(const LabeledGraph &) const = default;

private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> order_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> bond_sum_;
};

}  // namespace vgram

#endif  // VGRAM_GRAPH_H_
