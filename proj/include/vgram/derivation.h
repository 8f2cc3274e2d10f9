//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef VGRAM_DERIVATION_H_
#define VGRAM_DERIVATION_H_

#include <span>
#include <vector>

#include "vgram/grammar.h"
#include "vgram/graph.h"

namespace vgram {

// A sequence of alphabet indices.
using SymbolString = std::vector<int>;

enum class StepAction {
  kEpsilon,
  kVertex,
  kBranch,
  // Branch symbol with no number symbol left in its scope.
  kBranchNoOp,
  kRing,
  // Ring that created no edge: self-loop, duplicate, no capacity, or no
  // number symbol left.
  kRingNoOp,
  // Symbol consumed as the number argument of the preceding branch/ring.
  kNumber,
  // Symbol skipped because its (sub-)derivation had already ended.
  kDiscarded,
};

struct TraceStep {
  int symbol = 0;
  int state_before = 0;
  StepAction action = StepAction::kEpsilon;
  // For kBranch this is the state the enclosing scope resumes in once the
  // branch has been derived.
  int state_after = 0;
  int depth = 0;
  // kVertex: the new vertex; kRing: the ring source.
  int vertex = -1;
  // kVertex: vertex bonded to (-1 if none); kRing: the ring target.
  int partner = -1;
  int bond_order = 0;
  int type_id = -1;
  // kBranch: window length N read from the number symbol.
  int length = 0;
};

// One step per input symbol, in input order.
struct DerivationTrace {
  std::vector<TraceStep> steps;
};

struct Derivation {
  LabeledGraph graph;
  DerivationTrace trace;
};

// Derives the graph encoded by `symbols`. Total: every symbol sequence over
// the alphabet yields a graph satisfying LabeledGraph::satisfies_invariants().
// Throws Error(kSymbolRange) if an index is outside the alphabet.
LabeledGraph derive_graph(const GrammarSpec &spec,
                          std::span<const int> symbols);

Derivation derive_with_trace(const GrammarSpec &spec,
                             std::span<const int> symbols);

// Rebuilds the graph from the vertex and ring steps of a trace.
LabeledGraph replay_trace(const GrammarSpec &spec,
                          const DerivationTrace &trace);

}  // namespace vgram

#endif  // VGRAM_DERIVATION_H_
