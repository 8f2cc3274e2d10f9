//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/derivation.h"

#include <algorithm>
#include <cstddef>

#include <fmt/format.h>

#include "vgram/error.h"

namespace vgram {
namespace {

// One (sub-)derivation: the root string or a branch window.
struct Scope {
  std::size_t end;
  int state;
  // Vertex the next edge attaches to, -1 before the first vertex.
  int current;
  int depth;
  // Successor stored in the branch production that opened this scope.
  int resume_state;
  // Trace index of the opening branch step, -1 for the root.
  std::ptrdiff_t branch_step;
  bool done = false;
};

class Deriver {
public:
  Deriver(const GrammarSpec &spec, std::span<const int> symbols,
          DerivationTrace *trace)
      : spec_(spec), symbols_(symbols), trace_(trace) { }

  LabeledGraph run() {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i] < 0 || symbols_[i] >= spec_.num_symbols())
        throw Error(ErrorCategory::kSymbolRange,
                    fmt::format("symbol index {} at position {} is outside "
                                "the alphabet (size {})",
                                symbols_[i], i, spec_.num_symbols()),
                    i);
    }
    if (trace_ != nullptr)
      trace_->steps.reserve(symbols_.size());

    stack_.push_back({ symbols_.size(), 0, -1, 0, 0, -1 });
    while (!stack_.empty()) {
      Scope &scope = stack_.back();
      if (scope.done || pos_ >= scope.end) {
        close_scope();
        continue;
      }
      step(scope);
    }
    return std::move(graph_);
  }

private:
  void record(const TraceStep &s) {
    if (trace_ != nullptr)
      trace_->steps.push_back(s);
  }

  std::ptrdiff_t trace_size() const {
    return trace_ != nullptr
               ? static_cast<std::ptrdiff_t>(trace_->steps.size())
               : -1;
  }

  void close_scope() {
    Scope closed = stack_.back();
    for (; pos_ < closed.end; ++pos_) {
      record({ .symbol = symbols_[pos_],
               .state_before = closed.state,
               .action = StepAction::kDiscarded,
               .state_after = closed.state,
               .depth = closed.depth });
    }
    stack_.pop_back();
    if (stack_.empty())
      return;

    Scope &parent = stack_.back();
    parent.state =
        std::min(closed.resume_state, graph_.free_capacity(parent.current));
    if (parent.state <= 0) {
      parent.state = 0;
      parent.done = true;
    }
    if (trace_ != nullptr && closed.branch_step >= 0)
      trace_->steps[closed.branch_step].state_after = parent.state;
  }

  void step(Scope &scope) {
    const std::size_t at = pos_++;
    const int symbol = symbols_[at];
    const Production &p = spec_.production(scope.state, symbol);
    TraceStep ts { .symbol = symbol,
                   .state_before = scope.state,
                   .state_after = scope.state,
                   .depth = scope.depth };

    switch (p.kind) {
    case ProductionKind::kEpsilon:
      ts.action = StepAction::kEpsilon;
      record(ts);
      return;

    case ProductionKind::kVertex:
    case ProductionKind::kTerminal:
      add_vertex(scope, p, ts);
      return;

    case ProductionKind::kBranch:
      open_branch(scope, p, ts);
      return;

    case ProductionKind::kRing:
      add_ring(scope, p, ts);
      return;
    }
  }

  void add_vertex(Scope &scope, const Production &p, TraceStep &ts) {
    const TypeDef &type = spec_.types[p.type_id];
    int mu = 0;
    if (scope.current >= 0) {
      mu = std::min({ p.bond_order, graph_.free_capacity(scope.current),
                      type.max_degree });
      mu = std::max(mu, 0);
    }

    const int v = graph_.add_vertex(p.type_id, type.label, type.max_degree);
    if (mu > 0)
      graph_.add_edge(scope.current, v, mu);

    int next = 0;
    if (p.kind == ProductionKind::kVertex)
      next = std::clamp(p.next_state, 0, graph_.free_capacity(v));

    ts.action = StepAction::kVertex;
    ts.vertex = v;
    ts.partner = mu > 0 ? scope.current : -1;
    ts.bond_order = mu;
    ts.type_id = p.type_id;
    ts.state_after = next;
    record(ts);

    scope.current = v;
    scope.state = next;
    scope.done = next == 0;
  }

  void open_branch(Scope &scope, const Production &p, TraceStep &ts) {
    if (pos_ >= scope.end || scope.current < 0) {
      ts.action = StepAction::kBranchNoOp;
      record(ts);
      return;
    }

    const std::size_t num_at = pos_++;
    const int n = spec_.alphabet[symbols_[num_at]].value;

    ts.action = StepAction::kBranch;
    ts.length = n;
    const std::ptrdiff_t branch_step = trace_size();
    record(ts);
    record({ .symbol = symbols_[num_at],
             .state_before = scope.state,
             .action = StepAction::kNumber,
             .state_after = scope.state,
             .depth = scope.depth });

    const std::size_t end =
        std::min(pos_ + static_cast<std::size_t>(n), scope.end);
    // Copy before push_back invalidates `scope`.
    Scope child { end,          p.branch_state, scope.current,
                  scope.depth + 1, p.next_state,   branch_step };
    stack_.push_back(child);
  }

  void add_ring(Scope &scope, const Production &p, TraceStep &ts) {
    if (pos_ >= scope.end || scope.current < 0) {
      ts.action = StepAction::kRingNoOp;
      record(ts);
      return;
    }

    const std::size_t num_at = pos_++;
    const int n = spec_.alphabet[symbols_[num_at]].value;
    // Vertices are numbered in derivation order, so positions are indices.
    // Targets before the first vertex clamp to it.
    const int target = static_cast<int>(std::max<long long>(
        0, static_cast<long long>(scope.current) - n - 1));

    int bond = 0;
    if (target != scope.current && !graph_.find_edge(scope.current, target)) {
      bond = std::min({ scope.state, p.bond_order,
                        graph_.free_capacity(target),
                        graph_.free_capacity(scope.current) });
    }

    ts.vertex = scope.current;
    ts.partner = target;
    if (bond <= 0) {
      ts.action = StepAction::kRingNoOp;
    } else {
      graph_.add_edge(scope.current, target, bond);
      ts.action = StepAction::kRing;
      ts.bond_order = bond;
      scope.state -= bond;
      scope.done = scope.state == 0;
    }
    ts.state_after = scope.state;
    record(ts);
    record({ .symbol = symbols_[num_at],
             .state_before = scope.state,
             .action = StepAction::kNumber,
             .state_after = scope.state,
             .depth = scope.depth });
  }

  const GrammarSpec &spec_;
  std::span<const int> symbols_;
  DerivationTrace *trace_;
  LabeledGraph graph_;
  std::vector<Scope> stack_;
  std::size_t pos_ = 0;
};

}  // namespace

LabeledGraph derive_graph(const GrammarSpec &spec,
                          std::span<const int> symbols) {
  return Deriver(spec, symbols, nullptr).run();
}

Derivation derive_with_trace(const GrammarSpec &spec,
                             std::span<const int> symbols) {
  Derivation out;
  out.graph = Deriver(spec, symbols, &out.trace).run();
  return out;
}

LabeledGraph replay_trace(const GrammarSpec &spec,
                          const DerivationTrace &trace) {
  LabeledGraph g;
  for (const TraceStep &s: trace.steps) {
    if (s.action == StepAction::kVertex) {
      const TypeDef &type = spec.types[s.type_id];
      const int v = g.add_vertex(s.type_id, type.label, type.max_degree);
      if (s.partner >= 0)
        g.add_edge(s.partner, v, s.bond_order);
    } else if (s.action == StepAction::kRing) {
      g.add_edge(s.vertex, s.partner, s.bond_order);
    }
  }
  return g;
}

}  // namespace vgram
