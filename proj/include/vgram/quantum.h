//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef VGRAM_QUANTUM_H_
#define VGRAM_QUANTUM_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vgram/grammar.h"
#include "vgram/graph.h"

namespace vgram {

// Optical component -> maximum number of connections.
class ComponentTable {
public:
  // {SPDC:2, BS:4, Holo:2, DP:2, Ref:2, Det:1}
  static const ComponentTable &standard();

  std::optional<int> max_degree(std::string_view component) const;
  const std::vector<std::pair<std::string, int>> &entries() const {
    return entries_;
  }

private:
  std::vector<std::pair<std::string, int>> entries_;
};

// Rule table over [SPDC] [BS] [Holo] [DP] [Ref] [Det] [Branch] [Ring] with
// states X_0..X_3. Numbers come from the explicit value row
// 1 2 3 4 5 6 8 9, not from symbol indices.
const GrammarSpec &quantum_grammar();

struct ExperimentViolation {
  int vertex = -1;
  int degree = 0;
  int max = 0;
};

struct ExperimentReport {
  bool valid = true;
  std::vector<ExperimentViolation> violations;
};

// Checks per-component degree bounds. Parallel edges count once per edge
// multiplicity. Throws Error(kUnknownElement) for labels outside the table.
ExperimentReport validate_experiment(const LabeledGraph &g);

}  // namespace vgram

#endif  // VGRAM_QUANTUM_H_
