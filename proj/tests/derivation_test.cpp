//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/derivation.h"

#include <random>

#include <gtest/gtest.h>

#include "test_utils.h"
#include "vgram/chem.h"
#include "vgram/codec.h"
#include "vgram/error.h"
#include "vgram/smiles.h"

namespace vgram {
namespace {

const GrammarSpec &chem() { return chem_grammar(); }

SymbolString syms(std::string_view text) { return tokenize(text, chem()); }

int sym(std::string_view name) { return *chem().find_symbol(name); }

std::vector<int> vertex_states(const DerivationTrace &trace) {
  std::vector<int> out;
  for (const TraceStep &s: trace.steps)
    if (s.action == StepAction::kVertex)
      out.push_back(s.state_before);
  return out;
}

TEST(DerivationTest, WorkedExample) {
  Derivation d = derive_with_trace(chem(), syms("[F][=C][=C][#N]"));
  EXPECT_EQ(vertex_states(d.trace), (std::vector<int> { 0, 1, 3, 2 }));
  EXPECT_TRUE(test::brute_isomorphic(d.graph, parse_smiles("FC=C=N")));

  ASSERT_EQ(d.graph.num_edges(), 3);
  EXPECT_EQ(d.graph.edge(0).order, 1);
  EXPECT_EQ(d.graph.edge(1).order, 2);
  EXPECT_EQ(d.graph.edge(2).order, 2);
}

TEST(DerivationTest, SmallExamples) {
  EXPECT_TRUE(test::brute_isomorphic(derive_graph(chem(), syms("[O][#C]")),
                                     parse_smiles("O=C")));
  // The second F saturates the first; the trailing [C] is never derived.
  LabeledGraph ff = derive_graph(chem(), syms("[F][F][C]"));
  EXPECT_TRUE(test::brute_isomorphic(ff, parse_smiles("FF")));

  EXPECT_TRUE(derive_graph(chem(), SymbolString {}).empty());
  EXPECT_TRUE(derive_graph(chem(), syms("[nop][Branch][Ring]")).empty());
}

TEST(DerivationTest, BranchAndRing) {
  // [Branch] N=1 ([C] has value 1) derives [F] as a side chain.
  EXPECT_TRUE(test::brute_isomorphic(
      derive_graph(chem(), syms("[C][Branch][C][F][O]")),
      parse_smiles("C(F)O")));
  // [Ring] N=1 bonds the third atom to the first.
  EXPECT_TRUE(test::brute_isomorphic(
      derive_graph(chem(), syms("[C][C][C][Ring][C]")),
      parse_smiles("C1CC1")));
  // [=Branch] opens a side chain that may start with a double bond.
  EXPECT_TRUE(test::brute_isomorphic(
      derive_graph(chem(), syms("[C][=Branch][C][=O][C]")),
      parse_smiles("C(=O)C")));
  // [=Ring] closes a double bond ring.
  EXPECT_TRUE(test::brute_isomorphic(
      derive_graph(chem(), syms("[C][C][C][=Ring][C]")),
      parse_smiles("C1CC=1")));
}

TEST(DerivationTest, OperatorNoOps) {
  // Ring onto the only vertex is a self-loop: skipped, number consumed.
  Derivation d = derive_with_trace(chem(), syms("[C][Ring][C]"));
  EXPECT_EQ(d.graph.num_vertices(), 1);
  ASSERT_EQ(d.trace.steps.size(), 3U);
  EXPECT_EQ(d.trace.steps[1].action, StepAction::kRingNoOp);
  EXPECT_EQ(d.trace.steps[1].state_after, 4);
  EXPECT_EQ(d.trace.steps[2].action, StepAction::kNumber);

  // Missing number: the operator does nothing.
  EXPECT_EQ(derive_graph(chem(), syms("[C][Branch]")).num_vertices(), 1);
  EXPECT_EQ(derive_graph(chem(), syms("[C][Ring]")).num_vertices(), 1);

  // Ring onto an existing bond partner is skipped as well.
  LabeledGraph g = derive_graph(chem(), syms("[C][C][Ring][nop][C]"));
  EXPECT_TRUE(test::brute_isomorphic(g, parse_smiles("CCC")));

  // In X_1 a branch is epsilon and does not eat the following symbol.
  EXPECT_TRUE(test::brute_isomorphic(
      derive_graph(chem(), syms("[O][C][O][Branch][C]")),
      parse_smiles("OCOC")));
}

TEST(DerivationTest, BranchWindowIsTruncatedAtScopeEnd) {
  // [#Ring] as a number is 16, far more than the two symbols left.
  EXPECT_TRUE(test::brute_isomorphic(
      derive_graph(chem(), syms("[C][Branch][#Ring][C][O]")),
      parse_smiles("CCO")));
}

TEST(DerivationTest, BranchResumeRespectsAttachmentCapacity) {
  // Inside the branch a ring fills the root; the main chain cannot add
  // another bond to it.
  LabeledGraph g =
      derive_graph(chem(), syms("[C][#Branch][=N][#C][=C][=Ring][nop][F]"));
  EXPECT_TRUE(test::degrees_within_bounds(g));
}

TEST(DerivationTest, SymbolOutOfRangeThrows) {
  const SymbolString bad { 1, 2, 99 };
  try {
    derive_graph(chem(), bad);
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_EQ(e.category(), ErrorCategory::kSymbolRange);
    EXPECT_EQ(e.position(), 2U);
  }
  EXPECT_THROW(derive_graph(chem(), SymbolString { -1 }), Error);
}

TEST(DerivationTest, TraceHasOneStepPerSymbolAndReplays) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    SymbolString s = test::random_string(rng, chem().num_symbols(), 0, 60);
    Derivation d = derive_with_trace(chem(), s);
    ASSERT_EQ(d.trace.steps.size(), s.size());
    for (std::size_t p = 0; p < s.size(); ++p)
      ASSERT_EQ(d.trace.steps[p].symbol, s[p]);
    ASSERT_EQ(replay_trace(chem(), d.trace), d.graph);
  }
}

// Totality and validity over random strings, including strings built to
// nest branches deeply.
TEST(DerivationPropertyTest, TotalityAndValidity) {
  std::mt19937_64 rng(20260101);
  const int n = chem().num_symbols();
  const std::vector<int> heavy { sym("[#C]"),     sym("[Branch]"),
                                 sym("[=Branch]"), sym("[#Branch]"),
                                 sym("[#Ring]"),   sym("[Ring]") };
  for (int i = 0; i < 100000; ++i) {
    SymbolString s;
    if (i % 10 == 0) {
      std::uniform_int_distribution<int> len(0, 200);
      s.resize(len(rng));
      for (int &x: s)
        x = heavy[rng() % heavy.size()];
    } else {
      s = test::random_string(rng, n, 0, 200);
    }
    LabeledGraph g;
    ASSERT_NO_THROW(g = derive_graph(chem(), s));
    ASSERT_TRUE(test::degrees_within_bounds(g)) << to_text(s);
    ASSERT_FALSE(test::has_parallel_edges(g)) << to_text(s);
    ASSERT_TRUE(g.empty() || g.is_connected()) << to_text(s);
    ASSERT_TRUE(validate_molecule(g, ValenceTable::core()).valid);
  }
}

TEST(DerivationPropertyTest, DeepNesting) {
  // [C][#Branch][#Ring] repeated: every window holds the next branch. A
  // window never outgrows its parent's, so 16 symbols allow six levels.
  SymbolString s;
  for (int i = 0; i < 400; ++i) {
    s.push_back(sym("[C]"));
    s.push_back(sym("[#Branch]"));
    s.push_back(sym("[#Ring]"));
  }
  Derivation d = derive_with_trace(chem(), s);
  int depth = 0;
  for (const TraceStep &t: d.trace.steps)
    depth = std::max(depth, t.depth);
  EXPECT_EQ(depth, 6);
  EXPECT_TRUE(test::degrees_within_bounds(d.graph));
}

TEST(DerivationPropertyTest, PrefixMonotonicity) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    SymbolString s = test::random_string(rng, chem().num_symbols(), 0, 80);
    const int full = derive_graph(chem(), s).num_vertices();
    for (std::size_t k = 0; k <= s.size(); ++k) {
      std::span<const int> prefix(s.data(), k);
      ASSERT_LE(derive_graph(chem(), prefix).num_vertices(), full);
    }
  }
}

TEST(DerivationPropertyTest, Determinism) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) {
    SymbolString s = test::random_string(rng, chem().num_symbols(), 0, 100);
    ASSERT_EQ(derive_graph(chem(), s), derive_graph(chem(), s));
  }
}

// Positions where a [nop] can be inserted without entering a branch window
// or separating an operator from its number.
std::vector<std::size_t> safe_insertions(const DerivationTrace &trace) {
  std::vector<std::size_t> out;
  const auto &steps = trace.steps;
  for (std::size_t p = 0; p < steps.size(); ++p)
    if (steps[p].depth == 0 && steps[p].action != StepAction::kNumber)
      out.push_back(p);
  const bool open_operator =
      !steps.empty()
      && (steps.back().action == StepAction::kBranchNoOp
          || steps.back().action == StepAction::kRingNoOp);
  if (steps.empty() || (steps.back().depth == 0 && !open_operator))
    out.push_back(steps.size());
  return out;
}

TEST(DerivationPropertyTest, NopInsertionOutsideBranchWindows) {
  std::mt19937_64 rng(9);
  const int nop = sym("[nop]");
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    SymbolString s = test::random_string(rng, chem().num_symbols(), 0, 40);
    Derivation d = derive_with_trace(chem(), s);
    for (std::size_t p: safe_insertions(d.trace)) {
      SymbolString t = s;
      t.insert(t.begin() + static_cast<std::ptrdiff_t>(p), nop);
      ASSERT_EQ(derive_graph(chem(), t), d.graph)
          << to_text(s) << " at " << p;
      ++checked;
    }
  }
  EXPECT_GT(checked, 10000);
}

}  // namespace
}  // namespace vgram
