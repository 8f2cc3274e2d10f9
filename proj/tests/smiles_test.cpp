//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/smiles.h"

#include <random>

#include <gtest/gtest.h>

#include "test_utils.h"
#include "vgram/error.h"

namespace vgram {
namespace {

const GrammarSpec &chem() { return chem_grammar(); }

ErrorCategory category_of(std::string_view smiles) {
  try {
    parse_smiles(smiles);
  } catch (const Error &e) {
    return e.category();
  }
  ADD_FAILURE() << smiles << " parsed";
  return ErrorCategory::kInvalidInput;
}

int count_order(const LabeledGraph &g, int order) {
  int n = 0;
  for (const Edge &e: g.edges())
    n += e.order == order;
  return n;
}

TEST(SmilesTest, Tokenizer) {
  std::vector<SmilesToken> t = tokenize_smiles("C=c1%12(N)");
  ASSERT_EQ(t.size(), 8U);
  EXPECT_EQ(t[1].kind, SmilesToken::Kind::kBond);
  EXPECT_EQ(t[1].bond_order, 2);
  EXPECT_TRUE(t[2].aromatic);
  EXPECT_EQ(t[2].element, "C");
  EXPECT_EQ(t[4].ring_id, 12);
  EXPECT_EQ(t[4].position, 4U);
  EXPECT_EQ(t[5].kind, SmilesToken::Kind::kBranchOpen);
}

TEST(SmilesTest, ParsesSimpleMolecules) {
  LabeledGraph g = parse_smiles("C1CC1");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_TRUE(test::brute_isomorphic(
      parse_smiles("CC(=O)O"),
      test::make_graph(chem(), { "C", "C", "O", "O" },
                       { { 0, 1, 1 }, { 1, 2, 2 }, { 1, 3, 1 } })));
  EXPECT_TRUE(test::brute_isomorphic(parse_smiles("C#N"),
                                     parse_smiles("N#C")));
  EXPECT_TRUE(test::brute_isomorphic(parse_smiles("C%10CC%10"),
                                     parse_smiles("C1CC1")));
  // Ring bond symbol on either side.
  EXPECT_TRUE(test::brute_isomorphic(parse_smiles("C=1CC1"),
                                     parse_smiles("C1CC=1")));
  EXPECT_TRUE(is_valid_smiles("C1CC1"));
}

TEST(SmilesTest, Aromatics) {
  LabeledGraph benzene = parse_smiles("c1ccccc1");
  EXPECT_EQ(count_order(benzene, 2), 3);
  EXPECT_EQ(count_order(benzene, 1), 3);
  EXPECT_TRUE(test::brute_isomorphic(benzene, parse_smiles("C1=CC=CC=C1")));

  EXPECT_EQ(count_order(parse_smiles("c1ccncc1"), 2), 3);
  EXPECT_EQ(count_order(parse_smiles("c1ccc2ccccc2c1"), 2), 5);
  EXPECT_EQ(count_order(parse_smiles("c1ccoc1"), 2), 2);
  EXPECT_EQ(category_of("c1cccc1"), ErrorCategory::kKekulization);
  EXPECT_EQ(category_of("cc"), ErrorCategory::kAromaticity);
}

TEST(SmilesTest, Errors) {
  EXPECT_EQ(category_of("C1CC"), ErrorCategory::kUnmatchedRingBond);
  EXPECT_EQ(category_of("F=F"), ErrorCategory::kValence);
  EXPECT_EQ(category_of("F("), ErrorCategory::kUnmatchedBranch);
  EXPECT_EQ(category_of("C)"), ErrorCategory::kUnmatchedBranch);
  EXPECT_EQ(category_of(""), ErrorCategory::kSyntax);
  EXPECT_EQ(category_of("[CH4]"), ErrorCategory::kUnsupported);
  EXPECT_EQ(category_of("CCl"), ErrorCategory::kUnsupported);
  EXPECT_EQ(category_of("C=1CC#1"), ErrorCategory::kRingBondConflict);
  EXPECT_EQ(category_of("C11"), ErrorCategory::kSelfLoop);
  EXPECT_EQ(category_of("C12CC12"), ErrorCategory::kDuplicateBond);
  EXPECT_EQ(category_of("C=="), ErrorCategory::kSyntax);
  EXPECT_FALSE(is_valid_smiles("F("));
  EXPECT_FALSE(is_valid_smiles("C1CC"));

  try {
    parse_smiles("CC(C)(C)(C)C");
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_EQ(e.category(), ErrorCategory::kValence);
    ASSERT_TRUE(e.position().has_value());
    EXPECT_EQ(*e.position(), 1U);
  }
  try {
    parse_smiles("CCX");
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_EQ(e.position(), 2U);
  }
}

TEST(SmilesTest, Writer) {
  EXPECT_EQ(write_smiles(parse_smiles("C")), "C");
  EXPECT_EQ(write_smiles(parse_smiles("FC=C=N")), "FC=C=N");
  EXPECT_EQ(write_smiles(parse_smiles("C1CC1")), "C1CC1");
  EXPECT_EQ(write_smiles(parse_smiles("CC(=O)O")), "CC(=O)O");
  EXPECT_EQ(write_smiles(parse_smiles("C1=CC=CC=C1")), "C1=CC=CC=C1");
  EXPECT_THROW(write_smiles(LabeledGraph {}), Error);
  LabeledGraph two = test::make_graph(chem(), { "C", "C" }, {});
  EXPECT_THROW(write_smiles(two), Error);
}

// Brute-force Kekulé assignment: choose a subset of the aromatic bonds to be
// double so that each atom needing a double bond gets exactly one.
bool kekule_exists(const AromaticGraph &ag) {
  const LabeledGraph &g = ag.graph;
  std::vector<int> bonds;
  for (int e = 0; e < g.num_edges(); ++e)
    if (ag.aromatic_bonds[e])
      bonds.push_back(e);
  std::vector<bool> needs(g.num_vertices(), false);
  for (int v = 0; v < g.num_vertices(); ++v)
    needs[v] = ag.aromatic_atoms[v] && g.free_capacity(v) >= 1;
  for (std::uint32_t mask = 0; mask < (1U << bonds.size()); ++mask) {
    std::vector<int> doubles(g.num_vertices(), 0);
    for (std::size_t i = 0; i < bonds.size(); ++i) {
      if (mask & (1U << i)) {
        ++doubles[g.edge(bonds[i]).u];
        ++doubles[g.edge(bonds[i]).v];
      }
    }
    bool ok = true;
    for (int v = 0; v < g.num_vertices() && ok; ++v)
      ok = doubles[v] == (needs[v] ? 1 : 0);
    if (ok)
      return true;
  }
  return false;
}

TEST(SmilesPropertyTest, KekulizationMatchesBruteForce) {
  std::mt19937_64 rng(55);
  const char *elements[] = { "C", "C", "C", "N", "O" };
  int solvable = 0, unsolvable = 0;
  for (int i = 0; i < 3000; ++i) {
    // A ring with optional chords; every bond is aromatic.
    const int n = 3 + static_cast<int>(rng() % 8);
    AromaticGraph ag;
    for (int v = 0; v < n; ++v) {
      const std::string el = elements[rng() % 5];
      const int d = *ValenceTable::core().max_valence(el);
      ag.graph.add_vertex(-1, el, d);
    }
    for (int v = 0; v < n; ++v)
      ag.graph.add_edge(v, (v + 1) % n, 1);
    const int chords = static_cast<int>(rng() % 3);
    for (int c = 0; c < chords; ++c) {
      const int u = static_cast<int>(rng() % n);
      const int v = static_cast<int>(rng() % n);
      if (u != v && !ag.graph.find_edge(u, v)
          && ag.graph.free_capacity(u) > 0 && ag.graph.free_capacity(v) > 0)
        ag.graph.add_edge(u, v, 1);
    }
    if (!test::degrees_within_bounds(ag.graph))
      continue;
    ag.aromatic_atoms.assign(n, true);
    ag.aromatic_bonds.assign(ag.graph.num_edges(), true);

    const bool expected = kekule_exists(ag);
    bool got = true;
    LabeledGraph out;
    try {
      out = kekulize(ag);
    } catch (const Error &e) {
      got = false;
      EXPECT_EQ(e.category(), ErrorCategory::kKekulization);
    }
    ASSERT_EQ(got, expected);
    if (got) {
      EXPECT_TRUE(test::degrees_within_bounds(out));
      ++solvable;
    } else {
      ++unsolvable;
    }
  }
  EXPECT_GT(solvable, 100);
  EXPECT_GT(unsolvable, 100);
}

TEST(SmilesPropertyTest, ArbitraryBytesNeverCrash) {
  std::mt19937_64 rng(56);
  const std::string biased = "CNOFcno-=#()123456789%[]. ";
  for (int i = 0; i < 100000; ++i) {
    std::string s(rng() % 40, '\0');
    for (char &c: s)
      c = (i % 2 == 0) ? static_cast<char>(rng() & 0xFF)
                       : biased[rng() % biased.size()];
    try {
      LabeledGraph g = parse_smiles(s);
      ASSERT_TRUE(validate_molecule(g, ValenceTable::core()).valid) << s;
      ASSERT_TRUE(g.is_connected()) << s;
    } catch (const Error &) {
    }
  }
}

TEST(SmilesPropertyTest, WriteParseRoundTrip) {
  std::mt19937_64 rng(57);
  for (int i = 0; i < 3000; ++i) {
    LabeledGraph g = test::random_connected_graph(chem(), rng, 14);
    const std::string s = write_smiles(g);
    LabeledGraph back = parse_smiles(s);
    ASSERT_TRUE(test::brute_isomorphic(g, back)) << s;
    ASSERT_EQ(write_smiles(back), s);
  }
}

}  // namespace
}  // namespace vgram
