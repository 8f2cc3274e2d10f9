//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/grammar.h"

#include <gtest/gtest.h>

#include "vgram/chem.h"
#include "vgram/derive.h"
#include "vgram/error.h"
#include "vgram/quantum.h"

namespace vgram {
namespace {

bool has_message(const std::vector<GrammarViolation> &vs,
                 std::string_view needle) {
  for (const GrammarViolation &v: vs)
    if (v.message.find(needle) != std::string::npos)
      return true;
  return false;
}

TEST(GrammarTest, BuiltinGrammarsValidate) {
  EXPECT_TRUE(validate_grammar(chem_grammar()).empty());
  EXPECT_TRUE(validate_grammar(quantum_grammar()).empty());
}

TEST(GrammarTest, BondOrderAboveMultiplicityIsReported) {
  GrammarSpec g = chem_grammar();
  const int c = *g.find_symbol("[C]");
  g.production(3, c) = Production::vertex(g.alphabet[c].type_id, 2, 2);

  std::vector<GrammarViolation> vs = validate_grammar(g);
  ASSERT_FALSE(vs.empty());
  EXPECT_EQ(vs[0].state, 3);
  EXPECT_EQ(vs[0].symbol, c);
  EXPECT_TRUE(has_message(vs, "exceeds requested multiplicity"));
}

TEST(GrammarTest, MissingRowIsReported) {
  GrammarSpec g = chem_grammar();
  g.productions.resize(g.productions.size() - g.alphabet.size());
  EXPECT_TRUE(has_message(validate_grammar(g), "table size mismatch"));
}

TEST(GrammarTest, SuccessorBeyondCapacityIsReported) {
  GrammarSpec g = chem_grammar();
  const int o = *g.find_symbol("[O]");
  g.production(1, o) = Production::vertex(g.alphabet[o].type_id, 1, 2);
  EXPECT_TRUE(has_message(validate_grammar(g), "remaining capacity"));
}

TEST(GrammarTest, MisplacedOperatorsAreReported) {
  GrammarSpec g = chem_grammar();
  const int branch = *g.find_symbol("[Branch]");
  const int ring = *g.find_symbol("[Ring]");
  g.production(1, branch) = Production::branch(0, 1);
  g.production(0, ring) = Production::ring(1);
  g.production(0, *g.find_symbol("[C]")) = Production::ring(1);

  std::vector<GrammarViolation> vs = validate_grammar(g);
  EXPECT_TRUE(has_message(vs, "needs j >= 2"));
  EXPECT_TRUE(has_message(vs, "ring production in state X_0"));
  EXPECT_TRUE(has_message(vs, "non-ring symbol"));
}

TEST(GrammarTest, HeaderProblemsAreReported) {
  GrammarSpec g = chem_grammar();
  g.alphabet[3].name = g.alphabet[2].name;
  g.types[0].max_degree = 0;
  std::vector<GrammarViolation> vs = validate_grammar(g);
  EXPECT_TRUE(has_message(vs, "duplicate symbol name"));
  EXPECT_TRUE(has_message(vs, "max degree 0"));

  GrammarSpec nop_late = chem_grammar();
  std::swap(nop_late.alphabet[0].kind, nop_late.alphabet[1].kind);
  EXPECT_TRUE(has_message(validate_grammar(nop_late), "must sit at index 0"));
}

TEST(GrammarTest, SymbolNumbers) {
  EXPECT_EQ(symbol_number(chem_grammar(), "[nop]"), 0);
  EXPECT_EQ(symbol_number(chem_grammar(), "[C]"), 1);
  EXPECT_EQ(symbol_number(chem_grammar(), "[#Ring]"), 16);
  EXPECT_EQ(symbol_number(quantum_grammar(), "[SPDC]"), 1);
  EXPECT_EQ(symbol_number(quantum_grammar(), "[BS]"), 2);
  EXPECT_EQ(symbol_number(quantum_grammar(), "[Branch]"), 8);
  EXPECT_EQ(symbol_number(quantum_grammar(), "[Ring]"), 9);

  try {
    symbol_number(chem_grammar(), "[Xx]");
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_EQ(e.category(), ErrorCategory::kUnknownToken);
  }
}

TEST(GrammarTest, BondPrefixes) {
  EXPECT_EQ(bond_prefix(1), "");
  EXPECT_EQ(bond_prefix(2), "=");
  EXPECT_EQ(bond_prefix(3), "#");
  EXPECT_EQ(bond_prefix(4), "$");
  EXPECT_EQ(bond_prefix(6), "6*");
}

}  // namespace
}  // namespace vgram
