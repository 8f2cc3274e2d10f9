//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "vgram/chem.h"
#include "vgram/derive.h"
#include "vgram/grammar_json.h"

namespace vgram::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string> &args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return { code, out.str(), err.str() };
}

std::filesystem::path temp_path(const std::string &name) {
  return std::filesystem::temp_directory_path()
         / ("vgram_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(CliTest, Decode) {
  Result r = invoke({ "decode" }, "[F][=C][=C][#N]\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "FC=C=N\n");

  r = invoke({ "decode" }, "[Xx]\n");
  EXPECT_EQ(r.code, kExitRecordFailed);
  EXPECT_EQ(r.out, "\n");
  EXPECT_NE(r.err.find("unknown token"), std::string::npos);
  EXPECT_NE(r.err.find("line 1, column 1"), std::string::npos);
}

TEST(CliTest, BatchKeepsLineAlignment) {
  const Result r = invoke({ "decode" }, "[C][O]\n[Qq]\n\n[O][#C]\r\n");
  EXPECT_EQ(r.code, kExitRecordFailed);
  EXPECT_EQ(r.out, "CO\n\n\nO=C\n");
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(CliTest, DecodeGraphOutput) {
  const Result r = invoke({ "--grammar", "quantum", "decode", "--output",
                            "graph" },
                          "[SPDC][BS]\n");
  EXPECT_EQ(r.code, kExitOk);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["vertices"], nlohmann::json({ "SPDC", "BS" }));
  EXPECT_EQ(j["edges"].size(), 1U);
}

TEST(CliTest, EncodeAndRoundtrip) {
  Result r = invoke({ "encode" }, "C\nC1CC1\nF=F\n");
  EXPECT_EQ(r.code, kExitRecordFailed);
  EXPECT_EQ(r.out, "[C]\n[C][C][C][Ring][C]\n\n");
  EXPECT_NE(r.err.find("line 3"), std::string::npos);

  r = invoke({ "roundtrip" }, "CNC(C)CC1=CC=C2OCOC2=C1\nc1ccccc1\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "pass\npass\n");
}

TEST(CliTest, MutateReport) {
  const Result r = invoke({ "--format", "json", "mutate", "--rep", "selfies",
                            "--k", "3", "--trials", "10000", "--seed", "5" });
  EXPECT_EQ(r.code, kExitOk);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rate"], 1.0);
  EXPECT_EQ(j["trials"], 10000);
  EXPECT_EQ(j["seed"], 5);

  const Result text =
      invoke({ "mutate", "--rep", "smiles", "--k", "1", "--trials", "100" });
  EXPECT_EQ(text.code, kExitOk);
  EXPECT_NE(text.out.find("smiles"), std::string::npos);

  EXPECT_EQ(invoke({ "mutate", "--rep", "smiles", "--start", "C1CC" }).code,
            kExitUsage);
}

TEST(CliTest, SampleIsReproducible) {
  const std::vector<std::string> args { "--format", "json", "sample",
                                        "--count",  "500",  "--seed",
                                        "17",       "--workers", "3" };
  const Result a = invoke(args);
  const Result b = invoke(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["rate"], 1.0);

  const Result q = invoke({ "--grammar", "quantum", "sample", "--count",
                            "300" });
  EXPECT_EQ(q.code, kExitOk);
}

TEST(CliTest, DeriveGrammarAndGrammarFiles) {
  const std::filesystem::path path = temp_path("grammar.json");
  Result r = invoke({ "derive-grammar", "--types", "C:4,N:3,O:2,F:1", "--cap",
                      "3", "--ring-orders", "3", "-o", path.string() });
  ASSERT_EQ(r.code, kExitOk);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(grammar_from_json(ss.str()), chem_grammar());

  r = invoke({ "--grammar", path.string(), "decode" }, "[F][=C][=C][#N]\n");
  EXPECT_EQ(r.out, "FC=C=N\n");

  ::setenv(kGrammarEnv, "quantum", 1);
  r = invoke({ "decode", "--output", "graph" }, "[SPDC]\n");
  ::unsetenv(kGrammarEnv);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("SPDC"), std::string::npos);

  std::ofstream(path) << "{\"version\": 1}";
  r = invoke({ "--grammar", path.string(), "decode" }, "[C]\n");
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("malformed grammar"), std::string::npos);
  std::filesystem::remove(path);

  EXPECT_EQ(invoke({ "--grammar", "/nonexistent/g.json", "decode" }).code,
            kExitUsage);
  EXPECT_EQ(invoke({ "derive-grammar", "--types", "C:0" }).code, kExitUsage);
}

TEST(CliTest, GrammarDump) {
  Result r = invoke({ "grammar-dump" });
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("[#Branch]"), std::string::npos);

  r = invoke({ "--grammar", "quantum", "--format", "json", "grammar-dump" });
  EXPECT_EQ(nlohmann::json::parse(r.out)["r"], 3);
}

TEST(CliTest, OneHot) {
  const std::filesystem::path alphabet = temp_path("alphabet.txt");
  Result r = invoke({ "onehot", "--max-len", "3", "--alphabet",
                      alphabet.string() },
                    "[C][O]\n[C][C][C][C]\n");
  EXPECT_EQ(r.code, kExitRecordFailed);
  std::istringstream rows(r.out);
  std::string line;
  int count = 0;
  while (std::getline(rows, line))
    ++count;
  EXPECT_EQ(count, 4);
  std::ifstream names(alphabet);
  std::getline(names, line);
  EXPECT_EQ(line, "[nop]");
  std::filesystem::remove(alphabet);

  const Result ok = invoke({ "onehot", "--max-len", "4" }, "[F][=C]\n[O]\n");
  ASSERT_EQ(ok.code, kExitOk);
  const Result back = invoke({ "onehot", "--reverse", "--max-len", "4" },
                             ok.out);
  EXPECT_EQ(back.code, kExitOk);
  EXPECT_EQ(back.out, "[F][=C]\n[O]\n");
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({ "frobnicate" }).code, kExitUsage);
  EXPECT_EQ(invoke({ "decode", "--bogus" }).code, kExitUsage);
  EXPECT_EQ(invoke({ "mutate", "--rep", "xml" }).code, kExitUsage);
  EXPECT_EQ(invoke({ "--help" }).code, kExitOk);
}

}  // namespace
}  // namespace vgram::cli
