//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "vgram/chem.h"
#include "vgram/codec.h"
#include "vgram/derive.h"
#include "vgram/error.h"
#include "vgram/grammar_json.h"
#include "vgram/harness.h"
#include "vgram/quantum.h"
#include "vgram/smiles.h"

namespace vgram::cli {
namespace {

// Thrown for configuration problems; maps to kExitUsage.
struct UsageError {
  std::string message;
};

struct Config {
  std::string grammar;
  std::string format = "text";

  std::string rep = "selfies";
  int k = 1;
  int trials = 10000;
  std::uint64_t seed = 0;
  std::string start;
  int workers = 1;

  int count = 1000;
  int min_len = 1;
  int max_len = 20;

  std::string types;
  std::optional<int> cap;
  int ring_orders = 1;
  std::string output;

  std::string alphabet_out;
  bool reverse = false;
  std::string decode_output = "smiles";
};

std::string read_file(const std::string &path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw UsageError { fmt::format("cannot read file '{}'", path) };
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

GrammarSpec load_grammar(const std::string &source) {
  std::string name = source;
  if (name.empty()) {
    const char *env = std::getenv(kGrammarEnv);
    name = env != nullptr && *env != '\0' ? env : "chem";
  }
  if (name == "chem")
    return chem_grammar();
  if (name == "quantum")
    return quantum_grammar();

  GrammarSpec spec;
  try {
    spec = grammar_from_json(read_file(name));
  } catch (const Error &e) {
    throw UsageError { fmt::format("grammar '{}': {}: {}", name,
                                   category_name(e.category()), e.what()) };
  }
  std::vector<GrammarViolation> violations = validate_grammar(spec);
  if (!violations.empty()) {
    std::string msg = fmt::format("grammar '{}' is invalid:", name);
    for (const GrammarViolation &v: violations)
      msg += fmt::format("\n  X_{} / {}: {}", v.state, v.symbol, v.message);
    throw UsageError { msg };
  }
  return spec;
}

bool is_quantum(const GrammarSpec &g) {
  const ComponentTable &table = ComponentTable::standard();
  return std::all_of(g.types.begin(), g.types.end(), [&](const TypeDef &t) {
    return table.max_degree(t.label).has_value();
  });
}

// Per-record diagnostics: "line L, column C: category: message".
class Diagnostics {
public:
  explicit Diagnostics(std::ostream &err): err_(err) { }

  void report(std::size_t line, const Error &e) {
    failed_ = true;
    if (e.position())
      err_ << fmt::format("line {}, column {}: {}: {}\n", line,
                          *e.position() + 1, category_name(e.category()),
                          e.what());
    else
      err_ << fmt::format("line {}: {}: {}\n", line,
                          category_name(e.category()), e.what());
  }

  void report(std::size_t line, std::string_view category,
              std::string_view message) {
    failed_ = true;
    err_ << fmt::format("line {}: {}: {}\n", line, category, message);
  }

  int exit_code() const { return failed_ ? kExitRecordFailed : kExitOk; }

private:
  std::ostream &err_;
  bool failed_ = false;
};

std::string_view strip_cr(const std::string &line) {
  std::string_view s(line);
  if (!s.empty() && s.back() == '\r')
    s.remove_suffix(1);
  return s;
}

template <class Fn>
int for_each_line(std::istream &in, std::ostream &out, std::ostream &err,
                  Fn &&fn) {
  Diagnostics diag(err);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    try {
      out << fn(strip_cr(line), number, diag) << '\n';
    } catch (const Error &e) {
      diag.report(number, e);
      out << '\n';
    }
  }
  return diag.exit_code();
}

std::string graph_json(const LabeledGraph &g) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (const Vertex &v: g.vertices())
    vertices.push_back(v.label);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge &e: g.edges())
    edges.push_back({ e.u, e.v, e.order });
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  return j.dump();
}

int cmd_decode(const Config &cfg, const GrammarSpec &g, std::istream &in,
               std::ostream &out, std::ostream &err) {
  if (cfg.decode_output != "smiles" && cfg.decode_output != "graph")
    throw UsageError { "--output must be smiles or graph" };
  const bool as_graph = cfg.decode_output == "graph";
  return for_each_line(in, out, err,
                       [&](std::string_view line, std::size_t, Diagnostics &) {
                         const SymbolString s = tokenize(line, g);
                         return as_graph ? graph_json(decode(s, g))
                                         : decode_to_smiles(s, g);
                       });
}

int cmd_encode(const GrammarSpec &g, std::istream &in, std::ostream &out,
               std::ostream &err) {
  return for_each_line(in, out, err,
                       [&](std::string_view line, std::size_t, Diagnostics &) {
                         return to_text(encode_smiles(line, g), g);
                       });
}

int cmd_roundtrip(const GrammarSpec &g, std::istream &in, std::ostream &out,
                  std::ostream &err) {
  const ValenceTable table = ValenceTable::from_grammar(g);
  return for_each_line(
      in, out, err,
      [&](std::string_view line, std::size_t number,
          Diagnostics &diag) -> std::string {
        const LabeledGraph original = parse_smiles(line, table);
        const LabeledGraph back = decode(encode(original, g), g);
        if (canonical_form(original) == canonical_form(back))
          return "pass";
        diag.report(number, "roundtrip",
                    "decoded graph is not isomorphic to the input");
        return "fail";
      });
}

int cmd_mutate(const Config &cfg, const GrammarSpec &g, std::ostream &out) {
  Representation rep;
  if (cfg.rep == "smiles")
    rep = Representation::kSmiles;
  else if (cfg.rep == "selfies")
    rep = Representation::kSelfies;
  else
    throw UsageError { "--rep must be smiles or selfies" };

  std::string start = cfg.start;
  if (start.empty()) {
    start = write_smiles(mdma_graph());
    if (rep == Representation::kSelfies)
      start = to_text(encode_smiles(start, g), g);
  }
  MutationReport report;
  try {
    report = mutation_experiment(start, rep, cfg.k, cfg.trials, cfg.seed, g,
                                 cfg.workers);
  } catch (const Error &e) {
    throw UsageError { e.what() };
  }
  out << (cfg.format == "json" ? report_json(report) + "\n"
                               : report_text(report));
  return kExitOk;
}

int cmd_sample(const Config &cfg, const GrammarSpec &g, std::ostream &out) {
  GraphValidator validator =
      is_quantum(g) ? experiment_validator() : molecule_validator(g);
  SamplingReport report;
  try {
    report = sample_random(g, cfg.min_len, cfg.max_len, cfg.count, cfg.seed,
                           validator, cfg.workers);
  } catch (const Error &e) {
    throw UsageError { e.what() };
  }
  out << (cfg.format == "json" ? report_json(report) + "\n"
                               : report_text(report));
  return kExitOk;
}

int cmd_derive_grammar(const Config &cfg, std::ostream &out) {
  GrammarSpec spec;
  try {
    DeriveOptions options;
    options.multiplicity_cap = cfg.cap;
    options.ring_orders = cfg.ring_orders;
    spec = derive_grammar(TypeSpec::parse(cfg.types), options);
  } catch (const Error &e) {
    throw UsageError { e.what() };
  }
  const std::string text =
      cfg.format == "text" && cfg.output.empty() ? grammar_table(spec)
                                                 : grammar_to_json(spec);
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!(f << text))
      throw UsageError { fmt::format("cannot write '{}'", cfg.output) };
  }
  return kExitOk;
}

int cmd_onehot(const Config &cfg, const GrammarSpec &g, std::istream &in,
               std::ostream &out, std::ostream &err) {
  if (cfg.max_len < 0)
    throw UsageError { "--max-len must be >= 0" };
  if (!g.has_nop())
    throw UsageError { "one-hot export needs a grammar with a nop symbol" };
  if (!cfg.alphabet_out.empty()) {
    std::ofstream f(cfg.alphabet_out, std::ios::binary);
    if (!(f << one_hot_alphabet(g)))
      throw UsageError { fmt::format("cannot write '{}'", cfg.alphabet_out) };
  }

  if (!cfg.reverse) {
    return for_each_line(
        in, out, err,
        [&](std::string_view line, std::size_t, Diagnostics &) {
          std::string csv = one_hot_csv(to_one_hot(tokenize(line, g),
                                                   cfg.max_len, g));
          if (!csv.empty())
            csv.pop_back();
          return csv;
        });
  }

  // Reverse: blocks of max_len CSV rows back to symbol text.
  Diagnostics diag(err);
  std::string line, block;
  std::size_t number = 0, record = 0;
  int rows = 0;
  auto flush = [&] {
    ++record;
    try {
      OneHotMatrix m = parse_one_hot_csv(block);
      if (m.cols != g.num_symbols())
        throw Error(ErrorCategory::kMalformedMatrix,
                    fmt::format("matrix has {} columns, alphabet has {}",
                                m.cols, g.num_symbols()));
      out << to_text(from_one_hot(m), g) << '\n';
    } catch (const Error &e) {
      diag.report(record, e);
      out << '\n';
    }
    block.clear();
    rows = 0;
  };
  if (cfg.max_len == 0)
    throw UsageError { "--reverse needs --max-len >= 1" };
  while (std::getline(in, line)) {
    ++number;
    block += line;
    block += '\n';
    if (++rows == cfg.max_len)
      flush();
  }
  if (rows > 0) {
    diag.report(record + 1, "malformed matrix",
                fmt::format("trailing block of {} rows", rows));
    out << '\n';
  }
  return diag.exit_code();
}

int cmd_grammar_dump(const Config &cfg, const GrammarSpec &g,
                     std::ostream &out) {
  out << (cfg.format == "json" ? grammar_to_json(g) : grammar_table(g));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
  Config cfg;
  CLI::App app { "Robust grammar-based string representation for "
                 "molecules and other constrained graphs",
                 "vgram" };
  app.require_subcommand(1);
  app.add_option("--grammar", cfg.grammar,
                 fmt::format("chem, quantum or a grammar JSON path "
                             "(default: ${} or chem)",
                             kGrammarEnv));
  app.add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({ "text", "json" }));

  CLI::App *decode = app.add_subcommand("decode", "Symbol strings to SMILES");
  decode->add_option("--output", cfg.decode_output, "smiles or graph")
      ->check(CLI::IsMember({ "smiles", "graph" }));
  CLI::App *encode = app.add_subcommand("encode", "SMILES to symbol strings");
  CLI::App *roundtrip = app.add_subcommand(
      "roundtrip", "Check encode/decode isomorphism per SMILES line");

  CLI::App *mutate = app.add_subcommand("mutate", "Random mutation experiment");
  mutate->add_option("--rep", cfg.rep, "smiles or selfies")
      ->check(CLI::IsMember({ "smiles", "selfies" }));
  mutate->add_option("--k", cfg.k, "Mutations per trial")
      ->check(CLI::NonNegativeNumber);
  mutate->add_option("--trials", cfg.trials)->check(CLI::NonNegativeNumber);
  mutate->add_option("--seed", cfg.seed);
  mutate->add_option("--start", cfg.start, "Start string (default: MDMA)");
  mutate->add_option("--workers", cfg.workers)->check(CLI::PositiveNumber);

  CLI::App *sample = app.add_subcommand("sample", "Decode random strings");
  sample->add_option("--count", cfg.count)->check(CLI::NonNegativeNumber);
  sample->add_option("--min-len", cfg.min_len)->check(CLI::NonNegativeNumber);
  sample->add_option("--max-len", cfg.max_len)->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", cfg.seed);
  sample->add_option("--workers", cfg.workers)->check(CLI::PositiveNumber);

  CLI::App *derive =
      app.add_subcommand("derive-grammar", "Build a grammar from vertex types");
  derive->add_option("--types", cfg.types, "e.g. C:4,N:3,O:2,F:1")
      ->required();
  derive->add_option("--cap", cfg.cap, "Largest edge multiplicity")
      ->check(CLI::PositiveNumber);
  derive->add_option("--ring-orders", cfg.ring_orders)
      ->check(CLI::PositiveNumber);
  derive->add_option("-o,--output", cfg.output, "Write JSON to this path");

  CLI::App *onehot = app.add_subcommand("onehot", "One-hot CSV export");
  onehot->add_option("--max-len", cfg.max_len, "Rows per matrix")->required();
  onehot->add_option("--alphabet", cfg.alphabet_out,
                     "Write the column order to this path");
  onehot->add_flag("--reverse", cfg.reverse, "CSV blocks back to strings");

  CLI::App *dump = app.add_subcommand("grammar-dump", "Print the rule table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const GrammarSpec grammar =
        *derive ? GrammarSpec {} : load_grammar(cfg.grammar);
    if (*decode)
      return cmd_decode(cfg, grammar, in, out, err);
    if (*encode)
      return cmd_encode(grammar, in, out, err);
    if (*roundtrip)
      return cmd_roundtrip(grammar, in, out, err);
    if (*mutate)
      return cmd_mutate(cfg, grammar, out);
    if (*sample)
      return cmd_sample(cfg, grammar, out);
    if (*derive)
      return cmd_derive_grammar(cfg, out);
    if (*onehot)
      return cmd_onehot(cfg, grammar, in, out, err);
    if (*dump)
      return cmd_grammar_dump(cfg, grammar, out);
  } catch (const UsageError &e) {
    err << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << category_name(e.category()) << ": " << e.what()
        << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vgram::cli
