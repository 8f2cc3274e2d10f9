//
// Project vgram - Copyright 2026 vgram authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "vgram/harness.h"

#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "vgram/codec.h"
#include "vgram/quantum.h"
#include "vgram/smiles.h"

namespace vgram {

std::string_view representation_name(Representation rep) {
  return rep == Representation::kSmiles ? "smiles" : "selfies";
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string mutate_smiles(std::string_view smiles, int k,
                          std::uint64_t seed) {
  std::vector<char> tokens(smiles.begin(), smiles.end());
  std::span<const char> alphabet(kSmilesMutationAlphabet.data(),
                                 kSmilesMutationAlphabet.size());
  tokens = mutate_string(std::move(tokens), alphabet, k, seed);
  return std::string(tokens.begin(), tokens.end());
}

SymbolString mutate_symbols(const SymbolString &symbols,
                            const GrammarSpec &grammar, int k,
                            std::uint64_t seed) {
  std::vector<int> alphabet(grammar.alphabet.size());
  std::iota(alphabet.begin(), alphabet.end(), 0);
  return mutate_string(symbols, std::span<const int>(alphabet), k, seed);
}

namespace {

// Canonical form of a valid result, or nullopt for an invalid one.
using Trial = std::function<std::optional<std::string>(int)>;

struct Tally {
  int valid = 0;
  std::set<std::string> forms;
};

std::string form_or_empty(const LabeledGraph &g) {
  return g.num_vertices() <= kCanonicalSizeLimit ? canonical_form(g) : "";
}

Tally run_trials(int trials, int workers, const Trial &trial) {
  Tally total;
  std::mutex merge;
  auto work = [&](int first) {
    Tally local;
    for (int t = first; t < trials; t += workers) {
      std::optional<std::string> form = trial(t);
      if (!form)
        continue;
      ++local.valid;
      if (!form->empty())
        local.forms.insert(std::move(*form));
    }
    std::lock_guard lock(merge);
    total.valid += local.valid;
    total.forms.merge(local.forms);
  };

  workers = std::max(1, std::min(workers, std::max(trials, 1)));
  if (workers == 1) {
    work(0);
    return total;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back(work, w);
  for (std::thread &t: pool)
    t.join();
  return total;
}

}  // namespace

MutationReport mutation_experiment(std::string_view start, Representation rep,
                                   int k, int trials, std::uint64_t seed,
                                   const GrammarSpec &grammar, int workers) {
  if (trials < 0)
    throw Error(ErrorCategory::kInvalidInput, "trials must be >= 0");

  MutationReport report { rep, k, trials, 0, 0.0, 0, seed };
  Tally tally;
  if (rep == Representation::kSmiles) {
    const ValenceTable table = ValenceTable::from_grammar(grammar);
    if (!is_valid_smiles(start, table))
      throw Error(ErrorCategory::kInvalidInput,
                  fmt::format("start SMILES '{}' is not valid", start));
    if (k < 0 || static_cast<std::size_t>(k) > start.size())
      throw Error(ErrorCategory::kInvalidInput,
                  "mutation count must lie in 0..length");
    tally = run_trials(trials, workers, [&](int t) -> std::optional<std::string> {
      const std::string mutated = mutate_smiles(start, k, mix_seed(seed, t));
      try {
        return form_or_empty(parse_smiles(mutated, table));
      } catch (const Error &) {
        return std::nullopt;
      }
    });
  } else {
    const ValenceTable table = ValenceTable::from_grammar(grammar);
    SymbolString symbols;
    try {
      symbols = tokenize(start, grammar);
    } catch (const Error &e) {
      throw Error(ErrorCategory::kInvalidInput,
                  fmt::format("start string is not valid: {}", e.what()));
    }
    if (!validate_molecule(decode(symbols, grammar), table).valid)
      throw Error(ErrorCategory::kInvalidInput,
                  "start string decodes to an invalid molecule");
    if (k < 0 || static_cast<std::size_t>(k) > symbols.size())
      throw Error(ErrorCategory::kInvalidInput,
                  "mutation count must lie in 0..length");
    tally = run_trials(trials, workers, [&](int t) -> std::optional<std::string> {
      const SymbolString mutated =
          mutate_symbols(symbols, grammar, k, mix_seed(seed, t));
      LabeledGraph g = decode(mutated, grammar);
      if (!validate_molecule(g, table).valid)
        return std::nullopt;
      return form_or_empty(g);
    });
  }
  report.valid = tally.valid;
  report.unique = static_cast<int>(tally.forms.size());
  report.rate = trials > 0 ? static_cast<double>(tally.valid) / trials : 0.0;
  return report;
}

GraphValidator molecule_validator(const GrammarSpec &grammar) {
  ValenceTable table = ValenceTable::from_grammar(grammar);
  return [table = std::move(table)](const LabeledGraph &g) {
    return validate_molecule(g, table).valid;
  };
}

GraphValidator experiment_validator() {
  return [](const LabeledGraph &g) { return validate_experiment(g).valid; };
}

SymbolString random_symbols(const GrammarSpec &grammar, int min_len,
                            int max_len, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> length(min_len, max_len);
  std::uniform_int_distribution<int> symbol(0, grammar.num_symbols() - 1);
  SymbolString s(static_cast<std::size_t>(length(rng)));
  for (int &x: s)
    x = symbol(rng);
  return s;
}

SamplingReport sample_random(const GrammarSpec &grammar, int min_len,
                             int max_len, int count, std::uint64_t seed,
                             const GraphValidator &validator, int workers) {
  SamplingReport report { count, min_len, max_len, 0, 0.0, 0, seed };
  if (count <= 0) {
    report.count = 0;
    return report;
  }
  if (min_len < 0 || max_len < min_len)
    throw Error(ErrorCategory::kInvalidInput,
                "length range must satisfy 0 <= min <= max");
  if (grammar.num_symbols() == 0)
    throw Error(ErrorCategory::kInvalidInput, "grammar has no symbols");

  Tally tally = run_trials(count, workers, [&](int t) -> std::optional<std::string> {
    std::mt19937_64 rng(mix_seed(seed, t));
    LabeledGraph g =
        derive_graph(grammar, random_symbols(grammar, min_len, max_len, rng));
    if (!validator(g))
      return std::nullopt;
    return form_or_empty(g);
  });
  report.valid = tally.valid;
  report.unique = static_cast<int>(tally.forms.size());
  report.rate = static_cast<double>(tally.valid) / count;
  return report;
}

std::string report_json(const MutationReport &r) {
  nlohmann::ordered_json j;
  j["representation"] = representation_name(r.rep);
  j["k"] = r.k;
  j["trials"] = r.trials;
  j["valid"] = r.valid;
  j["rate"] = r.rate;
  j["unique"] = r.unique;
  j["seed"] = r.seed;
  return j.dump();
}

std::string report_text(const MutationReport &r) {
  return fmt::format(
      "representation  k  trials  valid  rate      unique  seed\n"
      "{:<14}  {:<2} {:<7} {:<6} {:<9.6f} {:<7} {}\n",
      representation_name(r.rep), r.k, r.trials, r.valid, r.rate, r.unique,
      r.seed);
}

std::string report_json(const SamplingReport &r) {
  nlohmann::ordered_json j;
  j["count"] = r.count;
  j["min_len"] = r.min_len;
  j["max_len"] = r.max_len;
  j["valid"] = r.valid;
  j["rate"] = r.rate;
  j["unique"] = r.unique;
  j["seed"] = r.seed;
  return j.dump();
}

std::string report_text(const SamplingReport &r) {
  return fmt::format(
      "count   lengths  valid   rate      unique  seed\n"
      "{:<7} {:<8} {:<7} {:<9.6f} {:<7} {}\n",
      r.count, fmt::format("{}-{}", r.min_len, r.max_len), r.valid, r.rate,
      r.unique, r.seed);
}

OneHotMatrix to_one_hot(std::span<const int> s, int max_len,
                        const GrammarSpec &grammar) {
  if (!grammar.has_nop())
    throw Error(ErrorCategory::kInvalidInput,
                "one-hot padding needs a nop symbol at index 0");
  if (max_len < 0 || s.size() > static_cast<std::size_t>(max_len))
    throw Error(ErrorCategory::kInvalidInput,
                fmt::format("string of length {} exceeds max length {}",
                            s.size(), max_len));
  OneHotMatrix m;
  m.rows = max_len;
  m.cols = grammar.num_symbols();
  m.cells.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
  for (int r = 0; r < m.rows; ++r) {
    const int sym = r < static_cast<int>(s.size()) ? s[r] : 0;
    if (sym < 0 || sym >= m.cols)
      throw Error(ErrorCategory::kSymbolRange,
                  fmt::format("symbol index {} outside the alphabet", sym), r);
    m.cells[static_cast<std::size_t>(r) * m.cols + sym] = 1;
  }
  return m;
}

SymbolString from_one_hot(const OneHotMatrix &m) {
  if (m.rows < 0 || m.cols <= 0
      || m.cells.size() != static_cast<std::size_t>(m.rows) * m.cols)
    throw Error(ErrorCategory::kMalformedMatrix,
                "matrix dimensions do not match its cell count");
  SymbolString out;
  out.reserve(m.rows);
  for (int r = 0; r < m.rows; ++r) {
    int hot = -1;
    for (int c = 0; c < m.cols; ++c) {
      const std::uint8_t v = m.at(r, c);
      if (v > 1)
        throw Error(ErrorCategory::kMalformedMatrix,
                    fmt::format("row {} holds a value other than 0/1", r), r);
      if (v == 1) {
        if (hot >= 0)
          throw Error(ErrorCategory::kMalformedMatrix,
                      fmt::format("row {} has more than one 1", r), r);
        hot = c;
      }
    }
    if (hot < 0)
      throw Error(ErrorCategory::kMalformedMatrix,
                  fmt::format("row {} has no 1", r), r);
    out.push_back(hot);
  }
  while (!out.empty() && out.back() == 0)
    out.pop_back();
  return out;
}

std::string one_hot_csv(const OneHotMatrix &m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.rows) * (2 * m.cols));
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      if (c > 0)
        out += ',';
      out += m.at(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string one_hot_alphabet(const GrammarSpec &grammar) {
  std::string out;
  for (const SymbolDef &s: grammar.alphabet)
    out += s.name + '\n';
  return out;
}

OneHotMatrix parse_one_hot_csv(std::string_view csv) {
  OneHotMatrix m;
  std::size_t line_start = 0;
  while (line_start < csv.size()) {
    std::size_t line_end = csv.find('\n', line_start);
    if (line_end == std::string_view::npos)
      line_end = csv.size();
    std::string_view line = csv.substr(line_start, line_end - line_start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    line_start = line_end + 1;
    if (line.empty())
      continue;

    int cols = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      const bool cell = i % 2 == 0;
      if (cell && (c == '0' || c == '1')) {
        m.cells.push_back(static_cast<std::uint8_t>(c - '0'));
        ++cols;
      } else if (cell || c != ',') {
        throw Error(ErrorCategory::kMalformedMatrix,
                    fmt::format("row {}: unexpected character '{}'", m.rows, c),
                    m.rows);
      }
    }
    if (line.back() == ',')
      throw Error(ErrorCategory::kMalformedMatrix,
                  fmt::format("row {} ends with a comma", m.rows), m.rows);
    if (m.rows > 0 && cols != m.cols)
      throw Error(ErrorCategory::kMalformedMatrix,
                  fmt::format("row {} has {} columns, expected {}", m.rows,
                              cols, m.cols),
                  m.rows);
    m.cols = cols;
    ++m.rows;
  }
  return m;
}

LabeledGraph mdma_graph() {
  const GrammarSpec &g = chem_grammar();
  auto type_of = [&](std::string_view label) {
    for (int t = 0; t < static_cast<int>(g.types.size()); ++t)
      if (g.types[t].label == label)
        return t;
    throw Error(ErrorCategory::kUnknownElement, "missing chemistry type");
  };
  LabeledGraph m;
  for (std::string_view a: { "C", "N", "C", "C", "C", "C", "C", "C", "C", "O",
                             "C", "O", "C", "C" }) {
    const int t = type_of(a);
    m.add_vertex(t, g.types[t].label, g.types[t].max_degree);
  }
  const int bonds[][3] = { { 0, 1, 1 },  { 1, 2, 1 },   { 2, 3, 1 },
                           { 2, 4, 1 },  { 4, 5, 1 },   { 5, 6, 2 },
                           { 6, 7, 1 },  { 7, 8, 2 },   { 8, 9, 1 },
                           { 9, 10, 1 }, { 10, 11, 1 }, { 11, 12, 1 },
                           { 12, 8, 1 }, { 12, 13, 2 }, { 13, 5, 1 } };
  for (const auto &b: bonds)
    m.add_edge(b[0], b[1], b[2]);
  return m;
}

}  // namespace vgram
