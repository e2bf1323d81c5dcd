// Copyright 2026 The patternq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "patternq/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "patternq/circuit.hpp"
#include "patternq/patterns.hpp"
#include "patternq/verify.hpp"

namespace patternq::cli {

using nlohmann::json;

void to_json(json& j, const RunReport& r) {
  j = json{{"command", r.command},
           {"rank", r.rank},
           {"results", r.results},
           {"pass", r.pass},
           {"timing_ms", r.timing_ms}};
}

void from_json(const json& j, RunReport& r) {
  j.at("command").get_to(r.command);
  j.at("rank").get_to(r.rank);
  r.results = j.at("results");
  j.at("pass").get_to(r.pass);
  j.at("timing_ms").get_to(r.timing_ms);
}

namespace {

/// Invalid user input detected after option parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string format_number(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

std::string format_state(const StateVector& state) {
  std::string out = "[";
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (i > 0) out += ", ";
    out += format_number(state[i] == 0.0 ? 0.0 : state[i]);  // no "-0"
  }
  return out + "]";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Each command fills the report and writes its own text rendering.
struct Outcome {
  RunReport report;
  std::string text;
};

Outcome cmd_basis(unsigned rank) {
  if (rank == 0 || rank > kDefaultMaxRank) {
    throw UsageError("--rank must be in [1, " + std::to_string(kDefaultMaxRank) + "]");
  }
  const PatternBasis b = basis(rank);
  Outcome o;
  o.report.command = "basis";
  o.report.rank = rank;
  std::ostringstream text;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const PatternVector& m = b.member(i);
    const std::string ratio = to_string(imbalance_ratio(m));
    o.report.results.push_back({{"index", i}, {"pattern", m.to_string()}, {"ratio", ratio}});
    text << i << ": " << m.to_string() << "  ratio=" << ratio << '\n';
  }
  o.text = text.str();
  return o;
}

PatternVector pattern_argument(const std::optional<std::string>& pattern,
                               std::optional<unsigned> rank, std::optional<std::uint64_t> index) {
  if (pattern) {
    if (rank || index) throw UsageError("use either --pattern or --rank with --index");
    return PatternVector::parse(*pattern);
  }
  if (!rank || !index) throw UsageError("need --pattern, or --rank together with --index");
  if (*rank == 0 || *rank > kDefaultMaxRank) {
    throw UsageError("--rank must be in [1, " + std::to_string(kDefaultMaxRank) + "]");
  }
  if (*index >= pattern_length(*rank)) {
    throw UsageError("--index must be below " + std::to_string(pattern_length(*rank)));
  }
  return hierarchy_member(*rank, *index);
}

Outcome cmd_classify(const PatternVector& hidden, bool with_state, bool faithful) {
  const ClassificationResult r = classify(hidden, {.keep_states = with_state, .faithful = faithful});
  Outcome o;
  o.report.command = "classify";
  o.report.rank = hidden.rank();
  json entry{{"pattern", hidden.to_string()},
             {"index", r.index},
             {"bits", r.bits.to_string()},
             {"probability", r.probability},
             {"queries_used", r.queries_used},
             {"negated", r.negated},
             {"out_of_promise", r.out_of_promise},
             {"faithful", faithful}};
  std::ostringstream text;
  text << "pattern: " << hidden.to_string() << '\n'
       << "index: " << r.index << '\n'
       << "bits: " << r.bits.to_string() << '\n'
       << "probability: " << format_number(r.probability) << '\n'
       << "queries_used: " << r.queries_used << '\n'
       << "negated: " << yes_no(r.negated) << '\n'
       << "out_of_promise: " << yes_no(r.out_of_promise) << '\n'
       << "faithful: " << yes_no(faithful) << '\n';
  if (with_state) {
    std::vector<double> amps(r.final_state->amplitudes().begin(), r.final_state->amplitudes().end());
    for (double& a : amps) a = a == 0.0 ? 0.0 : a;
    entry["state"] = amps;
    text << "state: " << format_state(*r.final_state) << '\n';
  }
  if (r.out_of_promise) {
    text << "warning: out-of-promise input; the outcome above is only the most likely one\n";
  }
  o.report.results.push_back(std::move(entry));
  o.text = text.str();
  return o;
}

Outcome cmd_verify(unsigned rank_max) {
  if (rank_max == 0 || rank_max > kMaxVerifyRank) {
    throw UsageError("--rank-max must be in [1, " + std::to_string(kMaxVerifyRank) + "]");
  }
  const auto checks = run_verification(rank_max);
  Outcome o;
  o.report.command = "verify";
  o.report.rank = rank_max;
  std::ostringstream text;
  std::size_t ok = 0;
  for (const auto& c : checks) {
    ok += c.ok();
    o.report.results.push_back({{"name", c.name},
                                {"rank", c.rank},
                                {"passed", c.passed},
                                {"total", c.total},
                                {"ok", c.ok()}});
    text << (c.ok() ? "PASS " : "FAIL ");
    if (c.rank > 0) text << "n=" << c.rank << ' ';
    text << c.name << ": " << c.passed << '/' << c.total << '\n';
  }
  o.report.pass = ok == checks.size();
  text << "verify: " << ok << '/' << checks.size() << " checks passed\n";
  o.text = text.str();
  return o;
}

Outcome cmd_sample(const PatternVector& hidden, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw UsageError("--shots must be at least 1");
  const ClassificationResult r = classify(hidden, {.keep_states = true});
  const Histogram h = sample(*r.final_state, shots, seed);
  Outcome o;
  o.report.command = "sample";
  o.report.rank = hidden.rank();
  std::ostringstream text;
  text << "pattern: " << hidden.to_string() << '\n'
       << "shots: " << shots << '\n'
       << "seed: " << seed << '\n';
  json counts = json::object();
  for (const auto& [index, count] : h.counts) {
    const std::string key = h.outcome_bits(index).to_string();
    counts[key] = count;
    text << key << ": " << count << '\n';
  }
  o.report.results.push_back(
      {{"pattern", hidden.to_string()}, {"shots", shots}, {"seed", seed}, {"counts", counts}});
  o.text = text.str();
  return o;
}

Outcome cmd_export(const PatternVector& hidden, const std::optional<std::string>& path) {
  const CircuitSpec c = build_circuit(hidden.rank(), hidden);
  const std::string listing = export_text(c);
  const auto lines = static_cast<std::size_t>(std::count(listing.begin(), listing.end(), '\n'));
  Outcome o;
  o.report.command = "export";
  o.report.rank = hidden.rank();
  json entry{{"pattern", hidden.to_string()}, {"lines", lines}};
  if (path) {
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + *path + " for writing");
    file << listing;
    file.close();
    if (!file) throw std::runtime_error("failed writing " + *path);
    entry["path"] = *path;
    o.text = "pattern: " + hidden.to_string() + "\nlines: " + std::to_string(lines) +
             "\npath: " + *path + "\n";
  } else {
    entry["text"] = listing;
    o.text = listing;
  }
  o.report.results.push_back(std::move(entry));
  return o;
}

Outcome cmd_game(unsigned rank, std::uint64_t seed, bool allow_negation) {
  if (rank == 0 || rank > 4) throw UsageError("--rank must be in [1, 4]");
  GameOptions options;
  options.allow_negation = allow_negation;
  const GameTranscript t = play_game(rank, seed, options);
  PatternVector hidden = hierarchy_member(rank, t.bob_index);
  if (t.bob_negated) hidden = negate(hidden);
  Outcome o;
  o.report.command = "game";
  o.report.rank = rank;
  o.report.results.push_back({{"seed", t.seed},
                              {"bob_pattern", hidden.to_string()},
                              {"bob_index", t.bob_index},
                              {"bob_negated", t.bob_negated},
                              {"alice_index", t.alice_index},
                              {"alice_negated", t.alice_negated},
                              {"disambiguation_used", t.disambiguation_used},
                              {"queries", t.queries},
                              {"winner", to_string(t.winner)}});
  o.report.pass = t.winner == Player::Alice;
  std::ostringstream text;
  text << "seed: " << t.seed << '\n'
       << "bob_pattern: " << hidden.to_string() << '\n'
       << "bob_index: " << t.bob_index << '\n'
       << "bob_negated: " << yes_no(t.bob_negated) << '\n'
       << "alice_index: " << t.alice_index << '\n'
       << "alice_negated: " << yes_no(t.alice_negated) << '\n'
       << "disambiguation_used: " << yes_no(t.disambiguation_used) << '\n'
       << "queries: " << t.queries << '\n'
       << "winner: " << to_string(t.winner) << '\n';
  o.text = text.str();
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for one-query classification of imbalanced Boolean functions"};
  app.name("patternq");
  app.require_subcommand(1);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Report timing_ms as 0 so JSON output is reproducible");

  bool json_output = false;
  auto add_json = [&json_output](CLI::App* sub) {
    sub->add_flag("--json", json_output, "Emit the JSON report instead of text");
  };

  unsigned basis_rank = 0;
  std::string basis_format = "text";
  auto* basis_cmd = app.add_subcommand("basis", "List the pattern basis of a rank");
  basis_cmd->add_option("--rank", basis_rank, "Rank n (patterns of 4^n bits)")->required();
  basis_cmd->add_option("--format", basis_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_json(basis_cmd);

  std::optional<std::string> pattern;
  std::optional<unsigned> rank;
  std::optional<std::uint64_t> index;
  bool with_state = false, faithful = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a hidden pattern with one query");
  classify_cmd->add_option("--pattern", pattern, "Pattern bits, MSB-first");
  classify_cmd->add_option("--rank", rank, "Rank of a basis member to classify");
  classify_cmd->add_option("--index", index, "Index of the basis member");
  classify_cmd->add_flag("--state", with_state, "Print the pre-measurement state");
  classify_cmd->add_flag("--faithful", faithful, "Simulate the |-> output register explicitly");
  add_json(classify_cmd);

  unsigned rank_max = kMaxVerifyRank;
  auto* verify_cmd = app.add_subcommand("verify", "Run every invariant check");
  verify_cmd->add_option("--rank-max", rank_max, "Check ranks 1..rank-max");
  add_json(verify_cmd);

  std::string sample_pattern;
  std::uint64_t shots = 2048, seed = 0;
  auto* sample_cmd = app.add_subcommand("sample", "Sample measurement outcomes");
  sample_cmd->add_option("--pattern", sample_pattern, "Pattern bits, MSB-first")->required();
  sample_cmd->add_option("--shots", shots, "Number of shots");
  sample_cmd->add_option("--seed", seed, "Random seed");
  add_json(sample_cmd);

  std::string export_pattern;
  std::optional<std::string> out_path;
  auto* export_cmd = app.add_subcommand("export", "Write the circuit as text");
  export_cmd->add_option("--pattern", export_pattern, "Pattern bits, MSB-first")->required();
  export_cmd->add_option("--out", out_path, "Output file (stdout when omitted)");
  add_json(export_cmd);

  unsigned game_rank = 1;
  std::uint64_t game_seed = 0;
  bool allow_negation = false;
  auto* game_cmd = app.add_subcommand("game", "Play one round of the classification game");
  game_cmd->add_option("--rank", game_rank, "Rank of the promised class")->required();
  game_cmd->add_option("--seed", game_seed, "Seed for Bob's choice");
  game_cmd->add_flag("--allow-negation", allow_negation, "Bob may also pick negated patterns");
  add_json(game_cmd);

  std::vector<const char*> argv{"patternq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (basis_cmd->parsed()) {
      json_output = json_output || basis_format == "json";
      outcome = cmd_basis(basis_rank);
    } else if (classify_cmd->parsed()) {
      outcome = cmd_classify(pattern_argument(pattern, rank, index), with_state, faithful);
    } else if (verify_cmd->parsed()) {
      outcome = cmd_verify(rank_max);
    } else if (sample_cmd->parsed()) {
      outcome = cmd_sample(PatternVector::parse(sample_pattern), shots, seed);
    } else if (export_cmd->parsed()) {
      outcome = cmd_export(PatternVector::parse(export_pattern), out_path);
    } else {
      outcome = cmd_game(game_rank, game_seed, allow_negation);
    }
  } catch (const std::invalid_argument& e) {  // usage, parse, size and length errors
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailure;
  }
  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - start;
  outcome.report.timing_ms = no_timing ? 0.0 : elapsed.count();

  if (json_output) {
    out << json(outcome.report).dump(2) << '\n';
  } else {
    out << outcome.text;
  }
  return outcome.report.pass ? kSuccess : kCheckFailure;
}

}  // namespace patternq::cli
