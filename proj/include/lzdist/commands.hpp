#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lzdist {

// Shared CLI flags. --nfc normalizes every text input before computation;
// --jobs bounds worker threads; --seed feeds every randomized step.
struct GlobalOptions {
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  bool nfc = false;
};

struct DistOptions {
  std::string source_path;
  std::string target_path;
  std::string context_path;  // empty = plain mode
  bool normalize_target_len = false;
};

// Prints "distance=<n> lz_source=<n> lz_concat=<n>" (plus a normalized value
// on request, which is not part of the reported experiments).
void cmd_dist(const DistOptions& opt, const GlobalOptions& global, std::ostream& out);

struct FactorizeOptions {
  std::string input_path;
};

// Prints one line per phrase ("LIT <byte>" or "CPY <start> <len>") and a
// final "COUNT <n>".
void cmd_factorize(const FactorizeOptions& opt, const GlobalOptions& global, std::ostream& out);

struct EvalOptions {
  std::string dataset_path;
  std::vector<std::string> metrics;     // subset of the five ids; empty = all
  std::vector<std::string> conditions;  // subset of {plain, with_context}; empty = plain
  std::size_t knn_k = 5;
  double train_fraction = 0.8;
  std::string output_dir;
};

// Writes pairs.csv, correlations.csv (and correlations_by_annotator.csv when
// annotator labels exist), knn.csv, fit.csv, summary.csv into output_dir.
void cmd_eval(const EvalOptions& opt, const GlobalOptions& global, std::ostream& out);

struct SimulateOptions {
  std::size_t n = 200;
  double noise_sigma = 0.5;
  std::string output_path;
};

void cmd_simulate(const SimulateOptions& opt, const GlobalOptions& global, std::ostream& out);

struct SynthOptions {
  std::string jobs_path;
  std::string output_path;
  std::string errors_path;              // optional JSONL of per-row failures
  std::string prompts_dir;              // default data/prompts next to the binary's cwd
  std::vector<std::string> scenarios;   // empty = normal, similar, fast
};

// Generates scenario edits through the configured chat-completion endpoint
// (LZDIST_API_BASE / LZDIST_API_KEY / LZDIST_MODEL must be set).
void cmd_synth(const SynthOptions& opt, const GlobalOptions& global, std::ostream& out);

struct BenchOptions {
  std::vector<std::size_t> sizes_bytes;  // ascending, each >= 1024
  std::size_t repetitions = 5;
  std::string output_path;  // empty = stdout only
};

// Times compression_distance on random texts; emits "size_bytes,median_s".
void cmd_bench(const BenchOptions& opt, const GlobalOptions& global, std::ostream& out);

struct ScenarioCompareOptions {
  std::string dataset_path;
  std::string output_dir;
};

// Pairs each question's normal-scenario distance with its similar / fast
// distances, fits a line per pairing, writes slopes.csv plus scatter CSVs.
void cmd_scenario_compare(const ScenarioCompareOptions& opt, const GlobalOptions& global,
                          std::ostream& out);

}  // namespace lzdist
