#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lzdist {

enum class Scenario { Normal, Similar, Fast, Human };

std::string scenario_name(Scenario scenario);
std::optional<Scenario> scenario_from_name(const std::string& name);

// One dataset row: an initial text, its edited form, and whatever effort
// signals were recorded. Effort fields are optional at load time; commands
// that need them validate before computing.
struct EditRecord {
  std::string id;
  std::string source;
  std::string target;
  std::optional<std::string> context;
  std::optional<double> edit_time_s;
  std::optional<std::int64_t> keystrokes;
  std::optional<std::string> annotator;
  std::optional<Scenario> scenario;

  bool operator==(const EditRecord&) const = default;
};

struct LineError {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct LoadReport {
  std::vector<EditRecord> records;
  std::vector<LineError> errors;
  std::size_t unknown_field_count = 0;
};

// One JSON object per line, snake_case keys matching EditRecord. Malformed
// lines land in the error report with their line number; unknown fields are
// counted and ignored. Unreadable file raises IoError; a duplicate id raises
// ValidationError naming the id.
LoadReport load_jsonl(const std::string& path);

// Inverse of load_jsonl: stable field order, optional fields omitted when
// absent, UTF-8 preserved byte-exactly.
void write_jsonl(const std::vector<EditRecord>& records, const std::string& path);

// Same columns as the JSONL schema, empty cells for absent fields.
void write_records_csv(const std::vector<EditRecord>& records, const std::string& path);

// RFC-4180-style CSV: quoted fields, doubled quotes, first row is the header.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path);
void write_csv(const CsvTable& table, const std::string& path);

// Seeded synthetic effort data: random base texts, a scripted mix of edit
// operations (40% character edits, 30% block moves, 15% duplications, 15%
// deletions), and edit_time_s = 1.0 * op_count + gaussian(0, noise_sigma).
// Fully deterministic for a given (n, noise_sigma, seed).
std::vector<EditRecord> simulate_effort_dataset(std::size_t n, double noise_sigma,
                                                std::uint64_t seed);

// Input row for LLM-driven edit generation.
struct SyntheticJob {
  std::string id;
  std::string question;
  std::string initial_answer;
  std::string knowledge;
  Scenario scenario = Scenario::Normal;
};

// JSONL with keys question / initial_answer / knowledge (all required and
// nonempty), optional id (default q<index>, zero padded) and scenario.
// Invalid lines raise ValidationError listing the first few problems.
std::vector<SyntheticJob> load_jobs_jsonl(const std::string& path);

}  // namespace lzdist
