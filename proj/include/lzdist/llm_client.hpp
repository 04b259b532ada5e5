#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzdist/dataset.hpp"

namespace lzdist {

// The four instruction templates, stored as data files (data/prompts/*.txt)
// so the original-language versions can be swapped in. Slots: <QUESTION>,
// <LLM_ANSWER>, <KNOWLEDGE>; the initial template uses only <QUESTION>.
enum class PromptScenario { Initial, Normal, Similar, Fast };

std::string prompt_scenario_name(PromptScenario scenario);
PromptScenario prompt_scenario_for(Scenario scenario);

struct PromptTemplates {
  std::string initial;
  std::string normal;
  std::string similar;
  std::string fast;

  // Reads initial.txt / normal.txt / similar.txt / fast.txt from a directory.
  static PromptTemplates load_from_dir(const std::string& dir);
  const std::string& for_scenario(PromptScenario scenario) const;
};

// Fills the scenario's slots. A slot the scenario requires but the caller
// left empty raises InvalidInputError naming the slot; the rendered text
// never contains an unfilled marker.
std::string render_prompt(const PromptTemplates& templates, PromptScenario scenario,
                          const std::string& question,
                          const std::optional<std::string>& llm_answer,
                          const std::optional<std::string>& knowledge);

// Chat-completion endpoint configuration. Nothing in the toolkit touches the
// network unless this is provided explicitly.
struct LlmConfig {
  std::string api_base;  // e.g. https://host/v1 (scheme + host [+ path prefix])
  std::string api_key;   // bearer token, may be empty for local endpoints
  std::string model;
  int max_retries = 3;
  double timeout_s = 60.0;
  double temperature = 0.0;
  int concurrency = 4;
  double backoff_initial_s = 0.25;  // doubles per attempt

  // From LZDIST_API_BASE / LZDIST_API_KEY / LZDIST_MODEL; nullopt when the
  // base URL is unset.
  static std::optional<LlmConfig> from_env();
};

// One scenario edit: renders the job's prompt, posts it as a single user
// message (chat-completion shape), and wraps the completion text in an
// EditRecord (source = initial answer, target = completion, id suffixed with
// the scenario name). Failed attempts retry with exponential backoff; after
// max_retries the last status is raised as TransportError.
EditRecord generate_edit(const SyntheticJob& job, const PromptTemplates& templates,
                         const LlmConfig& config);

struct SuiteFailure {
  std::string id;  // job id + scenario suffix
  std::string message;
};

struct SuiteResult {
  std::vector<EditRecord> records;
  std::vector<SuiteFailure> failures;
};

// Runs every job under every scenario (|jobs| x |scenarios| attempts, up to
// config.concurrency in flight). Failures are collected per row and never
// abort the suite; records come back ordered by (job index, scenario index)
// regardless of completion order.
SuiteResult run_scenario_suite(const std::vector<SyntheticJob>& jobs,
                               const std::vector<Scenario>& scenarios,
                               const PromptTemplates& templates, const LlmConfig& config);

}  // namespace lzdist
