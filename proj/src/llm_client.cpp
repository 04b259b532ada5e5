#include "httplib.h"

#include "lzdist/llm_client.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "json.hpp"
#include "lzdist/error.hpp"
#include "lzdist/parallel.hpp"

namespace lzdist {
namespace {

void replace_all(std::string& text, const std::string& marker, const std::string& payload) {
  std::size_t pos = 0;
  while ((pos = text.find(marker, pos)) != std::string::npos) {
    text.replace(pos, marker.size(), payload);
    pos += payload.size();
  }
}

std::string read_template(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open prompt template " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!text.empty() && text.back() == '\n') text.pop_back();
  if (!text.empty() && text.back() == '\r') text.pop_back();
  return text;
}

// Splits "https://host:port/v1" into the origin httplib wants and the path
// prefix the request path needs.
std::pair<std::string, std::string> split_base(const std::string& api_base) {
  const std::size_t scheme = api_base.find("://");
  const std::size_t slash =
      api_base.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  if (slash == std::string::npos) return {api_base, ""};
  std::string prefix = api_base.substr(slash);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {api_base.substr(0, slash), prefix};
}

std::string complete(const std::string& prompt, const LlmConfig& config) {
  const auto [origin, prefix] = split_base(config.api_base);
  httplib::Client client(origin);
  client.set_connection_timeout(std::chrono::duration<double>(config.timeout_s));
  client.set_read_timeout(std::chrono::duration<double>(config.timeout_s));

  httplib::Headers headers;
  if (!config.api_key.empty()) headers.emplace("Authorization", "Bearer " + config.api_key);

  nlohmann::json body{
      {"model", config.model},
      {"messages", {{{"role", "user"}, {"content", prompt}}}},
      {"temperature", config.temperature},
  };
  const std::string payload = body.dump();
  const std::string path = prefix + "/chat/completions";

  int last_status = 0;
  std::string last_error;
  for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
    if (attempt > 0) {
      const double delay = config.backoff_initial_s * static_cast<double>(1 << (attempt - 1));
      std::this_thread::sleep_for(std::chrono::duration<double>(delay));
    }
    httplib::Result res = client.Post(path, headers, payload, "application/json");
    if (!res) {
      last_status = 0;
      last_error = "transport failure: " + httplib::to_string(res.error());
      continue;
    }
    last_status = res->status;
    if (res->status / 100 != 2) {
      last_error = "HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 200);
      continue;
    }
    const auto parsed = nlohmann::json::parse(res->body, nullptr, false);
    if (parsed.is_discarded() || !parsed.contains("choices") || parsed["choices"].empty() ||
        !parsed["choices"][0].contains("message") ||
        !parsed["choices"][0]["message"].contains("content") ||
        !parsed["choices"][0]["message"]["content"].is_string()) {
      last_error = "malformed completion response: " + res->body.substr(0, 200);
      continue;
    }
    return parsed["choices"][0]["message"]["content"].get<std::string>();
  }
  throw TransportError("completion failed after " + std::to_string(config.max_retries + 1) +
                           " attempts; last: " + last_error,
                       last_status);
}

}  // namespace

std::string prompt_scenario_name(PromptScenario scenario) {
  switch (scenario) {
    case PromptScenario::Initial: return "initial";
    case PromptScenario::Normal: return "normal";
    case PromptScenario::Similar: return "similar";
    case PromptScenario::Fast: return "fast";
  }
  return "initial";
}

PromptScenario prompt_scenario_for(Scenario scenario) {
  switch (scenario) {
    case Scenario::Normal: return PromptScenario::Normal;
    case Scenario::Similar: return PromptScenario::Similar;
    case Scenario::Fast: return PromptScenario::Fast;
    case Scenario::Human: break;
  }
  throw InvalidInputError("no prompt template for scenario \"" + scenario_name(scenario) + "\"");
}

PromptTemplates PromptTemplates::load_from_dir(const std::string& dir) {
  PromptTemplates t;
  t.initial = read_template(dir + "/initial.txt");
  t.normal = read_template(dir + "/normal.txt");
  t.similar = read_template(dir + "/similar.txt");
  t.fast = read_template(dir + "/fast.txt");
  return t;
}

const std::string& PromptTemplates::for_scenario(PromptScenario scenario) const {
  switch (scenario) {
    case PromptScenario::Initial: return initial;
    case PromptScenario::Normal: return normal;
    case PromptScenario::Similar: return similar;
    case PromptScenario::Fast: return fast;
  }
  return initial;
}

std::string render_prompt(const PromptTemplates& templates, PromptScenario scenario,
                          const std::string& question,
                          const std::optional<std::string>& llm_answer,
                          const std::optional<std::string>& knowledge) {
  std::string out = templates.for_scenario(scenario);
  replace_all(out, "<QUESTION>", question);
  if (scenario != PromptScenario::Initial) {
    if (!llm_answer) throw InvalidInputError("missing payload for slot <LLM_ANSWER>");
    if (!knowledge) throw InvalidInputError("missing payload for slot <KNOWLEDGE>");
    replace_all(out, "<LLM_ANSWER>", *llm_answer);
    replace_all(out, "<KNOWLEDGE>", *knowledge);
  }
  return out;
}

std::optional<LlmConfig> LlmConfig::from_env() {
  const char* base = std::getenv("LZDIST_API_BASE");
  if (base == nullptr || *base == '\0') return std::nullopt;
  LlmConfig config;
  config.api_base = base;
  if (const char* key = std::getenv("LZDIST_API_KEY")) config.api_key = key;
  if (const char* model = std::getenv("LZDIST_MODEL")) config.model = model;
  if (config.model.empty()) config.model = "default";
  return config;
}

EditRecord generate_edit(const SyntheticJob& job, const PromptTemplates& templates,
                         const LlmConfig& config) {
  const std::string prompt =
      render_prompt(templates, prompt_scenario_for(job.scenario), job.question,
                    job.initial_answer, job.knowledge);
  EditRecord rec;
  rec.id = job.id + "-" + scenario_name(job.scenario);
  rec.source = job.initial_answer;
  rec.target = complete(prompt, config);
  rec.context = job.knowledge;
  rec.scenario = job.scenario;
  return rec;
}

SuiteResult run_scenario_suite(const std::vector<SyntheticJob>& jobs,
                               const std::vector<Scenario>& scenarios,
                               const PromptTemplates& templates, const LlmConfig& config) {
  if (jobs.empty() || scenarios.empty())
    throw InvalidInputError("scenario suite needs nonempty jobs and scenarios");

  const std::size_t total = jobs.size() * scenarios.size();
  std::vector<std::optional<EditRecord>> slots(total);
  std::vector<std::optional<SuiteFailure>> failures(total);

  const unsigned workers = config.concurrency > 0 ? static_cast<unsigned>(config.concurrency) : 1;
  parallel_for(total, workers, [&](std::size_t t) {
    const std::size_t job_index = t / scenarios.size();
    SyntheticJob job = jobs[job_index];
    job.scenario = scenarios[t % scenarios.size()];
    try {
      slots[t] = generate_edit(job, templates, config);
    } catch (const std::exception& e) {
      failures[t] = SuiteFailure{job.id + "-" + scenario_name(job.scenario), e.what()};
    }
  });

  SuiteResult out;
  for (std::size_t t = 0; t < total; ++t) {
    if (slots[t]) out.records.push_back(std::move(*slots[t]));
    else if (failures[t]) out.failures.push_back(std::move(*failures[t]));
  }
  return out;
}

}  // namespace lzdist
