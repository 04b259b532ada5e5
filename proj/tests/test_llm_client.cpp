#include "httplib.h"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lzdist/error.hpp"
#include "lzdist/llm_client.hpp"
#include "testutil.hpp"

using namespace lzdist;

namespace {

const std::string kQuestion = "What is the boiling point of water at sea level?";
const std::string kAnswer = "Water boils at 100 degrees Celsius at sea level.";
const std::string kKnowledge =
    "At standard atmospheric pressure (101.325 kPa), pure water boils at 100 degrees Celsius.";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(bool(in), "missing fixture " << path);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

PromptTemplates templates() { return PromptTemplates::load_from_dir(LZDIST_PROMPTS_DIR); }

// Loopback chat-completion endpoint with a scriptable handler.
struct MockServer {
  httplib::Server server;
  int port = 0;
  std::thread thread;
  std::atomic<int> hits{0};
  std::mutex mutex;
  std::vector<nlohmann::json> bodies;
  std::vector<std::string> auth_headers;

  using Responder = std::function<void(const nlohmann::json&, int, httplib::Response&)>;

  explicit MockServer(Responder respond, const std::string& prefix = "") {
    server.Post(prefix + "/chat/completions",
                [this, respond](const httplib::Request& req, httplib::Response& res) {
                  const int hit = hits.fetch_add(1);
                  nlohmann::json body = nlohmann::json::parse(req.body, nullptr, false);
                  {
                    std::lock_guard<std::mutex> lock(mutex);
                    bodies.push_back(body);
                    auth_headers.push_back(req.get_header_value("Authorization"));
                  }
                  respond(body, hit, res);
                });
    port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~MockServer() {
    server.stop();
    thread.join();
  }
  std::string base(const std::string& prefix = "") const {
    return "http://127.0.0.1:" + std::to_string(port) + prefix;
  }
};

void reply_ok(httplib::Response& res, const std::string& content) {
  res.set_content(nlohmann::json{{"choices", {{{"message", {{"content", content}}}}}}}.dump(),
                  "application/json");
}

std::string prompt_of(const nlohmann::json& body) {
  return body["messages"][0]["content"].get<std::string>();
}

LlmConfig test_config(const std::string& base) {
  LlmConfig config;
  config.api_base = base;
  config.api_key = "sk-test";
  config.model = "mock-model";
  config.max_retries = 3;
  config.backoff_initial_s = 0.01;
  config.concurrency = 2;
  return config;
}

SyntheticJob job_fixture(const std::string& id) {
  SyntheticJob job;
  job.id = id;
  job.question = kQuestion;
  job.initial_answer = kAnswer;
  job.knowledge = kKnowledge;
  return job;
}

}  // namespace

TEST_SUITE("llm_client") {

TEST_CASE("rendered prompts match the stored goldens byte for byte") {
  const PromptTemplates t = templates();
  const std::string dir = LZDIST_GOLDEN_DIR;
  CHECK(render_prompt(t, PromptScenario::Initial, kQuestion, std::nullopt, std::nullopt) ==
        read_file(dir + "/prompt_initial.txt"));
  CHECK(render_prompt(t, PromptScenario::Normal, kQuestion, kAnswer, kKnowledge) ==
        read_file(dir + "/prompt_normal.txt"));
  CHECK(render_prompt(t, PromptScenario::Similar, kQuestion, kAnswer, kKnowledge) ==
        read_file(dir + "/prompt_similar.txt"));
  CHECK(render_prompt(t, PromptScenario::Fast, kQuestion, kAnswer, kKnowledge) ==
        read_file(dir + "/prompt_fast.txt"));
}

TEST_CASE("rendered prompts leave no slot markers behind") {
  const PromptTemplates t = templates();
  for (const PromptScenario s : {PromptScenario::Initial, PromptScenario::Normal,
                                 PromptScenario::Similar, PromptScenario::Fast}) {
    const std::string p = render_prompt(t, s, kQuestion, kAnswer, kKnowledge);
    CAPTURE(prompt_scenario_name(s));
    CHECK(p.find('<') == std::string::npos);
    CHECK(p.find(kQuestion) != std::string::npos);
  }
}

TEST_CASE("missing slots raise errors naming the slot") {
  const PromptTemplates t = templates();
  CHECK_THROWS_WITH_AS(
      render_prompt(t, PromptScenario::Similar, kQuestion, kAnswer, std::nullopt),
      "missing payload for slot <KNOWLEDGE>", InvalidInputError);
  CHECK_THROWS_WITH_AS(render_prompt(t, PromptScenario::Normal, kQuestion, std::nullopt, kKnowledge),
                       "missing payload for slot <LLM_ANSWER>", InvalidInputError);
  CHECK_THROWS_AS(prompt_scenario_for(Scenario::Human), InvalidInputError);
}

TEST_CASE("endpoint configuration comes from the environment") {
  unsetenv("LZDIST_API_BASE");
  unsetenv("LZDIST_API_KEY");
  unsetenv("LZDIST_MODEL");
  CHECK(!LlmConfig::from_env().has_value());

  setenv("LZDIST_API_BASE", "http://127.0.0.1:9/v1", 1);
  setenv("LZDIST_API_KEY", "sk-abc", 1);
  auto config = LlmConfig::from_env();
  REQUIRE(config.has_value());
  CHECK(config->api_base == "http://127.0.0.1:9/v1");
  CHECK(config->api_key == "sk-abc");
  CHECK(config->model == "default");

  setenv("LZDIST_MODEL", "some-model", 1);
  CHECK(LlmConfig::from_env()->model == "some-model");
  unsetenv("LZDIST_API_BASE");
  unsetenv("LZDIST_API_KEY");
  unsetenv("LZDIST_MODEL");
}

TEST_CASE("generate_edit round-trips through a mock endpoint") {
  MockServer mock([](const nlohmann::json&, int, httplib::Response& res) {
    reply_ok(res, "  The boiling point is 100 degrees Celsius at 101.325 kPa.");
  });
  SyntheticJob job = job_fixture("q42");
  job.scenario = Scenario::Normal;

  const EditRecord rec = generate_edit(job, templates(), test_config(mock.base()));
  CHECK(rec.id == "q42-normal");
  CHECK(rec.source == kAnswer);
  CHECK(rec.target == "  The boiling point is 100 degrees Celsius at 101.325 kPa.");
  CHECK(rec.context == kKnowledge);
  CHECK(rec.scenario == Scenario::Normal);

  REQUIRE(mock.bodies.size() == 1);
  const nlohmann::json& body = mock.bodies[0];
  CHECK(body["model"] == "mock-model");
  CHECK(body["temperature"] == 0.0);
  REQUIRE(body["messages"].size() == 1);  // a single user message, no system turn
  CHECK(body["messages"][0]["role"] == "user");
  CHECK(prompt_of(body) == read_file(std::string(LZDIST_GOLDEN_DIR) + "/prompt_normal.txt"));
  CHECK(mock.auth_headers[0] == "Bearer sk-test");
}

TEST_CASE("an api_base path prefix is preserved") {
  MockServer mock(
      [](const nlohmann::json&, int, httplib::Response& res) { reply_ok(res, "ok"); },
      "/v7/beta");
  SyntheticJob job = job_fixture("p1");
  const EditRecord rec = generate_edit(job, templates(), test_config(mock.base("/v7/beta/")));
  CHECK(rec.target == "ok");
  CHECK(mock.hits.load() == 1);
}

TEST_CASE("a transient failure is retried with backoff") {
  MockServer mock([](const nlohmann::json&, int hit, httplib::Response& res) {
    if (hit == 0) {
      res.status = 500;
      res.set_content("internal", "text/plain");
    } else {
      reply_ok(res, "second try");
    }
  });
  const EditRecord rec = generate_edit(job_fixture("r1"), templates(), test_config(mock.base()));
  CHECK(rec.target == "second try");
  CHECK(mock.hits.load() == 2);
}

TEST_CASE("a malformed body is retried like a failed request") {
  MockServer mock([](const nlohmann::json&, int hit, httplib::Response& res) {
    if (hit == 0)
      res.set_content("{\"choices\":[]}", "application/json");
    else
      reply_ok(res, "well formed");
  });
  const EditRecord rec = generate_edit(job_fixture("m1"), templates(), test_config(mock.base()));
  CHECK(rec.target == "well formed");
  CHECK(mock.hits.load() == 2);
}

TEST_CASE("persistent auth failure raises with the last status") {
  MockServer mock([](const nlohmann::json&, int, httplib::Response& res) {
    res.status = 401;
    res.set_content("{\"error\":\"bad key\"}", "application/json");
  });
  LlmConfig config = test_config(mock.base());
  config.max_retries = 2;
  try {
    generate_edit(job_fixture("a1"), templates(), config);
    FAIL("expected TransportError");
  } catch (const TransportError& e) {
    CHECK(e.last_status == 401);
    CHECK(std::string(e.what()).find("401") != std::string::npos);
  }
  CHECK(mock.hits.load() == 3);  // initial try + 2 retries
}

TEST_CASE("an unreachable endpoint raises a transport error") {
  LlmConfig config = test_config("http://127.0.0.1:1");
  config.max_retries = 0;
  config.timeout_s = 2.0;
  try {
    generate_edit(job_fixture("u1"), templates(), config);
    FAIL("expected TransportError");
  } catch (const TransportError& e) {
    CHECK(e.last_status == 0);
  }
}

TEST_CASE("suite runs every job under every scenario in input order") {
  // Tag each response with markers recovered from the prompt text.
  MockServer mock([](const nlohmann::json& body, int, httplib::Response& res) {
    const std::string prompt = prompt_of(body);
    std::string tag = "normal";
    if (prompt.find("keeps the same structure") != std::string::npos) tag = "similar";
    if (prompt.find("as little time as possible") != std::string::npos) tag = "fast";
    const std::string which =
        prompt.find("QUESTION-TWO") != std::string::npos ? "job2" : "job1";
    reply_ok(res, which + ":" + tag);
  });

  SyntheticJob one = job_fixture("job1");
  SyntheticJob two = job_fixture("job2");
  two.question = "QUESTION-TWO";
  const std::vector<Scenario> scenarios = {Scenario::Normal, Scenario::Similar, Scenario::Fast};

  const SuiteResult result =
      run_scenario_suite({one, two}, scenarios, templates(), test_config(mock.base()));
  CHECK(result.failures.empty());
  REQUIRE(result.records.size() == 6);
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"job1-normal", "job1:normal"}, {"job1-similar", "job1:similar"},
      {"job1-fast", "job1:fast"},     {"job2-normal", "job2:normal"},
      {"job2-similar", "job2:similar"}, {"job2-fast", "job2:fast"},
  };
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(result.records[i].id == expected[i].first);
    CHECK(result.records[i].target == expected[i].second);
    CHECK(result.records[i].scenario == scenarios[i % 3]);
  }
  CHECK(mock.hits.load() == 6);
}

TEST_CASE("per-row failures are collected without aborting the suite") {
  MockServer mock([](const nlohmann::json& body, int, httplib::Response& res) {
    if (prompt_of(body).find("as little time as possible") != std::string::npos) {
      res.status = 503;
      res.set_content("overloaded", "text/plain");
    } else {
      reply_ok(res, "fine");
    }
  });
  LlmConfig config = test_config(mock.base());
  config.max_retries = 0;

  const SuiteResult result = run_scenario_suite(
      {job_fixture("q7")}, {Scenario::Normal, Scenario::Similar, Scenario::Fast}, templates(),
      config);
  REQUIRE(result.records.size() == 2);
  CHECK(result.records[0].id == "q7-normal");
  CHECK(result.records[1].id == "q7-similar");
  REQUIRE(result.failures.size() == 1);
  CHECK(result.failures[0].id == "q7-fast");
  CHECK(result.failures[0].message.find("503") != std::string::npos);
}

TEST_CASE("suite rejects empty input") {
  CHECK_THROWS_AS(
      run_scenario_suite({}, {Scenario::Normal}, templates(), test_config("http://x")),
      InvalidInputError);
  CHECK_THROWS_AS(run_scenario_suite({job_fixture("j")}, {}, templates(),
                                     test_config("http://x")),
                  InvalidInputError);
}

}  // TEST_SUITE
