#include "lzdist/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lzdist/error.hpp"

namespace lzdist {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kRecordFields[] = {"id",          "source",     "target",
                                         "context",     "edit_time_s", "keystrokes",
                                         "annotator",   "scenario"};

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::ifstream open_for_read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  return in;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

// Parses one record line; returns an error message instead of throwing so the
// caller can keep going.
std::string parse_record_line(const std::string& line, EditRecord& rec,
                              std::size_t& unknown_fields) {
  const ordered_json j = ordered_json::parse(line, nullptr, false);
  if (j.is_discarded()) return "invalid JSON";
  if (!j.is_object()) return "not a JSON object";

  auto need_string = [&](const char* key, std::string& out) -> std::string {
    const auto it = j.find(key);
    if (it == j.end()) return std::string("missing \"") + key + "\"";
    if (!it->is_string()) return std::string("\"") + key + "\" is not a string";
    out = it->get<std::string>();
    return {};
  };

  if (auto err = need_string("id", rec.id); !err.empty()) return err;
  if (rec.id.empty()) return "empty \"id\"";
  if (auto err = need_string("source", rec.source); !err.empty()) return err;
  if (auto err = need_string("target", rec.target); !err.empty()) return err;

  if (const auto it = j.find("context"); it != j.end()) {
    if (!it->is_string()) return "\"context\" is not a string";
    rec.context = it->get<std::string>();
  }
  if (const auto it = j.find("edit_time_s"); it != j.end()) {
    if (!it->is_number()) return "\"edit_time_s\" is not a number";
    const double v = it->get<double>();
    if (v < 0) return "\"edit_time_s\" is negative";
    rec.edit_time_s = v;
  }
  if (const auto it = j.find("keystrokes"); it != j.end()) {
    if (!it->is_number_integer()) return "\"keystrokes\" is not an integer";
    const std::int64_t v = it->get<std::int64_t>();
    if (v < 0) return "\"keystrokes\" is negative";
    rec.keystrokes = v;
  }
  if (const auto it = j.find("annotator"); it != j.end()) {
    if (!it->is_string()) return "\"annotator\" is not a string";
    rec.annotator = it->get<std::string>();
  }
  if (const auto it = j.find("scenario"); it != j.end()) {
    if (!it->is_string()) return "\"scenario\" is not a string";
    const auto s = scenario_from_name(it->get<std::string>());
    if (!s) return "unknown scenario \"" + it->get<std::string>() + "\"";
    rec.scenario = s;
  }

  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* f : kRecordFields) known = known || key == f;
    if (!known) ++unknown_fields;
  }
  return {};
}

double gaussian_draw(std::mt19937_64& rng) {
  // Box-Muller on uniform draws built from the top 53 bits; u1 stays in (0,1].
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
  const double u2 = static_cast<double>(rng() >> 11) * 0x1p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::acos(-1.0) * u2);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

std::string scenario_name(Scenario scenario) {
  switch (scenario) {
    case Scenario::Normal: return "normal";
    case Scenario::Similar: return "similar";
    case Scenario::Fast: return "fast";
    case Scenario::Human: return "human";
  }
  return "normal";
}

std::optional<Scenario> scenario_from_name(const std::string& name) {
  if (name == "normal") return Scenario::Normal;
  if (name == "similar") return Scenario::Similar;
  if (name == "fast") return Scenario::Fast;
  if (name == "human") return Scenario::Human;
  return std::nullopt;
}

LoadReport load_jsonl(const std::string& path) {
  std::ifstream in = open_for_read(path);
  LoadReport report;
  std::set<std::string> seen_ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    EditRecord rec;
    const std::string err = parse_record_line(line, rec, report.unknown_field_count);
    if (!err.empty()) {
      report.errors.push_back({lineno, err});
      continue;
    }
    if (!seen_ids.insert(rec.id).second)
      throw ValidationError("duplicate id \"" + rec.id + "\" at line " + std::to_string(lineno));
    report.records.push_back(std::move(rec));
  }
  return report;
}

void write_jsonl(const std::vector<EditRecord>& records, const std::string& path) {
  std::ofstream out = open_for_write(path);
  for (const EditRecord& rec : records) {
    ordered_json j;
    j["id"] = rec.id;
    j["source"] = rec.source;
    j["target"] = rec.target;
    if (rec.context) j["context"] = *rec.context;
    if (rec.edit_time_s) j["edit_time_s"] = *rec.edit_time_s;
    if (rec.keystrokes) j["keystrokes"] = *rec.keystrokes;
    if (rec.annotator) j["annotator"] = *rec.annotator;
    if (rec.scenario) j["scenario"] = scenario_name(*rec.scenario);
    out << j.dump() << '\n';
  }
  if (!out) throw IoError("failed writing " + path);
}

static std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

void write_csv(const CsvTable& table, const std::string& path) {
  std::ofstream out = open_for_write(path);
  auto write_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_quote(row[i]);
    }
    out << '\n';
  };
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);
  if (!out) throw IoError("failed writing " + path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in = open_for_read(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  CsvTable table;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    if (!any) {
      table.header = std::move(row);
      any = true;
    } else {
      table.rows.push_back(std::move(row));
    }
    row.clear();
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      end_row();
    } else {
      field.push_back(c);
    }
  }
  if (!field.empty() || !row.empty()) end_row();
  return table;
}

void write_records_csv(const std::vector<EditRecord>& records, const std::string& path) {
  CsvTable table;
  table.header = {"id",      "source",    "target",    "context",
                  "edit_time_s", "keystrokes", "annotator", "scenario"};
  char buf[64];
  for (const EditRecord& r : records) {
    std::vector<std::string> row{r.id, r.source, r.target, r.context.value_or("")};
    if (r.edit_time_s) {
      std::snprintf(buf, sizeof buf, "%.10g", *r.edit_time_s);
      row.emplace_back(buf);
    } else {
      row.emplace_back();
    }
    row.push_back(r.keystrokes ? std::to_string(*r.keystrokes) : "");
    row.push_back(r.annotator.value_or(""));
    row.push_back(r.scenario ? scenario_name(*r.scenario) : "");
    table.rows.push_back(std::move(row));
  }
  write_csv(table, path);
}

std::vector<EditRecord> simulate_effort_dataset(std::size_t n, double noise_sigma,
                                                std::uint64_t seed) {
  if (n < 10) throw InvalidInputError("simulated dataset needs n >= 10");
  if (noise_sigma < 0) throw InvalidInputError("noise sigma must be >= 0");

  std::mt19937_64 rng(seed);
  std::vector<EditRecord> records;
  records.reserve(n);

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t len = 256 + draw(rng, 512);
    std::string source;
    source.reserve(len);
    for (std::size_t k = 0; k < len; ++k)
      source.push_back(static_cast<char>('a' + draw(rng, 26)));

    std::string text = source;
    const std::size_t ops = 1 + draw(rng, 40);
    for (std::size_t op = 0; op < ops; ++op) {
      const std::uint64_t roll = draw(rng, 100);
      const std::size_t size = text.size();
      if (roll < 40 || size < 64) {
        // Character edit: substitution or insertion.
        const char c = static_cast<char>('a' + draw(rng, 26));
        if (draw(rng, 2) == 0 && size > 0)
          text[draw(rng, size)] = c;
        else
          text.insert(text.begin() + static_cast<std::ptrdiff_t>(draw(rng, size + 1)), c);
      } else {
        const std::size_t block = 8 + draw(rng, 25);
        const std::size_t start = draw(rng, size - block + 1);
        if (roll < 70) {
          // Block move.
          const std::string chunk = text.substr(start, block);
          text.erase(start, block);
          text.insert(draw(rng, text.size() + 1), chunk);
        } else if (roll < 85) {
          // Block duplication.
          const std::string chunk = text.substr(start, block);
          text.insert(draw(rng, text.size() + 1), chunk);
        } else {
          // Block deletion.
          text.erase(start, block);
        }
      }
    }

    EditRecord rec;
    char id[32];
    std::snprintf(id, sizeof id, "sim-%04zu", i);
    rec.id = id;
    rec.source = std::move(source);
    rec.target = std::move(text);
    rec.scenario = Scenario::Human;  // stands in for recorded human edits
    rec.edit_time_s = static_cast<double>(ops) + noise_sigma * gaussian_draw(rng);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<SyntheticJob> load_jobs_jsonl(const std::string& path) {
  std::ifstream in = open_for_read(path);
  std::vector<SyntheticJob> jobs;
  std::set<std::string> seen_ids;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> problems;

  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    const ordered_json j = ordered_json::parse(line, nullptr, false);
    auto fail = [&](const std::string& why) {
      problems.push_back("line " + std::to_string(lineno) + ": " + why);
    };
    if (j.is_discarded() || !j.is_object()) {
      fail("invalid JSON object");
      continue;
    }

    SyntheticJob job;
    auto take = [&](const char* key, std::string& out) {
      const auto it = j.find(key);
      if (it == j.end() || !it->is_string() || it->get<std::string>().empty()) {
        fail(std::string("missing or empty \"") + key + "\"");
        return false;
      }
      out = it->get<std::string>();
      return true;
    };
    if (!take("question", job.question) || !take("initial_answer", job.initial_answer) ||
        !take("knowledge", job.knowledge))
      continue;

    if (const auto it = j.find("id"); it != j.end() && it->is_string() &&
                                      !it->get<std::string>().empty()) {
      job.id = it->get<std::string>();
    } else {
      char id[32];
      std::snprintf(id, sizeof id, "q%03zu", jobs.size());
      job.id = id;
    }
    if (const auto it = j.find("scenario"); it != j.end()) {
      const auto s = it->is_string() ? scenario_from_name(it->get<std::string>()) : std::nullopt;
      if (!s) {
        fail("unknown scenario");
        continue;
      }
      job.scenario = *s;
    }
    if (!seen_ids.insert(job.id).second) {
      fail("duplicate id \"" + job.id + "\"");
      continue;
    }
    jobs.push_back(std::move(job));
  }

  if (!problems.empty()) {
    std::string msg = "jobs file " + path + " has invalid lines: ";
    for (std::size_t i = 0; i < problems.size() && i < 5; ++i) {
      if (i) msg += "; ";
      msg += problems[i];
    }
    if (problems.size() > 5) msg += "; and " + std::to_string(problems.size() - 5) + " more";
    throw ValidationError(msg);
  }
  return jobs;
}

}  // namespace lzdist
