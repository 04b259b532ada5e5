#include "lzdist/commands.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>

#include "json.hpp"
#include "lzdist/baselines.hpp"
#include "lzdist/dataset.hpp"
#include "lzdist/distance.hpp"
#include "lzdist/error.hpp"
#include "lzdist/llm_client.hpp"
#include "lzdist/lz.hpp"
#include "lzdist/parallel.hpp"
#include "lzdist/stats.hpp"
#include "lzdist/unicode.hpp"

namespace lzdist {
namespace {

const std::vector<std::string> kAllMetrics = {"compression", "levenshtein", "bleu", "rouge_l",
                                              "ter"};
const std::vector<std::string> kAllConditions = {"plain", "with_context"};
const std::vector<std::string> kSignals = {"edit_time_s", "keystrokes"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string join_ids(const std::vector<std::string>& ids, std::size_t cap = 20) {
  std::string out;
  for (std::size_t i = 0; i < ids.size() && i < cap; ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  if (ids.size() > cap) out += " and " + std::to_string(ids.size() - cap) + " more";
  return out;
}

// Keeps the canonical order and rejects unknown names.
std::vector<std::string> select_from(const std::vector<std::string>& requested,
                                     const std::vector<std::string>& canonical,
                                     const std::string& what) {
  if (requested.empty()) return {};
  for (const std::string& name : requested) {
    if (std::find(canonical.begin(), canonical.end(), name) == canonical.end())
      throw InvalidInputError("unknown " + what + " \"" + name + "\"");
  }
  std::vector<std::string> out;
  for (const std::string& name : canonical)
    if (std::find(requested.begin(), requested.end(), name) != requested.end())
      out.push_back(name);
  return out;
}

void nfc_record(EditRecord& r) {
  r.source = nfc_normalize(r.source);
  r.target = nfc_normalize(r.target);
  if (r.context) r.context = nfc_normalize(*r.context);
}

std::vector<EditRecord> load_clean_dataset(const std::string& path, const GlobalOptions& global,
                                           std::ostream& out) {
  LoadReport rep = load_jsonl(path);
  if (!rep.errors.empty()) {
    std::string msg = "dataset " + path + " has malformed lines:";
    for (std::size_t i = 0; i < rep.errors.size() && i < 5; ++i)
      msg += " line " + std::to_string(rep.errors[i].line) + " (" + rep.errors[i].message + ");";
    if (rep.errors.size() > 5)
      msg += " and " + std::to_string(rep.errors.size() - 5) + " more";
    throw ValidationError(msg);
  }
  if (rep.unknown_field_count > 0)
    out << "note: ignored " << rep.unknown_field_count << " unknown fields in " << path << "\n";
  if (global.nfc)
    for (EditRecord& r : rep.records) nfc_record(r);
  return std::move(rep.records);
}

std::optional<double> signal_of(const EditRecord& r, const std::string& signal) {
  if (signal == "edit_time_s") return r.edit_time_s;
  if (r.keystrokes) return static_cast<double>(*r.keystrokes);
  return std::nullopt;
}

}  // namespace

void cmd_dist(const DistOptions& opt, const GlobalOptions& global, std::ostream& out) {
  std::string source = read_file(opt.source_path);
  std::string target = read_file(opt.target_path);
  if (global.nfc) {
    source = nfc_normalize(source);
    target = nfc_normalize(target);
  }

  DistanceResult result;
  if (!opt.context_path.empty()) {
    std::string context = read_file(opt.context_path);
    if (global.nfc) context = nfc_normalize(context);
    result = compression_distance_with_context(SymbolText::from_bytes(context),
                                               SymbolText::from_bytes(source),
                                               SymbolText::from_bytes(target));
  } else {
    result = compression_distance(SymbolText::from_bytes(source), SymbolText::from_bytes(target));
  }

  out << "distance=" << result.value << " lz_source=" << result.lz_source
      << " lz_concat=" << result.lz_concat << "\n";
  if (opt.normalize_target_len) {
    const double norm = target.empty()
                            ? 0.0
                            : static_cast<double>(result.value) / static_cast<double>(target.size());
    out << "normalized=" << fmt(norm) << "\n";
  }
}

void cmd_factorize(const FactorizeOptions& opt, const GlobalOptions& global, std::ostream& out) {
  std::string text = read_file(opt.input_path);
  if (global.nfc) text = nfc_normalize(text);
  const LZFactorization fact = lz_factorize(SymbolText::from_bytes(text));
  for (const Phrase& p : fact.phrases) {
    if (p.is_literal())
      out << "LIT " << p.symbol << "\n";
    else
      out << "CPY " << p.source_start << " " << p.length << "\n";
  }
  out << "COUNT " << fact.count() << "\n";
}

void cmd_simulate(const SimulateOptions& opt, const GlobalOptions& global, std::ostream& out) {
  if (opt.output_path.empty()) throw InvalidInputError("simulate needs --output");
  const std::vector<EditRecord> records =
      simulate_effort_dataset(opt.n, opt.noise_sigma, global.seed);
  write_jsonl(records, opt.output_path);
  out << "wrote " << records.size() << " simulated records to " << opt.output_path << "\n";
}

void cmd_eval(const EvalOptions& opt, const GlobalOptions& global, std::ostream& out) {
  if (opt.output_dir.empty()) throw InvalidInputError("eval needs --output-dir");
  if (opt.knn_k < 1) throw InvalidInputError("--knn-k must be >= 1");
  if (!(opt.train_fraction > 0.0 && opt.train_fraction < 1.0))
    throw InvalidInputError("--train-fraction must be in (0, 1)");

  std::vector<std::string> metrics = select_from(opt.metrics, kAllMetrics, "metric");
  if (metrics.empty()) metrics = kAllMetrics;
  std::vector<std::string> conditions = select_from(opt.conditions, kAllConditions, "condition");
  if (conditions.empty()) conditions = {"plain"};

  std::vector<EditRecord> records = load_clean_dataset(opt.dataset_path, global, out);
  if (records.size() < 2) throw ValidationError("dataset needs at least 2 records");
  std::sort(records.begin(), records.end(),
            [](const EditRecord& a, const EditRecord& b) { return a.id < b.id; });

  std::vector<std::string> missing_effort;
  for (const EditRecord& r : records)
    if (!r.edit_time_s && !r.keystrokes) missing_effort.push_back(r.id);
  if (!missing_effort.empty())
    throw ValidationError("records missing an effort signal (edit_time_s or keystrokes): " +
                          join_ids(missing_effort));

  const bool with_context =
      std::find(conditions.begin(), conditions.end(), "with_context") != conditions.end();
  if (with_context) {
    std::vector<std::string> missing_context;
    for (const EditRecord& r : records)
      if (!r.context) missing_context.push_back(r.id);
    if (!missing_context.empty())
      throw ValidationError("with_context condition but records have no context: " +
                            join_ids(missing_context));
  }

  const std::size_t n = records.size();

  // Baselines do not depend on the condition; compute them once.
  std::map<std::string, std::vector<double>> baseline_values;
  for (const std::string& m : metrics)
    if (m != "compression") baseline_values[m].resize(n);
  if (!baseline_values.empty()) {
    parallel_for(n, global.jobs, [&](std::size_t i) {
      const EditRecord& r = records[i];
      if (baseline_values.count("levenshtein"))
        baseline_values["levenshtein"][i] = levenshtein(r.source, r.target).value;
      const bool tokens_needed = baseline_values.count("bleu") ||
                                 baseline_values.count("rouge_l") ||
                                 baseline_values.count("ter");
      if (!tokens_needed) return;
      const TokenSequence cand = TokenSequence::from_text(r.source);
      const TokenSequence ref = TokenSequence::from_text(r.target);
      if (baseline_values.count("bleu")) baseline_values["bleu"][i] = bleu(cand, ref).value;
      if (baseline_values.count("rouge_l"))
        baseline_values["rouge_l"][i] = rouge_l(cand, ref).value;
      if (baseline_values.count("ter")) baseline_values["ter"][i] = ter(cand, ref).value;
    });
  }

  // condition -> metric -> per-record value, aligned with `records`.
  std::map<std::string, std::map<std::string, std::vector<double>>> values;
  const bool compression_selected =
      std::find(metrics.begin(), metrics.end(), "compression") != metrics.end();
  for (const std::string& cond : conditions) {
    if (compression_selected) {
      std::vector<DistancePair> dpairs(n);
      for (std::size_t i = 0; i < n; ++i) {
        dpairs[i].source = SymbolText::from_bytes(records[i].source);
        dpairs[i].target = SymbolText::from_bytes(records[i].target);
        if (cond == "with_context" && records[i].context)
          dpairs[i].context = SymbolText::from_bytes(*records[i].context);
      }
      const auto rows = batch_distance(
          dpairs, cond == "with_context" ? DistanceMode::WithContext : DistanceMode::Plain,
          global.jobs);
      std::vector<double>& vals = values[cond]["compression"];
      vals.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].ok())
          throw ValidationError("distance failed for record " + records[i].id + ": " +
                                rows[i].error);
        vals[i] = static_cast<double>(rows[i].result->value);
      }
    }
    for (const auto& [m, vals] : baseline_values) values[cond][m] = vals;
  }

  std::filesystem::create_directories(opt.output_dir);
  const std::string dir = opt.output_dir + "/";

  // pairs.csv: one row per record x condition, plot-ready.
  {
    CsvTable t;
    t.header = {"id", "condition"};
    for (const std::string& m : metrics) t.header.push_back(m);
    t.header.push_back("edit_time_s");
    t.header.push_back("keystrokes");
    for (std::size_t i = 0; i < n; ++i) {
      for (const std::string& cond : conditions) {
        std::vector<std::string> row{records[i].id, cond};
        for (const std::string& m : metrics) row.push_back(fmt(values.at(cond).at(m)[i]));
        row.push_back(records[i].edit_time_s ? fmt(*records[i].edit_time_s) : "");
        row.push_back(records[i].keystrokes ? std::to_string(*records[i].keystrokes) : "");
        t.rows.push_back(std::move(row));
      }
    }
    write_csv(t, dir + "pairs.csv");
  }

  // Correlation helper shared by the overall and per-annotator reports.
  auto correlate = [&](const std::vector<std::size_t>& subset, const std::string& cond,
                       const std::string& metric, const std::string& signal)
      -> std::optional<std::array<double, 3>> {
    PairedSamples s;
    for (std::size_t i : subset) {
      const auto y = signal_of(records[i], signal);
      if (!y) continue;
      s.xs.push_back(values.at(cond).at(metric)[i]);
      s.ys.push_back(*y);
    }
    if (s.xs.size() < 3) return std::nullopt;
    try {
      const double r = pearson(s);
      const double p = pearson_pvalue(s);
      return std::array<double, 3>{r, p, static_cast<double>(s.xs.size())};
    } catch (const DegenerateInputError& e) {
      out << "warning: skipped " << metric << "/" << cond << "/" << signal << ": " << e.what()
          << "\n";
      return std::nullopt;
    }
  };

  std::vector<std::size_t> all_rows(n);
  for (std::size_t i = 0; i < n; ++i) all_rows[i] = i;

  // Overall correlations, kept around so the summary does not recompute (and
  // re-warn about) the same cells.
  std::map<std::string, std::map<std::string, std::map<std::string, std::optional<std::array<double, 3>>>>>
      corr_cache;
  {
    CsvTable t;
    t.header = {"metric", "condition", "signal", "pearson_r", "p_value", "n"};
    for (const std::string& cond : conditions)
      for (const std::string& m : metrics)
        for (const std::string& sig : kSignals) {
          const auto row = correlate(all_rows, cond, m, sig);
          corr_cache[cond][m][sig] = row;
          if (row)
            t.rows.push_back({m, cond, sig, fmt((*row)[0]), fmt((*row)[1]),
                              std::to_string(static_cast<std::size_t>((*row)[2]))});
        }
    write_csv(t, dir + "correlations.csv");
  }

  // Per-annotator correlations, only when the dataset carries annotator labels.
  {
    std::set<std::string> annotators;
    for (const EditRecord& r : records)
      if (r.annotator) annotators.insert(*r.annotator);
    if (!annotators.empty()) {
      CsvTable t;
      t.header = {"annotator", "metric", "condition", "signal", "pearson_r", "p_value", "n"};
      for (const std::string& who : annotators) {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < n; ++i)
          if (records[i].annotator && *records[i].annotator == who) subset.push_back(i);
        for (const std::string& cond : conditions)
          for (const std::string& m : metrics)
            for (const std::string& sig : kSignals)
              if (const auto row = correlate(subset, cond, m, sig))
                t.rows.push_back({who, m, cond, sig, fmt((*row)[0]), fmt((*row)[1]),
                                  std::to_string(static_cast<std::size_t>((*row)[2]))});
      }
      write_csv(t, dir + "correlations_by_annotator.csv");
    }
  }

  // KNN regression per metric: R^2 on a held-out split, one column per signal.
  auto knn_r2 = [&](const std::string& cond, const std::string& metric,
                    const std::string& signal) -> std::optional<double> {
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
      const auto y = signal_of(records[i], signal);
      if (!y) continue;
      xs.push_back(values.at(cond).at(metric)[i]);
      ys.push_back(*y);
    }
    if (xs.size() < 2) return std::nullopt;
    const auto [train_idx, test_idx] = train_test_split(xs.size(), opt.train_fraction, global.seed);
    if (train_idx.size() < opt.knn_k || test_idx.size() < 2) {
      out << "warning: split too small for knn on " << metric << "/" << cond << "/" << signal
          << "\n";
      return std::nullopt;
    }
    PairedSamples train;
    std::vector<double> test_x, test_y;
    for (std::size_t i : train_idx) {
      train.xs.push_back(xs[i]);
      train.ys.push_back(ys[i]);
    }
    for (std::size_t i : test_idx) {
      test_x.push_back(xs[i]);
      test_y.push_back(ys[i]);
    }
    try {
      return r2_score(test_y, knn_fit_predict(train, test_x, opt.knn_k));
    } catch (const DegenerateInputError& e) {
      out << "warning: knn skipped on " << metric << "/" << cond << "/" << signal << ": "
          << e.what() << "\n";
      return std::nullopt;
    }
  };

  std::map<std::string, std::map<std::string, std::optional<double>>> knn_time, knn_keys;
  {
    CsvTable t;
    t.header = {"metric", "condition", "r2_time", "r2_keystrokes"};
    for (const std::string& cond : conditions)
      for (const std::string& m : metrics) {
        knn_time[cond][m] = knn_r2(cond, m, "edit_time_s");
        knn_keys[cond][m] = knn_r2(cond, m, "keystrokes");
        t.rows.push_back({m, cond, knn_time[cond][m] ? fmt(*knn_time[cond][m]) : "",
                          knn_keys[cond][m] ? fmt(*knn_keys[cond][m]) : ""});
      }
    write_csv(t, dir + "knn.csv");
  }

  // Linear fits per metric and signal.
  auto fit_for = [&](const std::string& cond, const std::string& metric,
                     const std::string& signal) -> std::optional<RegressionFit> {
    PairedSamples s;
    for (std::size_t i = 0; i < n; ++i) {
      const auto y = signal_of(records[i], signal);
      if (!y) continue;
      s.xs.push_back(values.at(cond).at(metric)[i]);
      s.ys.push_back(*y);
    }
    if (s.xs.size() < 2) return std::nullopt;
    try {
      return linear_fit(s);
    } catch (const DegenerateInputError& e) {
      out << "warning: fit skipped on " << metric << "/" << cond << "/" << signal << ": "
          << e.what() << "\n";
      return std::nullopt;
    }
  };

  std::map<std::string, std::map<std::string, std::optional<RegressionFit>>> fits_primary;
  const bool any_time =
      std::any_of(records.begin(), records.end(), [](const EditRecord& r) { return bool(r.edit_time_s); });
  const std::string primary_signal = any_time ? "edit_time_s" : "keystrokes";
  {
    CsvTable t;
    t.header = {"metric", "condition", "signal", "slope", "intercept", "r2"};
    for (const std::string& cond : conditions)
      for (const std::string& m : metrics)
        for (const std::string& sig : kSignals)
          if (const auto fit = fit_for(cond, m, sig)) {
            t.rows.push_back(
                {m, cond, sig, fmt(fit->slope), fmt(fit->intercept), fmt(fit->r2)});
            if (sig == primary_signal) fits_primary[cond][m] = fit;
          }
    write_csv(t, dir + "fit.csv");
  }

  // One aggregate row per metric x condition against the primary signal.
  {
    CsvTable t;
    t.header = {"metric", "condition", "pearson_r", "p_value", "knn_r2", "slope", "intercept",
                "n"};
    for (const std::string& cond : conditions)
      for (const std::string& m : metrics) {
        const auto corr = corr_cache.at(cond).at(m).at(primary_signal);
        if (!corr) continue;
        const auto& knn_cell = primary_signal == "edit_time_s" ? knn_time : knn_keys;
        const auto fit = fits_primary[cond][m];
        t.rows.push_back({m, cond, fmt((*corr)[0]), fmt((*corr)[1]),
                          knn_cell.at(cond).at(m) ? fmt(*knn_cell.at(cond).at(m)) : "",
                          fit ? fmt(fit->slope) : "", fit ? fmt(fit->intercept) : "",
                          std::to_string(static_cast<std::size_t>((*corr)[2]))});
      }
    write_csv(t, dir + "summary.csv");
  }

  out << "evaluated " << n << " records (" << metrics.size() << " metrics, " << conditions.size()
      << " conditions) into " << opt.output_dir << "\n";
}

void cmd_bench(const BenchOptions& opt, const GlobalOptions& global, std::ostream& out) {
  if (opt.sizes_bytes.empty()) throw InvalidInputError("bench needs at least one size");
  if (opt.repetitions < 1) throw InvalidInputError("bench needs repetitions >= 1");
  for (std::size_t i = 0; i < opt.sizes_bytes.size(); ++i) {
    if (opt.sizes_bytes[i] < 1024) throw InvalidInputError("bench sizes must be >= 1024 bytes");
    if (i > 0 && opt.sizes_bytes[i] <= opt.sizes_bytes[i - 1])
      throw InvalidInputError("bench sizes must be strictly ascending");
  }

  std::mt19937_64 rng(global.seed);
  auto random_text = [&](std::size_t bytes) {
    std::string s(bytes, 'a');
    for (char& c : s) c = static_cast<char>('a' + rng() % 26);
    return s;
  };

  CsvTable table;
  table.header = {"size_bytes", "median_s"};
  out << "size_bytes,median_s\n";
  for (const std::size_t size : opt.sizes_bytes) {
    std::vector<double> times;
    times.reserve(opt.repetitions);
    for (std::size_t rep = 0; rep < opt.repetitions; ++rep) {
      const SymbolText source = SymbolText::from_bytes(random_text(size / 2));
      const SymbolText target = SymbolText::from_bytes(random_text(size - size / 2));
      const auto t0 = std::chrono::steady_clock::now();
      const DistanceResult r = compression_distance(source, target);
      const auto t1 = std::chrono::steady_clock::now();
      (void)r;
      times.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    const double median =
        times.size() % 2 == 1 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
    out << size << "," << fmt(median) << "\n";
    table.rows.push_back({std::to_string(size), fmt(median)});
  }
  if (!opt.output_path.empty()) write_csv(table, opt.output_path);
}

void cmd_scenario_compare(const ScenarioCompareOptions& opt, const GlobalOptions& global,
                          std::ostream& out) {
  if (opt.output_dir.empty()) throw InvalidInputError("scenario-compare needs --output-dir");
  std::vector<EditRecord> records = load_clean_dataset(opt.dataset_path, global, out);

  std::vector<std::size_t> labeled;
  for (std::size_t i = 0; i < records.size(); ++i)
    if (records[i].scenario) labeled.push_back(i);
  if (labeled.size() < records.size())
    out << "note: skipped " << records.size() - labeled.size()
        << " records without a scenario label\n";

  // Question key: the record id with its scenario suffix stripped, so suites
  // written by synth ("q017-fast") line up across scenarios.
  auto question_key = [](const EditRecord& r) {
    const std::string suffix = "-" + scenario_name(*r.scenario);
    if (r.id.size() > suffix.size() &&
        r.id.compare(r.id.size() - suffix.size(), suffix.size(), suffix) == 0)
      return r.id.substr(0, r.id.size() - suffix.size());
    return r.id;
  };

  std::vector<DistancePair> dpairs(labeled.size());
  for (std::size_t k = 0; k < labeled.size(); ++k) {
    dpairs[k].source = SymbolText::from_bytes(records[labeled[k]].source);
    dpairs[k].target = SymbolText::from_bytes(records[labeled[k]].target);
  }
  const auto rows = batch_distance(dpairs, DistanceMode::Plain, global.jobs);

  std::map<std::string, std::map<Scenario, double>> by_question;
  std::size_t duplicates = 0;
  for (std::size_t k = 0; k < labeled.size(); ++k) {
    const EditRecord& r = records[labeled[k]];
    if (!rows[k].ok())
      throw ValidationError("distance failed for record " + r.id + ": " + rows[k].error);
    const auto [it, inserted] = by_question[question_key(r)].emplace(
        *r.scenario, static_cast<double>(rows[k].result->value));
    (void)it;
    if (!inserted) ++duplicates;
  }
  if (duplicates > 0)
    out << "note: ignored " << duplicates << " duplicate (question, scenario) rows\n";

  bool any_normal = false;
  for (const auto& [key, per_scenario] : by_question)
    any_normal = any_normal || per_scenario.count(Scenario::Normal) > 0;
  if (!any_normal) throw ValidationError("dataset has no normal-scenario records");

  std::filesystem::create_directories(opt.output_dir);
  CsvTable slopes;
  slopes.header = {"pair", "slope", "intercept", "r2", "n"};

  bool compared_any = false;
  for (const Scenario other : {Scenario::Similar, Scenario::Fast}) {
    const std::string other_name = scenario_name(other);
    PairedSamples s;
    std::size_t unmatched = 0;
    CsvTable scatter;
    scatter.header = {"id", "normal", other_name};
    for (const auto& [key, per_scenario] : by_question) {
      const bool has_normal = per_scenario.count(Scenario::Normal) > 0;
      const bool has_other = per_scenario.count(other) > 0;
      if (has_normal && has_other) {
        s.xs.push_back(per_scenario.at(Scenario::Normal));
        s.ys.push_back(per_scenario.at(other));
        scatter.rows.push_back({key, fmt(per_scenario.at(Scenario::Normal)),
                                fmt(per_scenario.at(other))});
      } else if (has_normal != has_other) {
        ++unmatched;
      }
    }
    if (scatter.rows.empty()) continue;
    compared_any = true;
    if (unmatched > 0)
      out << "note: " << unmatched << " questions lack a normal/" << other_name
          << " counterpart\n";

    write_csv(scatter, opt.output_dir + "/scatter_normal_vs_" + other_name + ".csv");
    if (s.xs.size() < 2) {
      out << "warning: fewer than 2 normal/" << other_name << " pairs, no fit\n";
      continue;
    }
    try {
      const RegressionFit fit = linear_fit(s);
      slopes.rows.push_back({"normal_vs_" + other_name, fmt(fit.slope), fmt(fit.intercept),
                             fmt(fit.r2), std::to_string(s.xs.size())});
    } catch (const DegenerateInputError& e) {
      out << "warning: fit skipped for normal_vs_" << other_name << ": " << e.what() << "\n";
    }
  }
  if (!compared_any)
    throw ValidationError("dataset needs similar- or fast-scenario records besides normal");

  write_csv(slopes, opt.output_dir + "/slopes.csv");
  out << "wrote scenario comparison into " << opt.output_dir << "\n";
}

void cmd_synth(const SynthOptions& opt, const GlobalOptions& global, std::ostream& out) {
  if (opt.output_path.empty()) throw InvalidInputError("synth needs --output");
  auto config = LlmConfig::from_env();
  if (!config)
    throw ValidationError(
        "LZDIST_API_BASE is not set; synth needs a chat-completion endpoint (see README)");
  if (global.jobs > 1) config->concurrency = static_cast<int>(global.jobs);

  std::vector<Scenario> scenarios;
  if (opt.scenarios.empty()) {
    scenarios = {Scenario::Normal, Scenario::Similar, Scenario::Fast};
  } else {
    for (const std::string& name : opt.scenarios) {
      const auto s = scenario_from_name(name);
      if (!s || *s == Scenario::Human)
        throw InvalidInputError("unknown edit scenario \"" + name + "\"");
      scenarios.push_back(*s);
    }
  }

  const std::vector<SyntheticJob> jobs = load_jobs_jsonl(opt.jobs_path);
  const PromptTemplates templates = PromptTemplates::load_from_dir(
      opt.prompts_dir.empty() ? "data/prompts" : opt.prompts_dir);

  const SuiteResult result = run_scenario_suite(jobs, scenarios, templates, *config);
  write_jsonl(result.records, opt.output_path);

  if (!opt.errors_path.empty()) {
    std::ofstream err_out(opt.errors_path, std::ios::binary);
    if (!err_out) throw IoError("cannot open " + opt.errors_path + " for writing");
    for (const SuiteFailure& f : result.failures) {
      nlohmann::ordered_json j{{"id", f.id}, {"error", f.message}};
      err_out << j.dump() << '\n';
    }
  }

  out << "wrote " << result.records.size() << " records to " << opt.output_path << " ("
      << result.failures.size() << " failures)\n";
  for (std::size_t i = 0; i < result.failures.size() && i < 5; ++i)
    out << "failure: " << result.failures[i].id << ": " << result.failures[i].message << "\n";
}

}  // namespace lzdist
