#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lzdist/commands.hpp"
#include "lzdist/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Compression-based text distance toolkit"};
  app.require_subcommand(1);

  lzdist::GlobalOptions global;
  app.add_option("--seed", global.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--jobs", global.jobs, "Worker threads for per-record computation")
      ->capture_default_str();
  app.add_flag("--nfc", global.nfc, "Apply Unicode NFC normalization to all text inputs");

  lzdist::DistOptions dist;
  std::string normalize_kind;
  CLI::App* cmd_dist = app.add_subcommand("dist", "Compression distance between two text files");
  cmd_dist->add_option("--source", dist.source_path, "Dictionary text file")->required();
  cmd_dist->add_option("--target", dist.target_path, "Text to be parsed against the dictionary")
      ->required();
  cmd_dist->add_option("--context", dist.context_path,
                       "Optional knowledge text appended to the dictionary");
  cmd_dist
      ->add_option("--normalize", normalize_kind,
                   "Also print distance divided by the target byte length (not part of the "
                   "reported experiments)")
      ->check(CLI::IsMember({"target-len"}));

  lzdist::FactorizeOptions factorize;
  CLI::App* cmd_factorize =
      app.add_subcommand("factorize", "Print the LZ77 phrase decomposition of a file");
  cmd_factorize->add_option("--input", factorize.input_path, "Text file to factorize")->required();

  lzdist::EvalOptions eval;
  CLI::App* cmd_eval =
      app.add_subcommand("eval", "Correlate metrics with effort signals over a JSONL dataset");
  cmd_eval->add_option("--dataset", eval.dataset_path, "Edit-record JSONL file")->required();
  cmd_eval->add_option("--metric", eval.metrics,
                       "Metric to evaluate (repeatable); default: all of compression, "
                       "levenshtein, bleu, rouge_l, ter");
  cmd_eval->add_option("--condition", eval.conditions,
                       "plain and/or with_context (repeatable); default: plain");
  cmd_eval->add_option("--knn-k", eval.knn_k, "Neighbor count for the KNN regressor")
      ->capture_default_str();
  cmd_eval->add_option("--train-fraction", eval.train_fraction, "Train share of the KNN split")
      ->capture_default_str();
  cmd_eval->add_option("--output-dir", eval.output_dir, "Directory for the CSV reports")
      ->required();

  lzdist::SimulateOptions simulate;
  CLI::App* cmd_simulate =
      app.add_subcommand("simulate", "Generate a synthetic effort dataset (JSONL)");
  cmd_simulate->add_option("--n", simulate.n, "Number of records")->capture_default_str();
  cmd_simulate->add_option("--noise-sigma", simulate.noise_sigma, "Gaussian noise on edit time")
      ->capture_default_str();
  cmd_simulate->add_option("--output", simulate.output_path, "Output JSONL path")->required();

  lzdist::SynthOptions synth;
  CLI::App* cmd_synth = app.add_subcommand(
      "synth", "Generate scenario edits through a chat-completion endpoint");
  cmd_synth->add_option("--jobs-file", synth.jobs_path, "JSONL of question / initial_answer / knowledge rows")
      ->required();
  cmd_synth->add_option("--output", synth.output_path, "Output JSONL of edit records")->required();
  cmd_synth->add_option("--errors", synth.errors_path, "Optional JSONL of per-row failures");
  cmd_synth->add_option("--prompts-dir", synth.prompts_dir,
                        "Directory with initial/normal/similar/fast templates (default data/prompts)");
  cmd_synth->add_option("--scenario", synth.scenarios,
                        "Scenario to run (repeatable); default: normal, similar, fast");

  lzdist::BenchOptions bench;
  CLI::App* cmd_bench =
      app.add_subcommand("bench", "Time compression_distance on random texts of given sizes");
  cmd_bench->add_option("--sizes", bench.sizes_bytes, "Total input sizes in bytes, ascending, each >= 1024")
      ->required()
      ->delimiter(',');
  cmd_bench->add_option("--repetitions", bench.repetitions, "Timings per size (median reported)")
      ->capture_default_str();
  cmd_bench->add_option("--output", bench.output_path, "Optional CSV path (stdout regardless)");

  lzdist::ScenarioCompareOptions compare;
  CLI::App* cmd_compare = app.add_subcommand(
      "scenario-compare", "Fit normal-vs-similar and normal-vs-fast distance slopes");
  cmd_compare->add_option("--dataset", compare.dataset_path, "Edit-record JSONL with scenario labels")
      ->required();
  cmd_compare->add_option("--output-dir", compare.output_dir, "Directory for slopes and scatter CSVs")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    dist.normalize_target_len = normalize_kind == "target-len";
    if (cmd_dist->parsed()) lzdist::cmd_dist(dist, global, std::cout);
    if (cmd_factorize->parsed()) lzdist::cmd_factorize(factorize, global, std::cout);
    if (cmd_eval->parsed()) lzdist::cmd_eval(eval, global, std::cout);
    if (cmd_simulate->parsed()) lzdist::cmd_simulate(simulate, global, std::cout);
    if (cmd_synth->parsed()) lzdist::cmd_synth(synth, global, std::cout);
    if (cmd_bench->parsed()) lzdist::cmd_bench(bench, global, std::cout);
    if (cmd_compare->parsed()) lzdist::cmd_scenario_compare(compare, global, std::cout);
  } catch (const lzdist::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lzdist::DegenerateInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lzdist::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lzdist::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lzdist::TransportError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
