#include "regevo/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "regevo/corpus.hpp"
#include "regevo/evaluation.hpp"
#include "regevo/evolve.hpp"
#include "regevo/exchange.hpp"
#include "regevo/rng.hpp"

namespace regevo {

namespace fs = std::filesystem;
using nlohmann::json;

void RunConfig::validate() const {
  gp.validate();
  hybrid.validate();
  if (!(split_ratio > 0.0 && split_ratio < 1.0)) throw UsageError("split_ratio must lie in (0, 1)");
  if (!(feature_threshold >= 0.0)) throw UsageError("feature_threshold must be non-negative");
}

namespace {

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw UsageError("config: " + where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw UsageError("config: unknown key '" + where + key + "'");
  }
}

template <class T>
void read(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

std::string resolve(const std::string& path, const std::string& base_dir) {
  if (path.empty() || base_dir.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(base_dir) / path).lexically_normal().string();
}

void read_gp(const json& j, GpConfig& gp) {
  check_keys(j,
             {"population_size", "crossover_speed", "mutation_speed", "f_beta", "insertion_period",
              "stall_window", "max_generations", "init_gap_range", "threads"},
             "gp.");
  read(j, "population_size", gp.population_size);
  read(j, "crossover_speed", gp.crossover_speed);
  read(j, "mutation_speed", gp.mutation_speed);
  read(j, "f_beta", gp.f_beta);
  read(j, "insertion_period", gp.insertion_period);
  read(j, "stall_window", gp.stall_window);
  read(j, "max_generations", gp.max_generations);
  read(j, "threads", gp.threads);
  if (j.contains("init_gap_range")) {
    const auto range = j.at("init_gap_range").get<std::vector<std::uint32_t>>();
    if (range.size() != 2) throw UsageError("config: gp.init_gap_range must be [min, max]");
    gp.init_gap_min = range[0];
    gp.init_gap_max = range[1];
  }
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text, const std::string& base_dir) {
  RunConfig cfg;
  try {
    const json j = json::parse(json_text);
    check_keys(j,
               {"corpus", "categories", "feature_threshold", "split_ratio", "output_dir", "seed",
                "lowercase", "gp", "hybrid"},
               "");
    read(j, "corpus", cfg.corpus);
    read(j, "feature_threshold", cfg.feature_threshold);
    read(j, "split_ratio", cfg.split_ratio);
    read(j, "output_dir", cfg.output_dir);
    read(j, "seed", cfg.seed);
    read(j, "lowercase", cfg.lowercase);
    if (j.contains("categories")) {
      const auto& c = j.at("categories");
      if (c.is_string()) {
        if (c.get<std::string>() != "all") {
          throw UsageError("config: categories must be \"all\" or a list of ids");
        }
      } else {
        cfg.categories = c.get<std::vector<std::string>>();
      }
    }
    if (j.contains("gp")) read_gp(j.at("gp"), cfg.gp);
    if (j.contains("hybrid")) {
      const auto& h = j.at("hybrid");
      check_keys(h, {"confidence_gate", "top_k"}, "hybrid.");
      read(h, "confidence_gate", cfg.hybrid.confidence_gate);
      read(h, "top_k", cfg.hybrid.top_k);
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  cfg.corpus = resolve(cfg.corpus, base_dir);
  cfg.output_dir = resolve(cfg.output_dir, base_dir);
  cfg.validate();
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str(), fs::path(path).parent_path().string());
}

namespace {

// Flags shared by the subcommands; empty values leave the config untouched.
struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> categories;
  std::string out;
  std::string corpus;
  std::optional<std::uint32_t> threads;
};

RunConfig effective_config(const Overrides& o, bool need_corpus) {
  RunConfig cfg = o.config.empty() ? RunConfig{} : load_run_config(o.config);
  if (o.seed) cfg.seed = *o.seed;
  if (!o.categories.empty()) cfg.categories = o.categories;
  if (!o.corpus.empty()) cfg.corpus = o.corpus;
  if (o.threads) cfg.gp.threads = *o.threads;
  cfg.validate();
  if (need_corpus && cfg.corpus.empty()) {
    throw UsageError("no corpus given: set \"corpus\" in --config or pass --corpus");
  }
  return cfg;
}

Tokenizer tokenizer_for(const RunConfig& cfg) {
  TokenizerOptions opts;
  opts.lowercase = cfg.lowercase;
  return reference_tokenizer(opts);
}

struct Corpora {
  LabeledCorpus all;
  LabeledCorpus train;
  LabeledCorpus test;
};

Corpora load_corpora(const RunConfig& cfg) {
  Corpora c;
  c.all = ingest(cfg.corpus, tokenizer_for(cfg));
  auto [train, test] = train_test_split(c.all, cfg.split_ratio, cfg.seed);
  c.train = std::move(train);
  c.test = std::move(test);
  return c;
}

std::vector<std::string> requested_categories(const RunConfig& cfg, const LabeledCorpus& corpus) {
  if (cfg.categories.empty()) return corpus.categories();
  std::set<std::string> seen;
  std::vector<std::string> out;
  for (const auto& c : cfg.categories) {
    if (!corpus.has_category(c)) throw UsageError("unknown category: '" + c + "'");
    if (seen.insert(c).second) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Category ids may hold any character; file names keep [A-Za-z0-9._-].
std::string file_stem(const std::string& category) {
  std::string out;
  for (unsigned char ch : category) {
    out += (std::isalnum(ch) || ch == '.' || ch == '_' || ch == '-') ? static_cast<char>(ch) : '_';
  }
  if (out.empty() || out.front() == '.') out.insert(out.begin(), '_');
  return out;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xF];
  return s;
}

json gp_json(const GpConfig& gp) {
  return {{"population_size", gp.population_size},
          {"crossover_speed", gp.crossover_speed},
          {"mutation_speed", gp.mutation_speed},
          {"f_beta", gp.f_beta},
          {"insertion_period", gp.insertion_period},
          {"stall_window", gp.stall_window},
          {"max_generations", gp.max_generations},
          {"init_gap_range", {gp.init_gap_min, gp.init_gap_max}},
          {"rng_seed", gp.rng_seed}};
}

std::vector<RegexVector> load_rules(const std::vector<std::string>& files) {
  std::vector<RegexVector> out;
  std::map<std::string, std::string> owner;
  for (const auto& f : files) {
    for (auto& v : load_rule_file(f)) {
      auto [it, fresh] = owner.emplace(v.category, f);
      if (!fresh) {
        throw UsageError("category '" + v.category + "' defined in both " + it->second + " and " + f);
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

// Binary confusion counts of each vector on `corpus`, one row per vector.
std::vector<std::pair<std::string, ConfusionCounts>> score_vectors(
    const std::vector<RegexVector>& vectors, const LabeledCorpus& corpus) {
  const InvertedIndex index(corpus);
  std::vector<std::pair<std::string, ConfusionCounts>> rows;
  for (const auto& v : vectors) {
    if (!corpus.has_category(v.category)) {
      throw Error("category '" + v.category + "' does not occur in the corpus");
    }
    const CategorySplit split = split_by_category(corpus, v.category);
    rows.emplace_back(v.category, SplitEvaluator(split, index).evaluate(v));
  }
  return rows;
}

const LabeledCorpus& pick_split(const Corpora& c, const std::string& which) {
  if (which == "test") return c.test;
  if (which == "train") return c.train;
  return c.all;
}

int cmd_evolve(const RunConfig& cfg) {
  if (cfg.output_dir.empty()) throw UsageError("evolve needs an output directory (--out)");
  const Corpora corpora = load_corpora(cfg);
  const auto categories = requested_categories(cfg, corpora.train);
  const Tokenizer tokenizer = tokenizer_for(cfg);
  fs::create_directories(cfg.output_dir);
  const fs::path out_dir(cfg.output_dir);
  const std::uint64_t corpus_hash = hash_file(cfg.corpus);
  auto index = std::make_shared<const InvertedIndex>(corpora.train);

  std::set<std::string> stems;
  for (const auto& c : categories) {
    if (!stems.insert(file_stem(c)).second) {
      throw UsageError("categories map to the same file name: '" + file_stem(c) + "'");
    }
  }

  std::vector<RegexVector> evolved;
  for (const auto& category : categories) {
    try {
      GpConfig gp = cfg.gp;
      gp.rng_seed = mix_seed(cfg.seed, category);
      const CategoryArtifacts artifacts =
          build_category_artifacts(corpora.train, category, cfg.feature_threshold, index);
      const EvolutionResult result = evolve(artifacts, gp, {}, tokenizer);
      const std::string stem = file_stem(category);
      const std::string rules_name = stem + ".rules";
      const std::string history_name = stem + ".history.csv";

      save_rule_file((out_dir / rules_name).string(), {result.best.as_vector(category)},
                     {"category " + category, "train f_beta " + format_double(*result.best.fitness),
                      "generations " + std::to_string(result.history.back().generation) + ", " +
                          to_string(result.stop)});
      {
        auto out = open_output(out_dir / history_name);
        write_history_csv(out, result.history);
      }
      json manifest = {{"category", category},
                       {"corpus", cfg.corpus},
                       {"corpus_hash", hex64(corpus_hash)},
                       {"seed", cfg.seed},
                       {"split_ratio", cfg.split_ratio},
                       {"feature_threshold", cfg.feature_threshold},
                       {"lowercase", cfg.lowercase},
                       {"gp", gp_json(gp)},
                       {"generations", result.history.back().generation},
                       {"stop_reason", to_string(result.stop)},
                       {"train_f_beta", *result.best.fitness},
                       {"rules_file", rules_name},
                       {"history_file", history_name}};
      {
        auto out = open_output(out_dir / (stem + ".manifest.json"));
        out << manifest.dump(2) << '\n';
      }
      // Metrics come from the file just written, not from memory.
      for (auto& v : load_rule_file((out_dir / rules_name).string())) evolved.push_back(std::move(v));
      std::cerr << category << ": train f_beta " << format_double(*result.best.fitness) << " after "
                << result.history.back().generation << " generations (" << to_string(result.stop)
                << ")\n";
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw Error("category '" + category + "': " + e.what());
    }
  }

  const MetricsReport report = make_report(score_vectors(evolved, corpora.test), cfg.gp.f_beta);
  {
    auto out = open_output(out_dir / "metrics.csv");
    write_metrics_csv(out, report);
  }
  write_metrics_csv(std::cout, report);
  return 0;
}

int cmd_evaluate(const RunConfig& cfg, const std::vector<std::string>& rule_files,
                 const std::string& split, const std::string& out_path) {
  auto vectors = load_rules(rule_files);
  if (!cfg.categories.empty()) {
    std::set<std::string> keep(cfg.categories.begin(), cfg.categories.end());
    std::erase_if(vectors, [&](const RegexVector& v) { return !keep.count(v.category); });
  }
  const Corpora corpora = load_corpora(cfg);
  const MetricsReport report =
      make_report(score_vectors(vectors, pick_split(corpora, split)), cfg.gp.f_beta);
  if (out_path.empty()) {
    write_metrics_csv(std::cout, report);
  } else {
    auto out = open_output(out_path);
    write_metrics_csv(out, report);
  }
  return 0;
}

int cmd_classify(const Overrides& o, const std::vector<std::string>& rule_files,
                 const std::vector<std::string>& texts, const std::string& input) {
  RunConfig cfg = effective_config(o, false);
  auto vectors = load_rules(rule_files);
  if (!cfg.corpus.empty()) vectors = order_by_priority(std::move(vectors), load_corpora(cfg).train);

  std::vector<std::string> batch = texts;
  if (!input.empty()) {
    std::ifstream in(input, std::ios::binary);
    if (!in) throw Error("cannot read input file: " + input);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      batch.push_back(line);
    }
  }
  std::ofstream file;
  if (!o.out.empty()) file = open_output(o.out);
  std::ostream& out = o.out.empty() ? std::cout : file;
  const Tokenizer tokenizer = tokenizer_for(cfg);
  for (const auto& text : batch) {
    const ClassifyResult r = classify(text, vectors, tokenizer);
    json line = {{"text", text},
                 {"category", r.category ? json(*r.category) : json(nullptr)},
                 {"matches", r.matches}};
    out << line.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
  }
  return 0;
}

int cmd_hybrid_eval(const RunConfig& cfg, const std::vector<std::string>& rule_files) {
  const auto vectors = load_rules(rule_files);
  const Corpora corpora = load_corpora(cfg);
  const BaselineModel model = train_baseline(corpora.train);
  const HybridReport report = evaluate_hybrid(model, vectors, corpora.test, cfg.hybrid);
  if (cfg.output_dir.empty()) {
    write_hybrid_csv(std::cout, report);
  } else {
    fs::create_directories(cfg.output_dir);
    {
      auto out = open_output(fs::path(cfg.output_dir) / "hybrid.csv");
      write_hybrid_csv(out, report);
    }
    {
      auto out = open_output(fs::path(cfg.output_dir) / "provenance.csv");
      write_provenance_csv(out, report);
    }
    write_hybrid_csv(std::cout, report);
  }
  std::cerr << "accuracy: baseline " << report.baseline_correct << '/' << report.total
            << ", hybrid " << report.hybrid_correct << '/' << report.total << "\n";
  for (std::size_t i = 0; i < report.provenance_counts.size(); ++i) {
    std::cerr << to_string(static_cast<Provenance>(i)) << ": " << report.provenance_counts[i]
              << "\n";
  }
  return 0;
}

void add_common(CLI::App* cmd, Overrides& o, bool with_categories = true) {
  cmd->add_option("--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "Master seed");
  if (with_categories) cmd->add_option("--category", o.categories, "Restrict to a category (repeatable)");
  cmd->add_option("--corpus", o.corpus, "JSON-lines corpus");
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Evolve interpretable word-proximity rules for text categories"};
  app.require_subcommand(1);
  Overrides o;
  std::vector<std::string> rule_files, texts;
  std::string split = "test", input;

  auto* evolve_cmd = app.add_subcommand("evolve", "Evolve one rule vector per category");
  add_common(evolve_cmd, o);
  evolve_cmd->add_option("--out", o.out, "Output directory");
  evolve_cmd->add_option("--threads", o.threads, "Fitness evaluation threads");

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score rule files on a corpus split");
  add_common(evaluate_cmd, o);
  evaluate_cmd->add_option("--rules", rule_files, "Rule files")->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--split", split, "Corpus part to score")
      ->check(CLI::IsMember({"test", "train", "all"}));
  evaluate_cmd->add_option("--out", o.out, "Metrics CSV path (default stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "Assign categories to texts");
  add_common(classify_cmd, o, false);
  classify_cmd->add_option("--rules", rule_files, "Rule files")->required()->check(CLI::ExistingFile);
  classify_cmd->add_option("--text", texts, "Text to classify (repeatable)");
  classify_cmd->add_option("--input", input, "File with one text per line")->check(CLI::ExistingFile);
  classify_cmd->add_option("--out", o.out, "JSON-lines output path (default stdout)");

  auto* hybrid_cmd = app.add_subcommand("hybrid-eval", "Compare the baseline with baseline+regex");
  add_common(hybrid_cmd, o, false);
  hybrid_cmd->add_option("--rules", rule_files, "Rule files")->required()->check(CLI::ExistingFile);
  hybrid_cmd->add_option("--out", o.out, "Output directory (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (evolve_cmd->parsed()) {
      RunConfig cfg = effective_config(o, true);
      if (!o.out.empty()) cfg.output_dir = o.out;
      return cmd_evolve(cfg);
    }
    if (evaluate_cmd->parsed()) return cmd_evaluate(effective_config(o, true), rule_files, split, o.out);
    if (classify_cmd->parsed()) {
      if (texts.empty() && input.empty()) throw UsageError("classify needs --text or --input");
      return cmd_classify(o, rule_files, texts, input);
    }
    RunConfig cfg = effective_config(o, true);
    if (!o.out.empty()) cfg.output_dir = o.out;
    return cmd_hybrid_eval(cfg, rule_files);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> storage = args;
  storage.insert(storage.begin(), "regevo");
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  argv.push_back(nullptr);
  return run_cli(static_cast<int>(storage.size()), argv.data());
}

}  // namespace regevo
