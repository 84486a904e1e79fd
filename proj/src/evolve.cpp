#include "regevo/evolve.hpp"

#include <algorithm>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "regevo/evaluation.hpp"

namespace regevo {

CategoryArtifacts build_category_artifacts(const LabeledCorpus& corpus, const std::string& category,
                                           double feature_threshold,
                                           std::shared_ptr<const InvertedIndex> index) {
  CategoryArtifacts a;
  a.split = split_by_category(corpus, category);
  if (a.split.positive.empty()) throw CorpusError("category '" + category + "' has no inquiries");
  a.positive = build_feature_dictionary(a.split, feature_threshold);
  if (a.positive.empty()) {
    throw CorpusError("category '" + category + "' has an empty feature dictionary");
  }
  a.negative = build_negative_dictionary(a.split);
  a.cooccurrence = build_cooccurrence(corpus, a.split.positive, a.positive.words());
  a.index = index ? std::move(index) : std::make_shared<const InvertedIndex>(corpus);
  return a;
}

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kStalled:
      return "stalled";
    case StopReason::kMaxGenerations:
      return "max_generations";
  }
  return "unknown";
}

namespace {

class FitnessPool {
 public:
  FitnessPool(const SplitEvaluator& evaluator, double beta, std::uint32_t threads)
      : evaluator_(evaluator), beta_(beta), threads_(std::max<std::uint32_t>(threads, 1)) {}

  void evaluate(std::vector<Individual>& individuals) {
    std::vector<Individual*> todo;
    std::vector<std::string> keys;
    for (auto& ind : individuals) {
      if (ind.fitness) continue;
      std::string key = ind.key();
      if (auto it = cache_.find(key); it != cache_.end()) {
        ind.fitness = it->second;
        continue;
      }
      todo.push_back(&ind);
      keys.push_back(std::move(key));
    }
    run(todo);
    if (cache_.size() > kCacheLimit) cache_.clear();
    for (std::size_t i = 0; i < todo.size(); ++i) cache_.emplace(std::move(keys[i]), *todo[i]->fitness);
  }

 private:
  static constexpr std::size_t kCacheLimit = 500000;

  void run(const std::vector<Individual*>& todo) {
    const std::size_t workers = std::min<std::size_t>(threads_, todo.size());
    if (workers <= 1) {
      for (Individual* ind : todo) fitness(*ind, evaluator_, beta_);
      return;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < todo.size(); i += workers) fitness(*todo[i], evaluator_, beta_);
      });
    }
    for (auto& t : pool) t.join();
  }

  const SplitEvaluator& evaluator_;
  double beta_;
  std::uint32_t threads_;
  std::unordered_map<std::string, double> cache_;
};

GenerationRecord summarize(std::uint32_t generation, const std::vector<Individual>& pop) {
  GenerationRecord r;
  r.generation = generation;
  r.best_f = *pop.front().fitness;
  double sum = 0.0, rules = 0.0;
  for (const auto& ind : pop) {
    r.best_f = std::max(r.best_f, *ind.fitness);
    sum += *ind.fitness;
    rules += static_cast<double>(ind.rules.size());
  }
  r.avg_f = sum / static_cast<double>(pop.size());
  r.mean_rule_count = rules / static_cast<double>(pop.size());
  return r;
}

std::size_t best_index(const std::vector<Individual>& pop) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (*pop[i].fitness > *pop[best].fitness) best = i;
  }
  return best;
}

}  // namespace

EvolutionResult evolve(const CategoryArtifacts& artifacts, const GpConfig& cfg,
                       const EvolveObserver& observer, const Tokenizer& tokenizer) {
  cfg.validate();
  if (artifacts.split.positive.empty()) throw CorpusError("empty positive set");
  if (artifacts.positive.empty()) throw CorpusError("empty feature dictionary");

  const SplitEvaluator evaluator(artifacts.split, *artifacts.index);
  FitnessPool pool(evaluator, cfg.f_beta, cfg.threads);
  const WordSources words = artifacts.sources();
  Rng rng(cfg.rng_seed);
  auto created = [&](const Individual& ind) {
    if (observer.on_created) observer.on_created(ind);
  };

  Population pop = initialize_population(artifacts.split.category, words, cfg, rng, tokenizer);
  for (const auto& ind : pop.individuals) created(ind);
  pool.evaluate(pop.individuals);

  EvolutionResult result;
  auto record = [&] {
    const GenerationRecord r = summarize(pop.generation, pop.individuals);
    result.history.push_back(r);
    pop.best_fitness_history.push_back(r.best_f);
    if (observer.on_generation) observer.on_generation(r);
    return r;
  };
  double best = record().best_f;
  std::uint32_t unchanged = 0;
  const std::size_t n = cfg.population_size;

  while (pop.generation < cfg.max_generations) {
    const GenerationRecord& last = result.history.back();
    const double f_max = last.best_f, f_avg = last.avg_f;
    const auto& parents = pop.individuals;

    std::vector<Individual> offspring;
    for (std::size_t i = 0; i < n; ++i) {
      const double p = operator_probability(*parents[i].fitness, f_max, f_avg, cfg.crossover_speed);
      if (!rng.bernoulli(p)) continue;
      std::size_t j = rng.index(n - 1);
      if (j >= i) ++j;
      auto [a, b] = crossover(parents[i], parents[j], rng);
      offspring.push_back(std::move(a));
      offspring.push_back(std::move(b));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double p = operator_probability(*parents[i].fitness, f_max, f_avg, cfg.mutation_speed);
      if (!rng.bernoulli(p)) continue;
      Individual m = mutate(parents[i], words, rng);
      if (!m.fitness) offspring.push_back(std::move(m));
    }

    std::vector<Individual> combined = pop.individuals;
    combined.insert(combined.end(), std::make_move_iterator(offspring.begin()),
                    std::make_move_iterator(offspring.end()));
    ++pop.generation;

    if (pop.generation % cfg.insertion_period == 0) {
      // The current elite survives unchanged alongside its extended copy.
      Individual elite = pop.individuals[best_index(pop.individuals)];
      insert_rules(combined, words, cfg, rng);
      combined.push_back(std::move(elite));
      for (std::size_t i = 0; i + 1 < combined.size(); ++i) created(combined[i]);
    } else {
      for (std::size_t i = n; i < combined.size(); ++i) created(combined[i]);
    }

    pool.evaluate(combined);
    pop.individuals = select_next_generation(std::move(combined), n, rng);

    const double now = record().best_f;
    if (now == best) {
      if (++unchanged >= cfg.stall_window) {
        result.stop = StopReason::kStalled;
        break;
      }
    } else {
      best = now;
      unchanged = 0;
    }
  }

  result.best = pop.individuals[best_index(pop.individuals)];
  return result;
}

void write_history_csv(std::ostream& out, const std::vector<GenerationRecord>& history) {
  out << "generation,best_f,avg_f,population_rule_count_mean\n";
  for (const auto& r : history) {
    out << r.generation << ',' << format_double(r.best_f) << ',' << format_double(r.avg_f) << ','
        << format_double(r.mean_rule_count) << '\n';
  }
}

}  // namespace regevo
