// Writes a synthetic JSON-lines corpus with one planted, rule-expressible
// category.

#include <CLI11.hpp>

#include <iostream>

#include "regevo/corpus.hpp"
#include "regevo/exchange.hpp"
#include "regevo/planted.hpp"

int main(int argc, char** argv) {
  regevo::PlantedSpec spec;
  std::string out;
  CLI::App app{"Generate a planted-pattern corpus"};
  app.add_option("--out", out, "Output JSON-lines path")->required();
  app.add_option("--inquiries", spec.inquiries, "Number of inquiries");
  app.add_option("--vocabulary", spec.vocabulary, "Vocabulary size");
  app.add_option("--max-gap", spec.max_gap, "Largest planted gap");
  app.add_option("--positive-fraction", spec.positive_fraction, "Target share of shapes");
  app.add_option("--seed", spec.seed, "Generator seed");
  CLI11_PARSE(app, argc, argv);
  try {
    regevo::write_corpus_records(out, regevo::make_planted_corpus(spec));
  } catch (const regevo::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << "target rule: " << regevo::serialize_rule(regevo::planted_rule(spec)) << "\n";
  return 0;
}
