// Command line front end: compute descriptors over a corpus, dump the
// brute-force oracle, compare estimated against exact descriptors, and run
// nearest-neighbour cross-validation.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "streamdesc/commands.hpp"

namespace {

std::uint64_t default_seed() {
  const char* env = std::getenv("STREAMDESC_SEED");
  if (!env || !*env) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw streamdesc::ConfigError("STREAMDESC_SEED is not an integer");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace streamdesc;

  CLI::App app{"streaming graph descriptors"};
  app.require_subcommand(1);

  std::string descriptor_name = "gabe";
  std::string budget_text = "0.25";
  std::string distance_name_opt;

  ComputeOptions compute;
  CLI::App* c = app.add_subcommand("compute",
                                   "estimate descriptors over an edge stream");
  c->add_option("corpus", compute.corpus,
                "corpus directory, stream file, or edge list")
      ->required();
  c->add_option("--descriptor", descriptor_name,
                "gabe, maeve, santa-{hn,he,hc,wn,we,wc}");
  c->add_option("--budget", budget_text,
                "edge budget: absolute count or fraction of |E|");
  c->add_option("--workers", compute.workers, "estimator replicas to average");
  c->add_option("--seed", compute.seed, "base seed (default $STREAMDESC_SEED)");
  c->add_option("--threads", compute.threads, "graphs processed in parallel");
  c->add_option("--out", compute.out, "output descriptor CSV")->required();

  OracleOptions oracle;
  CLI::App* o = app.add_subcommand("oracle",
                                   "exact counts and traces per graph");
  o->add_option("corpus", oracle.corpus, "corpus directory or edge list")
      ->required();
  o->add_option("--seed", oracle.seed, "base seed (default $STREAMDESC_SEED)");
  o->add_option("--out", oracle.out, "output JSON-lines file")->required();

  CompareOptions compare;
  CLI::App* m = app.add_subcommand("compare",
                                   "distance between two descriptor CSVs");
  m->add_option("estimated", compare.estimated_csv, "estimated CSV")->required();
  m->add_option("exact", compare.exact_csv, "reference CSV")->required();
  m->add_option("--distance", distance_name_opt, "canberra or euclidean");
  m->add_option("--out", compare.out, "per-graph distance CSV");

  ClassifyOptions classify;
  CLI::App* k = app.add_subcommand("classify",
                                   "1-NN cross-validation over a CSV");
  k->add_option("descriptors", classify.descriptor_csv, "descriptor CSV")
      ->required();
  k->add_option("--folds", classify.folds, "fold count");
  k->add_option("--splits", classify.splits, "independent split count");
  k->add_option("--distance", distance_name_opt, "canberra or euclidean");
  k->add_option("--seed", classify.seed, "base seed (default $STREAMDESC_SEED)");
  k->add_option("--out", classify.out, "JSON summary path");

  try {
    std::uint64_t env_seed = default_seed();
    compute.seed = env_seed;
    oracle.seed = env_seed;
    classify.seed = env_seed;

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int rc = app.exit(e);
      return rc == 0 ? 0 : 2;
    }

    if (c->parsed()) {
      auto kind = parse_descriptor_kind(descriptor_name);
      if (!kind) throw ConfigError("unknown descriptor '" + descriptor_name + "'");
      compute.kind = *kind;
      compute.budget = BudgetSpec::parse(budget_text);
      if (compute.workers == 0) throw ConfigError("need at least one worker");
      if (compute.threads == 0) compute.threads = 1;
      cmd_compute(compute);
    } else if (o->parsed()) {
      cmd_oracle(oracle);
    } else if (m->parsed()) {
      if (!distance_name_opt.empty()) {
        compare.metric = parse_distance(distance_name_opt);
      }
      cmd_compare(compare);
    } else if (k->parsed()) {
      if (!distance_name_opt.empty()) {
        classify.metric = parse_distance(distance_name_opt);
      }
      cmd_classify(classify);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
