#include "streamdesc/commands.hpp"

#include <atomic>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "streamdesc/descriptor_io.hpp"
#include "streamdesc/exact_oracle.hpp"

namespace streamdesc {

namespace {

using nlohmann::json;

std::string hex64(std::uint64_t value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, value);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
  if (!out) throw DataError("write failed for " + path.string());
}

void write_manifest(const std::string& out_path, json manifest) {
  manifest["artifact"] = kArtifactName;
  manifest["version"] = kArtifactVersion;
  write_text(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

// Runs fn(i) for i in [0, n) on `threads` threads; any exception wins and
// is rethrown on the calling thread.
void parallel_for(std::size_t n, std::uint32_t threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  std::uint32_t count = std::min<std::uint32_t>(
      threads, static_cast<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < count; ++i) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

LabeledCorpus load_any_corpus(const std::string& path, std::uint64_t seed) {
  std::filesystem::path p(path);
  if (!std::filesystem::exists(p)) {
    throw DataError("no such corpus: " + path);
  }
  if (std::filesystem::is_directory(p)) {
    if (!looks_like_corpus_dir(p)) {
      throw DataError("directory " + path + " has no *_A.txt corpus files");
    }
    return load_corpus_dir(p, seed);
  }

  LabeledCorpus corpus;
  corpus.name = p.stem().string();
  corpus.labels.push_back(0);

  std::ifstream probe(p, std::ios::binary);
  std::string first_word;
  probe >> first_word;
  if (first_word == "streamdesc-v1") {
    corpus.graphs.push_back(reload_stream(p));
  } else {
    corpus.graphs.push_back(
        preprocess(read_edge_list_file(p), mix_seed(seed, kGraphSeedSalt, 0)));
  }
  return corpus;
}

void cmd_compute(const ComputeOptions& options) {
  if (options.out.empty()) throw ConfigError("compute needs --out");
  const LabeledCorpus corpus = load_any_corpus(options.corpus, options.seed);

  std::vector<DescriptorRow> rows(corpus.graphs.size());
  std::vector<double> millis(corpus.graphs.size(), 0.0);
  parallel_for(
      corpus.graphs.size(), options.threads, [&](std::size_t g) {
        const PreparedStream& stream = corpus.graphs[g];
        auto start = std::chrono::steady_clock::now();
        std::uint64_t budget = options.budget.resolve(stream.num_edges());
        try {
          rows[g].values = compute_descriptor(
              stream, options.kind, budget, options.workers,
              mix_seed(options.seed, kEstimateSeedSalt, g));
        } catch (const Error& e) {
          throw DataError("graph " + std::to_string(g) + ": " + e.what());
        }
        rows[g].graph_id = static_cast<std::int64_t>(g);
        rows[g].label = corpus.labels[g];
        millis[g] = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      });

  write_descriptor_csv(options.out, rows);

  json manifest;
  manifest["command"] = "compute";
  manifest["descriptor"] = descriptor_kind_name(options.kind);
  manifest["budget"] = options.budget.describe();
  manifest["workers"] = options.workers;
  manifest["seed"] = options.seed;
  manifest["threads"] = options.threads;
  manifest["corpus"] = options.corpus;
  manifest["corpus_checksum"] = hex64(corpus_checksum(corpus));
  manifest["output"] = options.out;
  json graphs = json::array();
  for (std::size_t g = 0; g < corpus.graphs.size(); ++g) {
    graphs.push_back({{"id", g},
                      {"label", corpus.labels[g]},
                      {"vertices", corpus.graphs[g].num_vertices},
                      {"edges", corpus.graphs[g].num_edges()},
                      {"budget", options.budget.resolve(
                                     corpus.graphs[g].num_edges())},
                      {"millis", millis[g]}});
  }
  manifest["graphs"] = graphs;
  write_manifest(options.out, manifest);
  std::cout << "wrote " << rows.size() << " descriptors to " << options.out
            << "\n";
}

void cmd_oracle(const OracleOptions& options) {
  if (options.out.empty()) throw ConfigError("oracle needs --out");
  const LabeledCorpus corpus = load_any_corpus(options.corpus, options.seed);

  std::string lines;
  for (std::size_t g = 0; g < corpus.graphs.size(); ++g) {
    DenseGraph dense = DenseGraph::from_stream(corpus.graphs[g]);
    lines += oracle_record_json(static_cast<std::int64_t>(g),
                                corpus.labels[g], dense);
    lines += '\n';
  }
  write_text(options.out, lines);

  json manifest;
  manifest["command"] = "oracle";
  manifest["seed"] = options.seed;
  manifest["corpus"] = options.corpus;
  manifest["corpus_checksum"] = hex64(corpus_checksum(corpus));
  manifest["output"] = options.out;
  manifest["graphs"] = corpus.graphs.size();
  write_manifest(options.out, manifest);
  std::cout << "wrote " << corpus.graphs.size() << " oracle records to "
            << options.out << "\n";
}

void cmd_compare(const CompareOptions& options) {
  const auto estimated = read_descriptor_csv(options.estimated_csv);
  const auto exact = read_descriptor_csv(options.exact_csv);
  const ApproximationReport report =
      approximation_report(estimated, exact, options.metric);

  if (!options.out.empty()) {
    std::string csv = "graph_id,distance\n";
    for (std::size_t i = 0; i < report.graph_ids.size(); ++i) {
      csv += std::to_string(report.graph_ids[i]) + "," +
             format_double(report.distances[i]) + "\n";
    }
    write_text(options.out, csv);

    json manifest;
    manifest["command"] = "compare";
    manifest["estimated"] = options.estimated_csv;
    manifest["exact"] = options.exact_csv;
    manifest["distance"] = distance_name(options.metric);
    manifest["mean_distance"] = report.mean_distance;
    manifest["output"] = options.out;
    write_manifest(options.out, manifest);
  }
  std::cout << "mean_distance " << format_double(report.mean_distance) << "\n";
}

void cmd_classify(const ClassifyOptions& options) {
  const auto rows = read_descriptor_csv(options.descriptor_csv);
  const EvalReport report = knn_cross_validate(
      rows, options.folds, options.splits, options.metric, options.seed);

  json summary;
  summary["descriptors"] = options.descriptor_csv;
  summary["items"] = rows.size();
  summary["folds_requested"] = options.folds;
  summary["folds_used"] = report.folds_used;
  summary["folds_reduced"] = report.folds_reduced;
  summary["splits"] = report.splits;
  summary["distance"] = distance_name(options.metric);
  summary["seed"] = report.seed;
  summary["split_accuracies"] = report.split_accuracies;
  summary["mean_accuracy"] = report.mean_accuracy;

  if (report.folds_reduced) {
    std::cerr << "warning: smallest class has fewer members than " <<
        options.folds << " folds; using " << report.folds_used << "\n";
  }
  if (!options.out.empty()) {
    write_text(options.out, summary.dump(2) + "\n");
    std::string csv = "split,accuracy\n";
    for (std::size_t s = 0; s < report.split_accuracies.size(); ++s) {
      csv += std::to_string(s) + "," +
             format_double(report.split_accuracies[s]) + "\n";
    }
    write_text(options.out + ".splits.csv", csv);

    json manifest;
    manifest["command"] = "classify";
    manifest["descriptors"] = options.descriptor_csv;
    manifest["folds"] = options.folds;
    manifest["splits"] = options.splits;
    manifest["distance"] = distance_name(options.metric);
    manifest["seed"] = options.seed;
    manifest["output"] = options.out;
    write_manifest(options.out, manifest);
  }
  std::cout << "mean_accuracy " << format_double(report.mean_accuracy) << "\n";
}

}  // namespace streamdesc
