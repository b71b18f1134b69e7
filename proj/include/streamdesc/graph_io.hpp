#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "streamdesc/common.hpp"

namespace streamdesc {

// Edge list as read from disk: original vertex labels, original order,
// possibly with self-loops and duplicates.
struct RawEdgeList {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::string source;
};

// Cleaned stream: self-loops dropped, duplicates removed, vertices relabeled
// to [0, num_vertices), edge order shuffled by `shuffle_seed`. Vertices exist
// only as edge endpoints, so num_vertices == 0 iff the stream is empty.
struct PreparedStream {
  std::vector<Edge> edges;
  VertexId num_vertices{0};
  std::uint64_t shuffle_seed{0};

  std::uint64_t num_edges() const { return edges.size(); }
};

struct LabeledCorpus {
  std::vector<PreparedStream> graphs;
  std::vector<std::int64_t> labels;
  std::string name;
};

// Parses "u v" pairs, one per line. Blank lines and lines starting with '#'
// are skipped. Anything else (wrong token count, non-integers) raises
// ParseError naming `source` and the 1-based line number.
RawEdgeList parse_edge_list(const std::string& text, const std::string& source);

RawEdgeList read_edge_list_file(const std::filesystem::path& path);

// Drops self-loops, dedupes undirected pairs, relabels vertices in first
// appearance order, then shuffles the deduped edges with `seed`.
PreparedStream preprocess(const RawEdgeList& raw, std::uint64_t seed);

// Loads a corpus laid out as <dir>/<name>_A.txt (comma separated, 1-indexed
// global node ids), <name>_graph_indicator.txt and <name>_graph_labels.txt.
// Each member graph is preprocessed with seed mix_seed(corpus_seed,
// kGraphSeedSalt, graph_index).
LabeledCorpus load_corpus_dir(const std::filesystem::path& dir,
                              std::uint64_t corpus_seed);

bool looks_like_corpus_dir(const std::filesystem::path& dir);

// FNV-1a over bytes; used for the persisted-stream trailer and the corpus
// checksum recorded in run manifests.
std::uint64_t fnv1a64(const void* data, std::size_t len,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a64(const std::string& s);

std::string serialize_stream(const PreparedStream& s);
PreparedStream deserialize_stream(const std::string& text,
                                  const std::string& source);

void persist_stream(const PreparedStream& s, const std::filesystem::path& path);
PreparedStream reload_stream(const std::filesystem::path& path);

std::uint64_t corpus_checksum(const LabeledCorpus& corpus);

}  // namespace streamdesc
