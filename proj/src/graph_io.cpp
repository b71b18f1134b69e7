#include "streamdesc/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "streamdesc/rng.hpp"

namespace streamdesc {

namespace {

std::string location(const std::string& source, std::size_t line_no) {
  return source + ":" + std::to_string(line_no);
}

bool parse_u64(const char* begin, const char* end, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

// Splits on spaces/tabs/CR; returns false if any token is not a u64.
bool tokenize_u64(const std::string& line, std::vector<std::uint64_t>& out) {
  out.clear();
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    const char* tok = p;
    while (p < end && *p != ' ' && *p != '\t' && *p != '\r') ++p;
    if (tok == p) continue;
    std::uint64_t value;
    if (!parse_u64(tok, p, value)) return false;
    out.push_back(value);
  }
  return true;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

RawEdgeList parse_edge_list(const std::string& text, const std::string& source) {
  RawEdgeList raw;
  raw.source = source;
  std::istringstream in(text);
  std::string line;
  std::vector<std::uint64_t> tokens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!tokenize_u64(line, tokens) || tokens.size() != 2) {
      throw ParseError("malformed edge line at " + location(source, line_no));
    }
    raw.edges.emplace_back(tokens[0], tokens[1]);
  }
  return raw;
}

RawEdgeList read_edge_list_file(const std::filesystem::path& path) {
  return parse_edge_list(read_file(path), path.string());
}

PreparedStream preprocess(const RawEdgeList& raw, std::uint64_t seed) {
  PreparedStream out;
  out.shuffle_seed = seed;

  std::unordered_map<std::uint64_t, VertexId> relabel;
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(raw.edges.size() * 2);

  auto label_of = [&relabel](std::uint64_t original) {
    auto [it, inserted] =
        relabel.emplace(original, static_cast<VertexId>(relabel.size()));
    (void)inserted;
    return it->second;
  };

  for (const auto& [a, b] : raw.edges) {
    if (a == b) continue;  // self-loops never reach the stream
    VertexId u = label_of(a);
    VertexId v = label_of(b);
    Edge e{std::min(u, v), std::max(u, v)};
    std::uint64_t packed =
        (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint64_t>(e.v);
    if (!seen.insert(packed).second) continue;
    out.edges.push_back(e);
  }
  out.num_vertices = static_cast<VertexId>(relabel.size());

  Rng rng(seed);
  rng.shuffle(out.edges);
  return out;
}

bool looks_like_corpus_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) return false;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.size() > 6 && name.substr(name.size() - 6) == "_A.txt") return true;
  }
  return false;
}

namespace {

std::filesystem::path find_corpus_file(const std::filesystem::path& dir,
                                       const std::string& suffix) {
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.size() > suffix.size() &&
        name.substr(name.size() - suffix.size()) == suffix) {
      return entry.path();
    }
  }
  throw DataError("missing *" + suffix + " in " + dir.string());
}

std::vector<std::int64_t> read_int_lines(const std::filesystem::path& path) {
  std::vector<std::int64_t> values;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t last = line.find_last_not_of(" \t\r");
    std::int64_t value;
    const char* begin = line.data() + first;
    const char* end = line.data() + last + 1;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      throw ParseError("bad integer at " + location(path.string(), line_no));
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace

LabeledCorpus load_corpus_dir(const std::filesystem::path& dir,
                              std::uint64_t corpus_seed) {
  const auto a_path = find_corpus_file(dir, "_A.txt");
  const std::string a_name = a_path.filename().string();
  const std::string prefix = a_name.substr(0, a_name.size() - 6);

  const auto indicator =
      read_int_lines(dir / (prefix + "_graph_indicator.txt"));
  const auto labels = read_int_lines(dir / (prefix + "_graph_labels.txt"));
  if (indicator.empty()) throw DataError("empty graph indicator in " + dir.string());

  std::int64_t num_graphs = 0;
  for (std::size_t i = 0; i < indicator.size(); ++i) {
    if (indicator[i] < 1) {
      throw DataError("node " + std::to_string(i + 1) +
                      " assigned to nonpositive graph id in " + dir.string());
    }
    num_graphs = std::max(num_graphs, indicator[i]);
  }
  if (static_cast<std::int64_t>(labels.size()) != num_graphs) {
    throw DataError("label count " + std::to_string(labels.size()) +
                    " does not match graph count " + std::to_string(num_graphs) +
                    " in " + dir.string());
  }

  // Edges are grouped by the graph that owns their endpoints.
  std::vector<RawEdgeList> raw(static_cast<std::size_t>(num_graphs));
  std::istringstream in(read_file(a_path));
  std::string line;
  std::vector<std::uint64_t> tokens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (!tokenize_u64(line, tokens) || tokens.size() != 2) {
      throw ParseError("malformed adjacency line at " +
                       location(a_path.string(), line_no));
    }
    std::uint64_t a = tokens[0], b = tokens[1];
    if (a < 1 || a > indicator.size() || b < 1 || b > indicator.size()) {
      throw DataError("node id out of range at " +
                      location(a_path.string(), line_no));
    }
    std::int64_t ga = indicator[a - 1], gb = indicator[b - 1];
    if (ga != gb) {
      throw DataError("edge crosses graphs at " +
                      location(a_path.string(), line_no));
    }
    raw[static_cast<std::size_t>(ga - 1)].edges.emplace_back(a, b);
  }

  LabeledCorpus corpus;
  corpus.name = prefix;
  corpus.labels = labels;
  corpus.graphs.reserve(raw.size());
  for (std::size_t g = 0; g < raw.size(); ++g) {
    raw[g].source = prefix + "#" + std::to_string(g);
    corpus.graphs.push_back(
        preprocess(raw[g], mix_seed(corpus_seed, kGraphSeedSalt, g)));
  }
  return corpus;
}

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed) {
  const unsigned char* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string serialize_stream(const PreparedStream& s) {
  std::string body = "streamdesc-v1 " + std::to_string(s.num_vertices) + " " +
                     std::to_string(s.num_edges()) + " " +
                     std::to_string(s.shuffle_seed) + "\n";
  for (const Edge& e : s.edges) {
    body += std::to_string(e.u);
    body += ' ';
    body += std::to_string(e.v);
    body += '\n';
  }
  char trailer[32];
  std::snprintf(trailer, sizeof(trailer), "%016" PRIx64, fnv1a64(body));
  return body + trailer + "\n";
}

PreparedStream deserialize_stream(const std::string& text,
                                  const std::string& source) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty stream file " + source);

  std::vector<std::uint64_t> tokens;
  std::istringstream header(line);
  std::string magic;
  header >> magic;
  if (magic != "streamdesc-v1") {
    throw DataError("bad stream header in " + source);
  }
  std::uint64_t num_vertices, num_edges, seed;
  if (!(header >> num_vertices >> num_edges >> seed)) {
    throw DataError("bad stream header in " + source);
  }

  PreparedStream s;
  s.num_vertices = static_cast<VertexId>(num_vertices);
  s.shuffle_seed = seed;
  s.edges.reserve(num_edges);

  std::string body = line + "\n";
  for (std::uint64_t i = 0; i < num_edges; ++i) {
    if (!std::getline(in, line)) {
      throw DataError("truncated stream file " + source);
    }
    body += line + "\n";
    if (!tokenize_u64(line, tokens) || tokens.size() != 2 ||
        tokens[0] >= num_vertices || tokens[1] >= num_vertices) {
      throw DataError("bad edge line " + std::to_string(i + 2) + " in " + source);
    }
    s.edges.push_back(Edge{static_cast<VertexId>(tokens[0]),
                           static_cast<VertexId>(tokens[1])});
  }
  if (!std::getline(in, line)) {
    throw DataError("truncated stream file " + source + " (missing checksum)");
  }
  char expect[32];
  std::snprintf(expect, sizeof(expect), "%016" PRIx64, fnv1a64(body));
  std::string got = line;
  while (!got.empty() && (got.back() == '\r' || got.back() == ' ')) got.pop_back();
  if (got != expect) {
    throw DataError("checksum mismatch in " + source);
  }
  return s;
}

void persist_stream(const PreparedStream& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << serialize_stream(s);
  if (!out) throw DataError("write failed for " + path.string());
}

PreparedStream reload_stream(const std::filesystem::path& path) {
  return deserialize_stream(read_file(path), path.string());
}

std::uint64_t corpus_checksum(const LabeledCorpus& corpus) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t g = 0; g < corpus.graphs.size(); ++g) {
    const std::string blob = serialize_stream(corpus.graphs[g]);
    h = fnv1a64(blob.data(), blob.size(), h);
    std::int64_t label = g < corpus.labels.size() ? corpus.labels[g] : 0;
    h = fnv1a64(&label, sizeof(label), h);
  }
  return h;
}

}  // namespace streamdesc
