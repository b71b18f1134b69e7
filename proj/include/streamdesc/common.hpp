#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace streamdesc {

inline constexpr const char* kArtifactName = "streamdesc";
inline constexpr const char* kArtifactVersion = "1.0.0";

using VertexId = std::uint32_t;

// Undirected edge, stored canonically with u <= v after preprocessing.
struct Edge {
  VertexId u{0};
  VertexId v{0};

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
};

// Base error; subclasses map to CLI exit codes (config -> 2, parse/data -> 3).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid configuration: bad budget, impossible sample size, unknown kind.
struct ConfigError : Error {
  using Error::Error;
};

// Malformed input text: bad edge list line, bad CSV cell.
struct ParseError : Error {
  using Error::Error;
};

// Inconsistent or unreadable data: missing files, checksum mismatch,
// misaligned corpora.
struct DataError : Error {
  using Error::Error;
};

}  // namespace streamdesc
