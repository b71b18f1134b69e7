#include "streamdesc/descriptor_io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace streamdesc {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string descriptor_csv(const std::vector<DescriptorRow>& rows) {
  std::size_t dim = rows.empty() ? 0 : rows.front().values.size();
  std::string out = "graph_id,label";
  for (std::size_t i = 0; i < dim; ++i) {
    out += ",v" + std::to_string(i);
  }
  out += '\n';
  for (const DescriptorRow& row : rows) {
    if (row.values.size() != dim) {
      throw DataError("descriptor dimensions disagree within the corpus");
    }
    out += std::to_string(row.graph_id);
    out += ',';
    out += std::to_string(row.label);
    for (double v : row.values) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

void write_descriptor_csv(const std::filesystem::path& path,
                          const std::vector<DescriptorRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << descriptor_csv(rows);
  if (!out) throw DataError("write failed for " + path.string());
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

std::int64_t parse_i64(const std::string& cell, const std::string& where) {
  std::int64_t value;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw ParseError("bad integer '" + cell + "' at " + where);
  }
  return value;
}

double parse_f64(const std::string& cell, const std::string& where) {
  char* end = nullptr;
  double value = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size() || cell.empty()) {
    throw ParseError("bad number '" + cell + "' at " + where);
  }
  return value;
}

}  // namespace

std::vector<DescriptorRow> parse_descriptor_csv(const std::string& text,
                                                const std::string& source) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty descriptor file " + source);
  auto header = split_csv_line(line);
  if (header.size() < 3 || header[0] != "graph_id" || header[1] != "label") {
    throw ParseError("bad descriptor header in " + source);
  }
  const std::size_t dim = header.size() - 2;

  std::vector<DescriptorRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv_line(line);
    const std::string where = source + ":" + std::to_string(line_no);
    if (cells.size() != dim + 2) {
      throw ParseError("expected " + std::to_string(dim + 2) + " cells at " +
                       where);
    }
    DescriptorRow row;
    row.graph_id = parse_i64(cells[0], where);
    row.label = parse_i64(cells[1], where);
    row.values.reserve(dim);
    for (std::size_t i = 2; i < cells.size(); ++i) {
      row.values.push_back(parse_f64(cells[i], where));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<DescriptorRow> read_descriptor_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_descriptor_csv(buf.str(), path.string());
}

}  // namespace streamdesc
