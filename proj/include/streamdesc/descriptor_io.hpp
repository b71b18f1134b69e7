#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "streamdesc/eval.hpp"

namespace streamdesc {

// Doubles are written with 17 significant digits so the text round-trips
// bit for bit.
std::string format_double(double value);

// Header "graph_id,label,v0,...,v{d-1}", one row per graph.
std::string descriptor_csv(const std::vector<DescriptorRow>& rows);
void write_descriptor_csv(const std::filesystem::path& path,
                          const std::vector<DescriptorRow>& rows);
std::vector<DescriptorRow> parse_descriptor_csv(const std::string& text,
                                                const std::string& source);
std::vector<DescriptorRow> read_descriptor_csv(
    const std::filesystem::path& path);

}  // namespace streamdesc
