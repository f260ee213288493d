#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace chatelet::tools {

inline constexpr const char* kBatchFormat = "# chatelet-batch v1";

/// Fixed column order of the batch CSV.
std::vector<std::string> batch_columns();

/// One CSV row (no newline) for a surface file; errors land in the last column.
std::string batch_row(const std::filesystem::path& file);

/// Format line, header and one row per *.surface / *.json file, sorted by
/// file name.
std::string batch_csv(const std::filesystem::path& dir);

}  // namespace chatelet::tools
