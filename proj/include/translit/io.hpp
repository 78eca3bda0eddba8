#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace translit::io {

/// Whole file as bytes. Throws translit::Error if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes `<path>.tmp.<pid>` then renames it over `path`, so readers never
/// observe a partially written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Splits on '\n', dropping a trailing '\r' from each line. A final empty
/// line after the last newline is not returned.
std::vector<std::string_view> split_lines(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char sep);

std::string_view trim(std::string_view s);

}  // namespace translit::io
