// Copyright 2026 The tascope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace tascope::io {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Strict full-string parse; throws DataError on failure.
double parse_double(std::string_view text);

/// Comma-separated table with a header row; fields are pre-formatted.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    [[nodiscard]] std::string serialize() const;
    static CsvTable parse(std::string_view text);
};

/// Writes to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path &path, std::string_view content);

std::string read_file(const std::filesystem::path &path);

/// 64-bit FNV-1a digest as 16 hex digits; identifies input files in manifests.
std::string fnv1a_hex(std::string_view bytes);

std::vector<std::string> split(std::string_view text, char delimiter);

} // namespace tascope::io
