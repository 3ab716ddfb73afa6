// Copyright 2026 The rglorot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace rglorot::cli {

/// Shortest representation that parses back to the same double; "inf",
/// "-inf" and "nan" for non-finite values.
std::string format_double(double x);

using CsvCell = std::variant<std::monostate, double, long long, bool, std::string>;

/// In-memory CSV table: header row always present, LF line endings,
/// empty cells for std::monostate.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<CsvCell> row);
  std::size_t rows() const { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<CsvCell>> rows_;
};

/// Writes `content` to `path` (creating parent directories).
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// JSON number, or null when not finite.
nlohmann::json json_number(double x);
nlohmann::json json_number(const std::optional<double>& x);

}  // namespace rglorot::cli

NLOHMANN_JSON_NAMESPACE_BEGIN
template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) {
      j = *v;
    } else {
      j = nullptr;
    }
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) {
      v.reset();
    } else {
      v = j.get<T>();
    }
  }
};
NLOHMANN_JSON_NAMESPACE_END
