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

#include "rglorot/cli/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rglorot::cli {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<CsvCell> row) {
  if (row.size() != header_.size()) throw std::logic_error("CsvTable: row width does not match header");
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::ostringstream out;
  const auto line = [&out](const auto& cells, auto&& render) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << render(cells[i]);
    }
    out << '\n';
  };
  line(header_, [](const std::string& h) { return h; });
  for (const auto& row : rows_) {
    line(row, [](const CsvCell& c) -> std::string {
      struct {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return v; }
      } visitor;
      return std::visit(visitor, c);
    });
  }
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  f << content;
  if (!f) throw std::runtime_error("write to '" + path.string() + "' failed");
}

nlohmann::json json_number(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

nlohmann::json json_number(const std::optional<double>& x) { return x ? json_number(*x) : nlohmann::json(nullptr); }

}  // namespace rglorot::cli
