/*
Copyright 2026 The nipgraph Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace nipgraph::app {

/// Six significant digits, '.' decimal separator, locale independent.
std::string format_float(double value);

/// Empty string for an undefined value.
std::string format_float(const std::optional<double>& value);

/// RFC-4180 CSV with '\n' line ends. Fields are quoted only when needed.
class CsvWriter {
 public:
  void row(std::initializer_list<std::string_view> fields);
  const std::string& str() const noexcept { return text_; }

 private:
  std::string text_;
};

void write_file(const std::filesystem::path& path, std::string_view contents);
void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& json);

}  // namespace nipgraph::app
