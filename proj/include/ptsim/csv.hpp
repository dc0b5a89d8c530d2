// Copyright 2026 The ptsim Authors
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
#include <initializer_list>
#include <string>
#include <string_view>

namespace ptsim::csv {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

/// Builds one CSV line (no quoting; callers never emit commas inside fields).
class Row {
public:
    Row& add(std::string_view field);
    Row& add(double value);
    Row& add(long long value);
    const std::string& str() const { return line_; }

private:
    std::string line_;
    bool first_ = true;
};

std::string header(std::initializer_list<std::string_view> columns);

/// Writes `content` to `path`, creating parent directories. Throws std::runtime_error on failure.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace ptsim::csv
