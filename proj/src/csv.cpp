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

#include "ptsim/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace ptsim::csv {

std::string format_double(double value) {
    if (value == 0.0) return "0";  // no "-0"
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

Row& Row::add(std::string_view field) {
    if (!first_) line_ += ',';
    first_ = false;
    line_ += field;
    return *this;
}

Row& Row::add(double value) { return add(std::string_view{format_double(value)}); }

Row& Row::add(long long value) { return add(std::string_view{std::to_string(value)}); }

std::string header(std::initializer_list<std::string_view> columns) {
    Row row;
    for (auto c : columns) row.add(c);
    return row.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace ptsim::csv
