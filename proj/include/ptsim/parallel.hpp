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

#include <cstdint>
#include <exception>
#include <vector>

namespace ptsim {

/// Selects the OpenMP kernel or the serial reference; both give identical results.
enum class Exec { Serial, Parallel };

/// Runs body(i) for i in [0, n). Iterations must be independent. The first
/// exception (lowest index) is rethrown after the loop.
template <typename Body>
void for_each_index(std::int64_t n, Exec exec, Body&& body) {
    std::vector<std::exception_ptr> errors(exec == Exec::Parallel ? static_cast<std::size_t>(n) : 0);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (std::int64_t i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    } else {
        for (std::int64_t i = 0; i < n; ++i) body(i);
    }
}

/// 64-bit seed for stream `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0);

}  // namespace ptsim
