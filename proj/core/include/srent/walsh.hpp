// Copyright 2026 The srent Authors
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

#include <cstddef>
#include <span>

namespace srent {

/// In-place unnormalized Walsh-Hadamard transform:
///     out[k] = sum_s (-1)^{popcount(k & s)} in[s].
/// The length must be a power of two.
template <class T>
void walsh_hadamard(std::span<T> data) {
    const std::size_t size = data.size();
    for (std::size_t half = 1; half < size; half <<= 1) {
        for (std::size_t base = 0; base < size; base += 2 * half) {
            for (std::size_t j = base; j < base + half; ++j) {
                const T a = data[j];
                const T b = data[j + half];
                data[j] = a + b;
                data[j + half] = a - b;
            }
        }
    }
}

}  // namespace srent
