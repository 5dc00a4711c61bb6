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

#include <string>
#include <string_view>

#include "srent/circuit.hpp"
#include "srent/states.hpp"

namespace srent::io {

/// {"n": int, "amplitudes": [[re, im], ...]}
StateVector parse_state_json(std::string_view text);
std::string state_to_json(const StateVector& psi);

/// {"n": int, "entries": [[[re, im], ...], ...]} in row-major order.
DensityMatrix parse_density_json(std::string_view text);
std::string density_to_json(const DensityMatrix& rho);

std::string read_file(const std::string& path);

/// "zero", "hstate" (|H> on every qubit), "haar:<seed>", or a JSON file path.
/// `n` sizes the named states; for files it must be 0 or match the file.
StateVector resolve_state(const std::string& spec, int n);

/// A named state as a pure density matrix, "mixed" for I/d, or a density JSON file.
DensityMatrix resolve_density(const std::string& spec, int n);

/// Reads a circuit text file; `n` = 0 infers the width.
Circuit read_circuit(const std::string& path, int n = 0);

}  // namespace srent::io
