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

#include "srent/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "srent/errors.hpp"

namespace srent::io {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Complex complex_of(const json& v) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ParseError("complex entries must be [re, im] pairs");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

int qubit_count(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
        throw ParseError("document needs an integer field \"n\"");
    }
    const int n = doc["n"].get<int>();
    if (n < 1 || n > kMaxQubits) throw ParseError("qubit count out of range");
    return n;
}

json pair(Complex c) { return json::array({c.real(), c.imag()}); }

}  // namespace

StateVector parse_state_json(std::string_view text) {
    const json doc = parse(text);
    const int n = qubit_count(doc);
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) throw ParseError("missing \"amplitudes\" array");
    const auto& amps = doc["amplitudes"];
    const auto d = static_cast<std::size_t>(1) << n;
    if (amps.size() != d) throw ParseError("amplitude count must be 2^n");
    CVector v(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) v[static_cast<Eigen::Index>(i)] = complex_of(amps[i]);
    return StateVector(n, std::move(v));
}

std::string state_to_json(const StateVector& psi) {
    json doc;
    doc["n"] = psi.num_qubits();
    doc["amplitudes"] = json::array();
    for (std::size_t i = 0; i < psi.dim(); ++i) doc["amplitudes"].push_back(pair(psi[i]));
    return doc.dump();
}

DensityMatrix parse_density_json(std::string_view text) {
    const json doc = parse(text);
    const int n = qubit_count(doc);
    if (!doc.contains("entries") || !doc["entries"].is_array()) throw ParseError("missing \"entries\" array");
    const auto& rows = doc["entries"];
    const auto d = static_cast<std::size_t>(1) << n;
    if (rows.size() != d) throw ParseError("density matrix must have 2^n rows");
    CMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) {
        if (!rows[i].is_array() || rows[i].size() != d) throw ParseError("density matrix must have 2^n columns");
        for (std::size_t j = 0; j < d; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = complex_of(rows[i][j]);
        }
    }
    return DensityMatrix(n, std::move(m));
}

std::string density_to_json(const DensityMatrix& rho) {
    json doc;
    doc["n"] = rho.num_qubits();
    doc["entries"] = json::array();
    const auto& m = rho.entries();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(pair(m(i, j)));
        doc["entries"].push_back(std::move(row));
    }
    return doc.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

void require_width(int n) {
    if (n < 1 || n > kMaxQubits) throw DimensionError("named states need 1 <= n <= 16");
}

}  // namespace

StateVector resolve_state(const std::string& spec, int n) {
    if (spec == "zero") {
        require_width(n);
        return StateVector::zero(n);
    }
    if (spec == "hstate") {
        require_width(n);
        return StateVector::magic_h(n);
    }
    if (spec.rfind("haar:", 0) == 0) {
        require_width(n);
        std::uint64_t seed = 0;
        const char* begin = spec.data() + 5;
        const char* end = spec.data() + spec.size();
        const auto [ptr, ec] = std::from_chars(begin, end, seed);
        if (ec != std::errc() || ptr != end || begin == end) throw ParseError("bad seed in state spec " + spec);
        return states::haar_state(n, seed);
    }
    auto psi = parse_state_json(read_file(spec));
    if (n != 0 && psi.num_qubits() != n) throw DimensionError("state file qubit count differs from --n");
    return psi;
}

DensityMatrix resolve_density(const std::string& spec, int n) {
    if (spec == "mixed") {
        require_width(n);
        return DensityMatrix::maximally_mixed(n);
    }
    if (spec == "zero" || spec == "hstate" || spec.rfind("haar:", 0) == 0) {
        return DensityMatrix::pure(resolve_state(spec, n));
    }
    const std::string text = read_file(spec);
    const json doc = parse(text);
    if (doc.contains("amplitudes")) {
        auto psi = parse_state_json(text);
        if (n != 0 && psi.num_qubits() != n) throw DimensionError("state file qubit count differs from --n");
        return DensityMatrix::pure(psi);
    }
    auto rho = parse_density_json(text);
    if (n != 0 && rho.num_qubits() != n) throw DimensionError("density file qubit count differs from --n");
    rho.validate_positive();
    return rho;
}

Circuit read_circuit(const std::string& path, int n) { return Circuit::parse(read_file(path), n); }

}  // namespace srent::io
