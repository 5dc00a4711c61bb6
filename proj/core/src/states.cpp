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

#include "srent/states.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "srent/errors.hpp"

namespace srent {

namespace {

std::size_t checked_dim(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw DimensionError("qubit count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    return std::size_t{1} << n;
}

void check_square(int n, const CMatrix& m, const char* what) {
    const auto d = static_cast<Eigen::Index>(checked_dim(n));
    if (m.rows() != d || m.cols() != d) {
        throw DimensionError(std::string(what) + " must be " + std::to_string(d) + "x" + std::to_string(d));
    }
}

}  // namespace

StateVector::StateVector(int n, CVector amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != checked_dim(n)) {
        throw DimensionError("state vector length must be 2^n");
    }
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > kInvariantTolerance) {
        throw DomainError("state vector is not normalized");
    }
}

StateVector StateVector::normalized(int n, CVector amplitudes) {
    const double norm = amplitudes.norm();
    if (norm == 0.0) throw DomainError("cannot normalize the zero vector");
    amplitudes /= norm;
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(int n, std::uint64_t index) {
    const std::size_t d = checked_dim(n);
    if (index >= d) throw DimensionError("basis index out of range");
    CVector v = CVector::Zero(static_cast<Eigen::Index>(d));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(n, std::move(v));
}

StateVector StateVector::magic_h(int n) {
    const double r = 1.0 / std::numbers::sqrt2;
    CVector one(2);
    one << r, std::polar(r, std::numbers::pi / 4);
    StateVector single(1, one);
    StateVector out = single;
    for (int i = 1; i < n; ++i) out = states::tensor(out, single);
    return out;
}

DensityMatrix::DensityMatrix(int n, CMatrix entries) : n_(n), entries_(std::move(entries)) {
    check_square(n, entries_, "density matrix");
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kInvariantTolerance) {
        throw DomainError("density matrix is not Hermitian");
    }
    if (std::abs(entries_.trace() - Complex(1.0)) > kInvariantTolerance) {
        throw DomainError("density matrix trace differs from 1");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    return DensityMatrix(psi.num_qubits(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
    const auto d = static_cast<Eigen::Index>(checked_dim(n));
    return DensityMatrix(n, CMatrix::Identity(d, d) / static_cast<double>(d));
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

void DensityMatrix::validate_positive(double tolerance) const {
    if (min_eigenvalue() < -tolerance) throw DomainError("density matrix has a negative eigenvalue");
}

UnitaryMatrix::UnitaryMatrix(int n, CMatrix entries) : n_(n), entries_(std::move(entries)) {
    check_square(n, entries_, "unitary");
    const auto d = entries_.rows();
    if ((entries_.adjoint() * entries_ - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > kInvariantTolerance) {
        throw DomainError("matrix is not unitary");
    }
}

UnitaryMatrix UnitaryMatrix::identity(int n) {
    const auto d = static_cast<Eigen::Index>(checked_dim(n));
    return UnitaryMatrix(n, CMatrix::Identity(d, d));
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(n_, entries_.adjoint()); }

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& other) const {
    if (other.n_ != n_) throw DimensionError("unitary product: qubit counts differ");
    return UnitaryMatrix(n_, entries_ * other.entries_);
}

StateVector UnitaryMatrix::operator*(const StateVector& psi) const {
    if (psi.num_qubits() != n_) throw DimensionError("unitary and state qubit counts differ");
    return StateVector::normalized(n_, entries_ * psi.amplitudes());
}

namespace gates {

CMatrix identity() { return CMatrix::Identity(2, 2); }

CMatrix h() {
    CMatrix m(2, 2);
    const double r = 1.0 / std::numbers::sqrt2;
    m << r, r, r, -r;
    return m;
}

CMatrix s() { return phase(std::numbers::pi / 2); }

CMatrix t() { return phase(std::numbers::pi / 4); }

CMatrix x() {
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

CMatrix y() {
    CMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

CMatrix z() {
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

CMatrix phase(double theta) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    // Exact values at multiples of pi/2 keep Clifford phases free of rounding.
    const double quarter = theta / (std::numbers::pi / 2);
    const double nearest = std::round(quarter);
    if (std::abs(quarter - nearest) < 1e-15) {
        static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        m(1, 1) = kPowers[((static_cast<long long>(nearest) % 4) + 4) % 4];
    } else {
        m(1, 1) = std::polar(1.0, theta);
    }
    return m;
}

CMatrix cnot() {
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
}

}  // namespace gates

namespace states {

namespace {

void check_targets(int n, std::span<const int> targets, Eigen::Index gate_dim) {
    if (gate_dim != (Eigen::Index{1} << targets.size())) throw DimensionError("gate size does not match target count");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= n) throw DimensionError("gate target out of range");
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) throw DimensionError("gate targets must be distinct");
        }
    }
}

}  // namespace

void apply_gate_inplace(CVector& amplitudes, int n, const CMatrix& gate, std::span<const int> targets) {
    check_targets(n, targets, gate.rows());
    const std::size_t k = targets.size();
    const std::size_t sub = std::size_t{1} << k;
    // offsets[j] = amplitude-index bits set by gate-local index j.
    std::vector<std::size_t> offsets(sub, 0);
    std::size_t target_mask = 0;
    for (std::size_t j = 0; j < sub; ++j) {
        for (std::size_t t = 0; t < k; ++t) {
            if ((j >> (k - 1 - t)) & 1) offsets[j] |= std::size_t{1} << (n - 1 - targets[t]);
        }
    }
    for (std::size_t t = 0; t < k; ++t) target_mask |= std::size_t{1} << (n - 1 - targets[t]);

    const std::size_t d = std::size_t{1} << n;
    std::vector<Complex> in(sub);
    for (std::size_t base = 0; base < d; ++base) {
        if (base & target_mask) continue;
        for (std::size_t j = 0; j < sub; ++j) in[j] = amplitudes[static_cast<Eigen::Index>(base | offsets[j])];
        for (std::size_t r = 0; r < sub; ++r) {
            Complex acc = 0.0;
            for (std::size_t c = 0; c < sub; ++c) {
                acc += gate(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
            }
            amplitudes[static_cast<Eigen::Index>(base | offsets[r])] = acc;
        }
    }
}

StateVector apply_gate(const StateVector& psi, const CMatrix& gate, std::span<const int> targets) {
    CVector amps = psi.amplitudes();
    apply_gate_inplace(amps, psi.num_qubits(), gate, targets);
    return StateVector::normalized(psi.num_qubits(), std::move(amps));
}

CMatrix embed_gate(const CMatrix& gate, std::span<const int> targets, int n) {
    const auto d = static_cast<Eigen::Index>(checked_dim(n));
    CMatrix out(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        CVector col = CVector::Zero(d);
        col[c] = 1.0;
        apply_gate_inplace(col, n, gate, targets);
        out.col(c) = col;
    }
    return out;
}

StateVector haar_state(int n, Rng& rng) {
    const auto d = static_cast<Eigen::Index>(checked_dim(n));
    CVector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v[i] = Complex(rng.normal(), rng.normal());
    return StateVector::normalized(n, std::move(v));
}

StateVector haar_state(int n, std::uint64_t seed) {
    Rng rng(seed);
    return haar_state(n, rng);
}

UnitaryMatrix haar_unitary(int n, Rng& rng) {
    const auto d = static_cast<Eigen::Index>(checked_dim(n));
    CMatrix g(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < d; ++r) g(r, c) = Complex(rng.normal(), rng.normal());
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix& packed = qr.matrixQR();
    for (Eigen::Index c = 0; c < d; ++c) {
        const Complex rjj = packed(c, c);
        q.col(c) *= rjj / std::abs(rjj);
    }
    return UnitaryMatrix(n, std::move(q));
}

UnitaryMatrix haar_unitary(int n, std::uint64_t seed) {
    Rng rng(seed);
    return haar_unitary(n, rng);
}

double purity(const DensityMatrix& rho) {
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return rho.entries().squaredNorm();
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    const int n = a.num_qubits() + b.num_qubits();
    const auto da = a.amplitudes().size();
    const auto db = b.amplitudes().size();
    CVector v(da * db);
    for (Eigen::Index i = 0; i < da; ++i) v.segment(i * db, db) = a.amplitudes()[i] * b.amplitudes();
    return StateVector::normalized(n, std::move(v));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(a.num_qubits() + b.num_qubits(), kron(a.entries(), b.entries()));
}

UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return UnitaryMatrix(a.num_qubits() + b.num_qubits(), kron(a.entries(), b.entries()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    const int n = rho.num_qubits();
    if (keep.empty()) throw DimensionError("partial trace must keep at least one qubit");
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw DimensionError("partial trace keep-set has duplicates");
    }
    if (kept.front() < 0 || kept.back() >= n) throw DimensionError("partial trace keep-set out of range");

    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
    }
    const int nk = static_cast<int>(kept.size());
    const int nt = static_cast<int>(traced.size());
    auto scatter = [n](const std::vector<int>& qubits, std::size_t local) {
        std::size_t full = 0;
        const int m = static_cast<int>(qubits.size());
        for (int i = 0; i < m; ++i) {
            if ((local >> (m - 1 - i)) & 1) full |= std::size_t{1} << (n - 1 - qubits[i]);
        }
        return full;
    };
    const std::size_t dk = std::size_t{1} << nk;
    const std::size_t dt = std::size_t{1} << nt;
    std::vector<std::size_t> kept_bits(dk), traced_bits(dt);
    for (std::size_t i = 0; i < dk; ++i) kept_bits[i] = scatter(kept, i);
    for (std::size_t i = 0; i < dt; ++i) traced_bits[i] = scatter(traced, i);

    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    const CMatrix& m = rho.entries();
    for (std::size_t r = 0; r < dk; ++r) {
        for (std::size_t c = 0; c < dk; ++c) {
            Complex acc = 0.0;
            for (std::size_t t = 0; t < dt; ++t) {
                acc += m(static_cast<Eigen::Index>(kept_bits[r] | traced_bits[t]),
                         static_cast<Eigen::Index>(kept_bits[c] | traced_bits[t]));
            }
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
        }
    }
    // Re-symmetrize so round-off cannot trip the Hermiticity check.
    CMatrix herm = 0.5 * (out + out.adjoint());
    return DensityMatrix(nk, std::move(herm));
}

}  // namespace states

}  // namespace srent
