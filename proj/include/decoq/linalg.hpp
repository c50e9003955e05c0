// Copyright 2026 The decoq Authors
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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace decoq {

using complexd = std::complex<double>;

// Hard size cap. A 12-qubit pure state (4096 amplitudes) is the largest
// object any operation will build; density-matrix work targets <= 7 qubits.
inline constexpr int kMaxQubits = 12;
inline constexpr int kMaxDim = 1 << kMaxQubits;

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::vector<complexd> entries);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    complexd& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    const complexd& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

    std::span<const complexd> entries() const { return a_; }

    ComplexMatrix adjoint() const;
    complexd trace() const;
    double frobenius_norm() const;

    /// max_ij |a_ij - conj(a_ji)|, zero for an exactly Hermitian matrix.
    double hermiticity_defect() const;
    double max_abs_diff(const ComplexMatrix& other) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(complexd scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(complexd s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, complexd s) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int dim_;
    std::vector<complexd> a_;
};

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Kronecker product; (a (x) b)[(i*bd + k), (j*bd + l)] = a(i,j) * b(k,l).
/// Throws std::invalid_argument if the result dimension would exceed kMaxDim.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

struct JacobiOptions {
    double off_norm_tol = 1e-12;   // converged when off-diagonal Frobenius norm drops below this
    int max_sweeps = 100;
    double hermiticity_tol = 1e-10;
};

/// All eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi
/// rotations; throws std::invalid_argument on non-Hermitian input and
/// std::runtime_error if the sweep budget is exhausted before convergence.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, const JacobiOptions& opts = {});

struct HermitianEigenSystem {
    std::vector<double> values;   // ascending
    ComplexMatrix vectors;        // column k is the eigenvector of values[k]
};

HermitianEigenSystem hermitian_eigensystem(const ComplexMatrix& m, const JacobiOptions& opts = {});

/// Unit-norm amplitude vector over the 2^n computational basis.
/// Basis convention used throughout: qubit 0 is the most significant bit of
/// the basis index, so on five qubits |00011> is index 3 and qubit 4 is the
/// least significant bit.
class PureState {
public:
    PureState(int n_qubits, std::vector<complexd> amplitudes);

    int n_qubits() const { return n_qubits_; }
    int dim() const { return static_cast<int>(amps_.size()); }
    std::span<const complexd> amplitudes() const { return amps_; }
    complexd amplitude(int index) const { return amps_[static_cast<std::size_t>(index)]; }

    double norm() const;
    /// |<this|other>|^2
    double fidelity(const PureState& other) const;

private:
    int n_qubits_;
    std::vector<complexd> amps_;
};

/// 2^n x 2^n Hermitian, unit-trace matrix. Hermiticity and trace are checked
/// on construction; positive semidefiniteness is a contract of the producing
/// operations and is verified by diagnostics/tests, not per construction.
class DensityMatrix {
public:
    DensityMatrix(int n_qubits, ComplexMatrix m);

    static DensityMatrix from_pure(const PureState& psi);
    static DensityMatrix maximally_mixed(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    int dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }

    /// Smallest eigenvalue; >= -1e-10 for a physical state. Costs a full
    /// eigendecomposition, intended for diagnostics.
    double min_eigenvalue() const;

private:
    int n_qubits_;
    ComplexMatrix m_;
};

/// Mask of the basis-index bit carrying `qubit` (qubit 0 = most significant).
inline int qubit_bit(int n_qubits, int qubit) { return 1 << (n_qubits - 1 - qubit); }

/// Transposes the indices of the qubits in `subset`: for row index r and
/// column index c, the bits at the subset positions are swapped between r
/// and c. Hermitian and trace-preserving; the result may fail positive
/// semidefiniteness, which is exactly what negativity measures.
/// `subset` must be a non-empty proper subset of the qubits.
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::span<const int> subset);

/// Traces out every qubit not in `keep`. Result qubit i corresponds to
/// keep[i] (ascending), most significant first.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

}  // namespace decoq
