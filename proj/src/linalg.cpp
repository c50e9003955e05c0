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

#include "decoq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace decoq {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    require(dim >= 1, "ComplexMatrix: dim must be >= 1");
    require(dim <= kMaxDim, "ComplexMatrix: dim exceeds supported maximum");
    a_.assign(static_cast<std::size_t>(dim) * dim, complexd(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<complexd> entries) : dim_(dim), a_(std::move(entries)) {
    require(dim >= 1, "ComplexMatrix: dim must be >= 1");
    require(dim <= kMaxDim, "ComplexMatrix: dim exceeds supported maximum");
    require(a_.size() == static_cast<std::size_t>(dim) * dim,
            "ComplexMatrix: entry count does not match dim*dim");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

complexd ComplexMatrix::trace() const {
    complexd t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const complexd& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    double d = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    require(dim_ == other.dim_, "max_abs_diff: dimension mismatch");
    double d = 0.0;
    for (std::size_t k = 0; k < a_.size(); ++k) d = std::max(d, std::abs(a_[k] - other.a_[k]));
    return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require(dim_ == other.dim_, "ComplexMatrix::operator+=: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require(dim_ == other.dim_, "ComplexMatrix::operator-=: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complexd scalar) {
    for (complexd& z : a_) z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.dim_ == b.dim_, "ComplexMatrix::operator*: dimension mismatch");
    const int n = a.dim_;
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const complexd aik = a(i, k);
            if (aik == complexd(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2);
    m(0, 1) = complexd(0.0, -1.0);
    m(1, 0) = complexd(0.0, 1.0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const long prod = static_cast<long>(a.dim()) * b.dim();
    if (prod > kMaxDim) {
        std::ostringstream os;
        os << "tensor_product: result dimension " << prod << " exceeds the supported maximum " << kMaxDim;
        throw std::invalid_argument(os.str());
    }
    const int ad = a.dim(), bd = b.dim();
    ComplexMatrix r(ad * bd);
    for (int i = 0; i < ad; ++i)
        for (int j = 0; j < ad; ++j) {
            const complexd aij = a(i, j);
            if (aij == complexd(0.0, 0.0)) continue;
            for (int k = 0; k < bd; ++k)
                for (int l = 0; l < bd; ++l) r(i * bd + k, j * bd + l) = aij * b(k, l);
        }
    return r;
}

namespace {

double off_diagonal_norm(const std::vector<complexd>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a[static_cast<std::size_t>(i) * n + j]);
    return std::sqrt(s);
}

// One complex Givens rotation zeroing a[p*n+q] (and its mirror). The 2x2
// principal block [[app, apq], [conj(apq), aqq]] is diagonalized by
// J = [[c, -s e^{i phi}], [s e^{-i phi}, c]] with apq = r e^{i phi} and
// theta = atan2(2r, app - aqq) / 2; A <- J^dag A J keeps A Hermitian with a
// real diagonal by construction.
void jacobi_rotate(std::vector<complexd>& a, std::vector<complexd>* v, int n, int p, int q) {
    const complexd apq = a[static_cast<std::size_t>(p) * n + q];
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const double app = a[static_cast<std::size_t>(p) * n + p].real();
    const double aqq = a[static_cast<std::size_t>(q) * n + q].real();
    const complexd phase = apq / r;
    const double theta = 0.5 * std::atan2(2.0 * r, app - aqq);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const complexd sp = s * phase;             // s e^{i phi}
    const complexd spc = s * std::conj(phase); // s e^{-i phi}

    complexd* ap = a.data() + static_cast<std::size_t>(p) * n;
    complexd* aq = a.data() + static_cast<std::size_t>(q) * n;

    // columns p and q: A <- A J
    for (int i = 0; i < n; ++i) {
        complexd* row = a.data() + static_cast<std::size_t>(i) * n;
        const complexd tp = row[p], tq = row[q];
        row[p] = c * tp + spc * tq;
        row[q] = -sp * tp + c * tq;
    }
    // rows p and q: A <- J^dag A
    for (int j = 0; j < n; ++j) {
        const complexd tp = ap[j], tq = aq[j];
        ap[j] = c * tp + sp * tq;
        aq[j] = -spc * tp + c * tq;
    }
    const double c2 = c * c, s2 = s * s, cross = 2.0 * c * s * r;
    ap[p] = complexd(app * c2 + cross + aqq * s2, 0.0);
    aq[q] = complexd(app * s2 - cross + aqq * c2, 0.0);
    ap[q] = complexd(0.0, 0.0);
    aq[p] = complexd(0.0, 0.0);

    if (v != nullptr) {
        // V <- V J accumulates eigenvectors as columns
        for (int i = 0; i < n; ++i) {
            complexd* row = v->data() + static_cast<std::size_t>(i) * n;
            const complexd tp = row[p], tq = row[q];
            row[p] = c * tp + spc * tq;
            row[q] = -sp * tp + c * tq;
        }
    }
}

void jacobi_diagonalize(std::vector<complexd>& a, std::vector<complexd>* v, int n, const JacobiOptions& opts) {
    if (n <= 1) return;
    // Off-elements below this can only leave a residual off-norm under tol.
    const double skip = opts.off_norm_tol / (static_cast<double>(n) * n);
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        if (off_diagonal_norm(a, n) < opts.off_norm_tol) return;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(a[static_cast<std::size_t>(p) * n + q]) > skip) jacobi_rotate(a, v, n, p, q);
    }
    if (off_diagonal_norm(a, n) >= opts.off_norm_tol) {
        std::ostringstream os;
        os << "hermitian_eigenvalues: Jacobi failed to converge in " << opts.max_sweeps
           << " sweeps (off-diagonal norm " << off_diagonal_norm(a, n) << ")";
        throw std::runtime_error(os.str());
    }
}

std::vector<complexd> hermitian_working_copy(const ComplexMatrix& m, double tol, const char* who) {
    const double defect = m.hermiticity_defect();
    if (defect > tol) {
        std::ostringstream os;
        os << who << ": matrix is not Hermitian (max asymmetry " << defect << ", tolerance " << tol << ")";
        throw std::invalid_argument(os.str());
    }
    const int n = m.dim();
    std::vector<complexd> a(static_cast<std::size_t>(n) * n);
    // symmetrize: wipes the sub-tolerance asymmetry
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i) * n + i] = complexd(m(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const complexd z = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a[static_cast<std::size_t>(i) * n + j] = z;
            a[static_cast<std::size_t>(j) * n + i] = std::conj(z);
        }
    }
    return a;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, const JacobiOptions& opts) {
    auto a = hermitian_working_copy(m, opts.hermiticity_tol, "hermitian_eigenvalues");
    const int n = m.dim();
    jacobi_diagonalize(a, nullptr, n, opts);
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = a[static_cast<std::size_t>(i) * n + i].real();
    std::sort(vals.begin(), vals.end());
    return vals;
}

HermitianEigenSystem hermitian_eigensystem(const ComplexMatrix& m, const JacobiOptions& opts) {
    auto a = hermitian_working_copy(m, opts.hermiticity_tol, "hermitian_eigensystem");
    const int n = m.dim();
    std::vector<complexd> v(static_cast<std::size_t>(n) * n, complexd(0.0, 0.0));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
    jacobi_diagonalize(a, &v, n, opts);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<std::size_t>(x) * n + x].real() < a[static_cast<std::size_t>(y) * n + y].real();
    });

    HermitianEigenSystem sys{std::vector<double>(n), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        sys.values[k] = a[static_cast<std::size_t>(order[k]) * n + order[k]].real();
        for (int i = 0; i < n; ++i) sys.vectors(i, k) = v[static_cast<std::size_t>(i) * n + order[k]];
    }
    return sys;
}

PureState::PureState(int n_qubits, std::vector<complexd> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    require(n_qubits >= 1 && n_qubits <= kMaxQubits, "PureState: n_qubits must be in [1, 12]");
    require(amps_.size() == (std::size_t{1} << n_qubits),
            "PureState: amplitude count must be 2^n_qubits");
    double s = 0.0;
    for (const complexd& z : amps_) s += std::norm(z);
    if (std::abs(s - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "PureState: squared norm " << s << " deviates from 1 beyond 1e-12";
        throw std::invalid_argument(os.str());
    }
}

double PureState::norm() const {
    double s = 0.0;
    for (const complexd& z : amps_) s += std::norm(z);
    return std::sqrt(s);
}

double PureState::fidelity(const PureState& other) const {
    require(n_qubits_ == other.n_qubits_, "PureState::fidelity: qubit count mismatch");
    complexd ip = 0.0;
    for (std::size_t k = 0; k < amps_.size(); ++k) ip += std::conj(amps_[k]) * other.amps_[k];
    return std::norm(ip);
}

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix m) : n_qubits_(n_qubits), m_(std::move(m)) {
    require(n_qubits >= 1 && n_qubits <= kMaxQubits, "DensityMatrix: n_qubits must be in [1, 12]");
    require(m_.dim() == (1 << n_qubits), "DensityMatrix: matrix dim must be 2^n_qubits");
    const double defect = m_.hermiticity_defect();
    if (defect > 1e-12) {
        std::ostringstream os;
        os << "DensityMatrix: not Hermitian (max asymmetry " << defect << ")";
        throw std::invalid_argument(os.str());
    }
    const complexd t = m_.trace();
    if (std::abs(t - complexd(1.0, 0.0)) > 1e-12) {
        std::ostringstream os;
        os << "DensityMatrix: trace " << t.real() << (t.imag() < 0 ? "" : "+") << t.imag()
           << "i deviates from 1 beyond 1e-12";
        throw std::invalid_argument(os.str());
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    const int dim = psi.dim();
    ComplexMatrix m(dim);
    const auto amps = psi.amplitudes();
    for (int i = 0; i < dim; ++i) {
        if (amps[i] == complexd(0.0, 0.0)) continue;
        for (int j = 0; j < dim; ++j) m(i, j) = amps[i] * std::conj(amps[j]);
    }
    return DensityMatrix(psi.n_qubits(), std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    require(n_qubits >= 1 && n_qubits <= kMaxQubits, "maximally_mixed: n_qubits must be in [1, 12]");
    const int dim = 1 << n_qubits;
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0 / dim;
    return DensityMatrix(n_qubits, std::move(m));
}

double DensityMatrix::min_eigenvalue() const {
    return hermitian_eigenvalues(m_).front();
}

namespace {

void validate_qubit_subset(std::span<const int> subset, int n_qubits, const char* who) {
    require(!subset.empty(), std::string(who) + ": qubit subset must be non-empty");
    std::vector<int> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        require(sorted[k] >= 0 && sorted[k] < n_qubits, std::string(who) + ": qubit index out of range");
        if (k > 0) require(sorted[k] != sorted[k - 1], std::string(who) + ": duplicate qubit index");
    }
}

}  // namespace

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::span<const int> subset) {
    const int n = rho.n_qubits();
    validate_qubit_subset(subset, n, "partial_transpose");
    if (static_cast<int>(subset.size()) == n)
        throw std::invalid_argument("partial_transpose: subset must be a proper subset (full-register cut is degenerate)");

    int smask = 0;
    for (int q : subset) smask |= qubit_bit(n, q);
    const int dim = rho.dim();
    const ComplexMatrix& in = rho.matrix();
    ComplexMatrix out(dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            const int rs = (r & ~smask) | (c & smask);
            const int cs = (c & ~smask) | (r & smask);
            out(r, c) = in(rs, cs);
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    const int n = rho.n_qubits();
    validate_qubit_subset(keep, n, "partial_trace");

    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    const int k = static_cast<int>(kept.size());

    std::vector<bool> is_kept(n, false);
    for (int q : kept) is_kept[q] = true;
    std::vector<int> traced;
    for (int q = 0; q < n; ++q)
        if (!is_kept[q]) traced.push_back(q);

    // expand a reduced index (MSB = first listed qubit) into full-register bits
    auto expansion_table = [n](const std::vector<int>& qubits) {
        const int count = static_cast<int>(qubits.size());
        std::vector<int> table(std::size_t{1} << count, 0);
        for (int x = 0; x < (1 << count); ++x) {
            int bits = 0;
            for (int i = 0; i < count; ++i)
                if ((x >> (count - 1 - i)) & 1) bits |= qubit_bit(n, qubits[i]);
            table[x] = bits;
        }
        return table;
    };
    const std::vector<int> keep_bits = expansion_table(kept);
    const std::vector<int> traced_bits = expansion_table(traced);

    const ComplexMatrix& in = rho.matrix();
    ComplexMatrix out(1 << k);
    for (int x = 0; x < (1 << k); ++x) {
        for (int y = 0; y < (1 << k); ++y) {
            complexd s = 0.0;
            for (int t_bits : traced_bits) s += in(keep_bits[x] | t_bits, keep_bits[y] | t_bits);
            out(x, y) = s;
        }
    }
    return DensityMatrix(k, std::move(out));
}

}  // namespace decoq
