// Copyright 2026 The qmaxent Authors
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

#include "qmaxent/pauli_algebra.h"

#include <cmath>
#include <stdexcept>

#include "qmaxent/errors.h"

namespace qmaxent {

namespace {

Axis axis_from_char(char c) {
    switch (c) {
        case 'I':
        case 'i':
        case '_':
            return Axis::I;
        case 'X':
        case 'x':
            return Axis::X;
        case 'Y':
        case 'y':
            return Axis::Y;
        case 'Z':
        case 'z':
            return Axis::Z;
        default:
            throw Error(ErrorCode::InvalidArgument, std::string("not a Pauli letter: '") + c + "'");
    }
}

Complex single_element(Axis axis, unsigned row, unsigned col) {
    switch (axis) {
        case Axis::I:
            return row == col ? Complex{1, 0} : Complex{0, 0};
        case Axis::X:
            return row != col ? Complex{1, 0} : Complex{0, 0};
        case Axis::Y:
            if (row == 0 && col == 1) {
                return {0, -1};
            }
            if (row == 1 && col == 0) {
                return {0, 1};
            }
            return {0, 0};
        case Axis::Z:
            if (row != col) {
                return {0, 0};
            }
            return row == 0 ? Complex{1, 0} : Complex{-1, 0};
    }
    return {0, 0};
}

// Bit mask of the sites where the factor flips the computational basis state.
std::size_t flip_mask(const PauliString &s) {
    std::size_t mask = 0;
    int n = s.size();
    for (int k = 0; k < n; ++k) {
        if (s[k] == Axis::X || s[k] == Axis::Y) {
            mask |= std::size_t{1} << (n - 1 - k);
        }
    }
    return mask;
}

}  // namespace

char axis_letter(Axis axis) {
    return "IXYZ"[static_cast<int>(axis)];
}

PauliString::PauliString(std::vector<Axis> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "a Pauli string needs at least one site");
    }
    for (Axis a : factors_) {
        if (static_cast<int>(a) > 3) {
            throw Error(ErrorCode::InvalidArgument, "factor outside {I, X, Y, Z}");
        }
    }
}

PauliString PauliString::identity(int n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "spin count must be positive");
    }
    return PauliString(std::vector<Axis>(static_cast<std::size_t>(n), Axis::I));
}

PauliString PauliString::from_letters(std::string_view letters) {
    std::vector<Axis> factors;
    factors.reserve(letters.size());
    for (char c : letters) {
        factors.push_back(axis_from_char(c));
    }
    return PauliString(std::move(factors));
}

PauliString PauliString::from_index(int n, std::size_t index) {
    std::vector<Axis> factors(static_cast<std::size_t>(n), Axis::I);
    for (int k = n - 1; k >= 0; --k) {
        factors[static_cast<std::size_t>(k)] = static_cast<Axis>(index & 3);
        index >>= 2;
    }
    if (index != 0) {
        throw Error(ErrorCode::InvalidArgument, "basis index out of range");
    }
    return PauliString(std::move(factors));
}

bool PauliString::is_identity() const noexcept {
    for (Axis a : factors_) {
        if (a != Axis::I) {
            return false;
        }
    }
    return true;
}

int PauliString::weight() const noexcept {
    int w = 0;
    for (Axis a : factors_) {
        w += a != Axis::I;
    }
    return w;
}

std::size_t PauliString::index() const noexcept {
    std::size_t idx = 0;
    for (Axis a : factors_) {
        idx = (idx << 2) | static_cast<std::size_t>(a);
    }
    return idx;
}

std::string PauliString::letters() const {
    std::string out;
    out.reserve(factors_.size());
    for (Axis a : factors_) {
        out.push_back(axis_letter(a));
    }
    return out;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.size() != size()) {
        throw Error(ErrorCode::DimensionMismatch, "Pauli strings of different length");
    }
    int anticommuting = 0;
    for (int k = 0; k < size(); ++k) {
        Axis a = (*this)[k];
        Axis b = other[k];
        anticommuting += a != Axis::I && b != Axis::I && a != b;
    }
    return anticommuting % 2 == 0;
}

PauliProduct multiply(const PauliString &a, const PauliString &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "Pauli strings of different length");
    }
    // Track the phase as a power of i.
    int power = 0;
    std::vector<Axis> out(static_cast<std::size_t>(a.size()));
    for (int k = 0; k < a.size(); ++k) {
        int x = static_cast<int>(a[k]);
        int y = static_cast<int>(b[k]);
        out[static_cast<std::size_t>(k)] = static_cast<Axis>(x ^ y);
        if (x != 0 && y != 0 && x != y) {
            // X*Y = iZ, Y*Z = iX, Z*X = iY; reversed order picks up -i.
            bool cyclic = (x % 3) + 1 == y;
            power += cyclic ? 1 : 3;
        }
    }
    static const Complex phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return {phases[power % 4], PauliString(std::move(out))};
}

ComplexMatrix pauli_matrix(Axis axis) {
    ComplexMatrix m(2, 2);
    for (unsigned r = 0; r < 2; ++r) {
        for (unsigned c = 0; c < 2; ++c) {
            m(r, c) = single_element(axis, r, c);
        }
    }
    return m;
}

Complex string_element(const PauliString &s, std::size_t row, std::size_t col) {
    int n = s.size();
    Complex value{1, 0};
    for (int k = 0; k < n; ++k) {
        unsigned shift = static_cast<unsigned>(n - 1 - k);
        unsigned r = static_cast<unsigned>((row >> shift) & 1);
        unsigned c = static_cast<unsigned>((col >> shift) & 1);
        value *= single_element(s[k], r, c);
        if (value == Complex{0, 0}) {
            return value;
        }
    }
    return value;
}

ComplexMatrix string_matrix(const PauliString &s) {
    std::size_t dim = std::size_t{1} << s.size();
    std::size_t mask = flip_mask(s);
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t row = col ^ mask;
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = string_element(s, row, col);
    }
    return m;
}

int spins_for_dimension(Eigen::Index dim) {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw Error(ErrorCode::DimensionMismatch, "matrix dimension " + std::to_string(dim) + " is not a power of two");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    return n;
}

double expectation(const ComplexMatrix &rho, const PauliString &s) {
    std::size_t dim = std::size_t{1} << s.size();
    if (rho.rows() != rho.cols() || static_cast<std::size_t>(rho.rows()) != dim) {
        throw Error(ErrorCode::DimensionMismatch, "state of dimension " + std::to_string(rho.rows()) +
                                                      " does not match observable " + s.letters());
    }
    std::size_t mask = flip_mask(s);
    Complex trace{0, 0};
    for (std::size_t i = 0; i < dim; ++i) {
        std::size_t k = i ^ mask;
        trace += rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) * string_element(s, k, i);
    }
    if (std::abs(trace.imag()) > 1e-10) {
        throw Error(ErrorCode::NonRealExpectation,
                    "Tr(rho " + s.letters() + ") has imaginary part " + std::to_string(trace.imag()), trace.imag());
    }
    return trace.real();
}

std::vector<PauliString> operator_basis(int n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "spin count must be positive");
    }
    std::size_t count = std::size_t{1} << (2 * n);
    std::vector<PauliString> basis;
    basis.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        basis.push_back(PauliString::from_index(n, idx));
    }
    return basis;
}

BlochExpansion::BlochExpansion(int n) : n_(n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "spin count must be positive");
    }
    coefficients_.assign(std::size_t{1} << (2 * n), 0.0);
    coefficients_[0] = 1.0;
}

double BlochExpansion::coefficient(const PauliString &s) const {
    if (s.size() != n_) {
        throw Error(ErrorCode::DimensionMismatch, "observable length does not match expansion");
    }
    return coefficients_[s.index()];
}

void BlochExpansion::set(const PauliString &s, double value) {
    if (s.size() != n_) {
        throw Error(ErrorCode::DimensionMismatch, "observable length does not match expansion");
    }
    if (s.is_identity()) {
        throw Error(ErrorCode::InvalidArgument, "the identity coefficient is fixed at 1");
    }
    coefficients_[s.index()] = value;
}

BlochExpansion bloch_decompose(const ComplexMatrix &rho) {
    int n = spins_for_dimension(rho.rows());
    if (rho.cols() != rho.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "density matrix must be square");
    }
    BlochExpansion e(n);
    std::size_t count = e.size();
    for (std::size_t idx = 1; idx < count; ++idx) {
        e.set(PauliString::from_index(n, idx), expectation(rho, PauliString::from_index(n, idx)));
    }
    return e;
}

ComplexMatrix bloch_compose(const BlochExpansion &e) {
    int n = e.spins();
    std::size_t dim = std::size_t{1} << n;
    auto d = static_cast<Eigen::Index>(dim);
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (std::size_t idx = 0; idx < e.size(); ++idx) {
        double c = e.coefficient(idx);
        if (c == 0.0) {
            continue;
        }
        PauliString s = PauliString::from_index(n, idx);
        std::size_t mask = flip_mask(s);
        for (std::size_t col = 0; col < dim; ++col) {
            std::size_t row = col ^ mask;
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += c * string_element(s, row, col);
        }
    }
    m /= static_cast<double>(dim);
    return m;
}

}  // namespace qmaxent
