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

#ifndef QMAXENT_PAULI_ALGEBRA_H
#define QMAXENT_PAULI_ALGEBRA_H

#include <Eigen/Dense>
#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qmaxent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

enum class Axis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_letter(Axis axis);

/// Tensor product of single-site Pauli factors. Site 1 is the leftmost factor
/// and the most significant bit of a basis index.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::vector<Axis> factors);

    static PauliString identity(int n);
    /// Parses a compact letter form such as "XIZ" (case-insensitive, '_' is I).
    static PauliString from_letters(std::string_view letters);
    /// Inverse of `index()`.
    static PauliString from_index(int n, std::size_t index);

    int size() const noexcept {
        return static_cast<int>(factors_.size());
    }
    Axis operator[](int site) const {
        return factors_[static_cast<std::size_t>(site)];
    }
    const std::vector<Axis> &factors() const noexcept {
        return factors_;
    }
    bool is_identity() const noexcept;
    int weight() const noexcept;

    /// Lexicographic position in the operator basis (I < X < Y < Z, site 1 first).
    std::size_t index() const noexcept;
    std::string letters() const;

    bool commutes_with(const PauliString &other) const;

    auto operator<=>(const PauliString &other) const = default;
    bool operator==(const PauliString &other) const = default;

   private:
    std::vector<Axis> factors_;
};

/// a * b = phase * string, phase in {1, i, -1, -i}.
struct PauliProduct {
    Complex phase;
    PauliString string;
};

PauliProduct multiply(const PauliString &a, const PauliString &b);

ComplexMatrix pauli_matrix(Axis axis);
ComplexMatrix string_matrix(const PauliString &s);

/// Matrix element <row| s |col> without building the matrix.
Complex string_element(const PauliString &s, std::size_t row, std::size_t col);

/// Tr(rho * s). Throws DimensionMismatch, or NonRealExpectation when the
/// imaginary part exceeds 1e-10.
double expectation(const ComplexMatrix &rho, const PauliString &s);

/// All 4^n strings in lexicographic order, identity first.
std::vector<PauliString> operator_basis(int n);

/// Coefficients of rho = 2^-n * sum_s coeff(s) * s. The identity coefficient
/// is pinned to 1.
class BlochExpansion {
   public:
    explicit BlochExpansion(int n);

    int spins() const noexcept {
        return n_;
    }
    std::size_t size() const noexcept {
        return coefficients_.size();
    }
    double coefficient(const PauliString &s) const;
    double coefficient(std::size_t index) const {
        return coefficients_[index];
    }
    /// Throws InvalidArgument for the identity or a length mismatch.
    void set(const PauliString &s, double value);
    const std::vector<double> &coefficients() const noexcept {
        return coefficients_;
    }

   private:
    int n_;
    std::vector<double> coefficients_;
};

BlochExpansion bloch_decompose(const ComplexMatrix &rho);
ComplexMatrix bloch_compose(const BlochExpansion &e);

int spins_for_dimension(Eigen::Index dim);

}  // namespace qmaxent

#endif
