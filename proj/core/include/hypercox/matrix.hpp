#pragma once

#include "hypercox/algnum.hpp"

#include <cstddef>
#include <vector>

namespace hypercox {

/// Dense matrix of algebraic numbers. Entries keep their own towers;
/// arithmetic reconciles them on demand.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    explicit Matrix(std::vector<std::vector<AlgNum>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return c_; }
    bool is_square() const noexcept { return r_ == c_; }

    const AlgNum& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    AlgNum& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

    bool is_symmetric() const;
    /// All entries lifted into one tower.
    Matrix unified() const;
    /// Tower containing every entry (joins towers if needed).
    TowerPtr common_tower() const;

    Matrix principal(const std::vector<int>& idx) const;
    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    AlgNum trace() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<AlgNum> a_;
};

struct Signature {
    int pos = 0;
    int neg = 0;
    int zero = 0;
    bool operator==(const Signature&) const = default;
};

AlgNum determinant(const Matrix& m);
/// Inverse of a nonsingular square matrix; throws DivisionByZero otherwise.
Matrix inverse(const Matrix& m);
/// Coefficients c_0..c_n of det(x I - M), lowest degree first (c_n = 1).
std::vector<AlgNum> characteristic_polynomial(const Matrix& m);

/// Symmetric elimination without pivoting; true iff every pivot is positive.
bool is_positive_definite(const Matrix& m);
/// e_k = (-1)^k c_{n-k} >= 0 for every k.
bool is_positive_semidefinite(const Matrix& m);
/// Inertia of a real symmetric matrix, via Descartes' rule on the exact
/// characteristic polynomial (all of whose roots are real).
Signature signature(const Matrix& m);
/// PSD, not PD, and every connected component of the nonzero-entry graph
/// has a singular submatrix.
bool is_parabolic(const Matrix& m);
/// Connected components of the graph on indices with nonzero off-diagonal
/// entries.
std::vector<std::vector<int>> components(const Matrix& m);

/// Entrywise image under an embedding of a tower containing every entry.
Matrix apply_embedding(const Matrix& m, const Embedding& sigma);

}  // namespace hypercox
