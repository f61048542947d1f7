#pragma once

#include "hypercox/matrix.hpp"

#include <memory>
#include <vector>

namespace hypercox {

/// Gram matrix of unit normals, g_ij = b_ij / sqrt(b_ii b_jj), kept through a
/// scaled representative B with positive diagonal. Every sign predicate of
/// principal submatrices is congruence invariant, so it is evaluated on B,
/// which usually lives in a much smaller tower than the normalized entries.
class GramMatrix {
public:
    GramMatrix();
    /// A matrix with unit diagonal; it is its own scaled representative.
    explicit GramMatrix(const Matrix& g);
    /// Any symmetric matrix with positive diagonal.
    static GramMatrix from_scaled(const Matrix& b);

    std::size_t size() const noexcept { return b_.rows(); }
    const Matrix& scaled() const noexcept { return b_; }
    bool has_unit_diagonal() const;

    int entry_sign(std::size_t i, std::size_t j) const;
    /// g_ij^2 = b_ij^2 / (b_ii b_jj), in the tower of B.
    const AlgNum& entry_square(std::size_t i, std::size_t j) const;
    /// Normalized entry g_ij; may require new square roots.
    AlgNum entry(std::size_t i, std::size_t j) const;
    /// All normalized entries in one tower (computed once).
    const Matrix& normalized() const;

    GramMatrix principal(const std::vector<int>& idx) const;
    /// Simultaneous permutation: result(i, j) = this(perm[i], perm[j]).
    GramMatrix permuted(const std::vector<int>& perm) const;

private:
    struct Cache;
    explicit GramMatrix(Matrix b, bool validated);
    Matrix b_;
    std::vector<AlgNum> sq_;
    std::shared_ptr<Cache> cache_;
};

/// Schur complement B_TT - B_TS B_SS^-1 B_ST.
Matrix schur_complement(const Matrix& b, const std::vector<int>& s, const std::vector<int>& t);

}  // namespace hypercox
