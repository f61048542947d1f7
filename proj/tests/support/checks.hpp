#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hypercox::testing {

/// Outcome of a property sweep: how many cases ran and which failed.
struct SuiteResult {
    std::size_t cases = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty() && cases > 0; }
    void fail(std::string what) { violations.push_back(std::move(what)); }
    void merge(const SuiteResult& o);
    std::string summary() const;
};

/// Randomized kernel laws: field axioms, square root round trips, embedding
/// counts and minimal polynomial annihilation.
SuiteResult kernel_properties(std::size_t cases, std::uint64_t seed);

/// For every quasi-arithmetic fixture, every Coxeter face in its facet tree
/// is quasi-arithmetic with the same ground field.
SuiteResult face_inheritance_suite();

/// For every arithmetic fixture, every facet of an arithmetic tree node whose
/// neighbours all meet it at even angles pi/(2m) is arithmetic with the
/// node's ground field.
SuiteResult even_angle_suite();

/// Face Gram matrices of lattice fixtures against the Gram matrix of the
/// root vectors projected onto the orthogonal complement of the face.
SuiteResult projection_oracle(std::size_t max_subset);

/// Exact definiteness and inertia of random principal submatrices against
/// 100-digit Jacobi eigenvalues.
SuiteResult eigenvalue_oracle(std::size_t samples, std::uint64_t seed);

/// Facet steps G -> G': det G'_S and det G_{0 + S} have the same sign
/// pattern under every real embedding, for |S| <= max_subset.
SuiteResult minor_sign_suite(std::size_t max_subset, int max_level);

}  // namespace hypercox::testing
