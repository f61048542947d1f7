#pragma once

#include "hypercox/gram.hpp"

#include <string>
#include <vector>

namespace hypercox {

/// Default bound on the matrix size accepted by canonical_key.
inline constexpr std::size_t kCanonicalKeyLimit = 16;

/// Identity of the real number g_ij independent of its tower: the sign of
/// the entry and the exact identity of its square.
std::string entry_identity(const GramMatrix& g, std::size_t i, std::size_t j);

struct CanonicalForm {
    std::string key;
    /// perm[k] = original index placed at position k.
    std::vector<int> perm;
};

/// Key equal for two matrices iff they agree up to simultaneous permutation
/// of rows and columns. Throws SizeLimit above limit.
CanonicalForm canonical_form(const GramMatrix& g, std::size_t limit = kCanonicalKeyLimit);
std::string canonical_key(const GramMatrix& g, std::size_t limit = kCanonicalKeyLimit);

}  // namespace hypercox
