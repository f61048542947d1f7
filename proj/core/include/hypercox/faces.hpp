#pragma once

#include "hypercox/arith.hpp"
#include "hypercox/gram.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hypercox {

/// A face of an acute-angled polytope: the intersection of the facets in
/// subset, with the Gram matrix of its own facets.
struct FaceDescriptor {
    std::vector<int> subset;     ///< facet indices of the original polytope
    int dim = 0;
    GramMatrix gram;
    std::vector<int> facet_map;  ///< face facet k comes from original facet facet_map[k]
    bool is_coxeter = false;
    long max_m = 60;
    std::optional<ClassificationReport> classification;
};

/// Dimension n of a polytope with Gram signature (n, 1, z).
int polytope_dimension(const GramMatrix& g);

/// {j not in s : s + {j} is elliptic}.
std::vector<int> bounding_set(const GramMatrix& g, const std::vector<int>& s);

/// True if the principal submatrix on s is positive definite.
bool is_elliptic(const GramMatrix& g, const std::vector<int>& s);

/// Gram matrix of the face cut out by s: the Schur complement of B_ss over
/// the bounding set, with normalized entries
/// (b_ij - ...) / sqrt(s_ii s_jj). Throws NotAFace if s is not elliptic.
GramMatrix face_gram(const GramMatrix& g, const std::vector<int>& s, std::vector<int>* bounding = nullptr);

/// Every entry is a right angle, pi/m with m <= max_m, parallel or divergent.
bool is_coxeter_gram(const GramMatrix& g, long max_m = 60);
bool is_coxeter_face(const FaceDescriptor& f, long max_m = 60);

struct FaceOptions {
    long max_m = 60;
    bool classify = true;
    std::size_t cycle_cap = kDefaultCycleCap;
    unsigned jobs = 1;
};

/// All faces of the given codimension, in lexicographic subset order.
std::vector<FaceDescriptor> enumerate_faces(const GramMatrix& g, int codim, const FaceOptions& opt = {});

/// Elliptic subsets of every size up to max_size, sorted by size then lexicographically.
std::vector<std::vector<int>> elliptic_subsets(const GramMatrix& g, int max_size);

struct VertexSets {
    std::vector<std::vector<int>> ordinary;
    std::vector<std::vector<int>> ideal;
};
/// Ordinary vertices: elliptic subsets of size n. Ideal vertices: parabolic
/// subsets of rank n - 1 (orthogonal unions of connected affine pieces).
VertexSets vertices_with_ideal(const GramMatrix& g);

/// Signature (n, 1, z), some vertex, and every elliptic subset of size n - 1
/// lies in exactly two vertices.
bool finite_volume_check(const GramMatrix& g);
/// Finite volume and no ideal vertex.
bool is_compact(const GramMatrix& g);

/// Rooted tree of isometry types of faces down to dimension 2.
struct FacetTree {
    struct Node {
        int id = 0;
        int parent = -1;
        int level = 0;  ///< codimension
        std::string key;
        FaceDescriptor face;
        std::vector<int> children;
    };
    /// A non-Coxeter face dropped because its type already occurs.
    struct Suppression {
        int parent = -1;
        std::vector<int> subset;
        std::string key;
        int kept = -1;  ///< node holding the same type
    };

    int dimension = 0;
    long max_m = 60;
    std::vector<Node> nodes;
    std::vector<Suppression> suppressed;

    const Node& root() const { return nodes.front(); }
    /// Node ids from the root down to id.
    std::vector<int> path_to(int id) const;
};

struct TreeOptions {
    long max_m = 60;
    bool classify = true;
    std::size_t cycle_cap = kDefaultCycleCap;
    std::size_t max_nodes = 500000;
    /// Nodes at this codimension are not expanded; negative means no limit.
    int max_level = -1;
    unsigned jobs = 1;
};

/// Breadth-first: children of a node are the isometry types of its facets,
/// Coxeter types kept under every parent, non-Coxeter types kept once in the
/// whole tree. Nodes of dimension 2 are leaves.
FacetTree facet_tree(const GramMatrix& g, const TreeOptions& opt = {});

}  // namespace hypercox
