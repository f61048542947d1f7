#pragma once

#include "hypercox/gram.hpp"
#include "hypercox/trig.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypercox {

/// Coxeter diagram: vertices are facets; a missing edge means a right angle.
/// Edge labels follow the usual conventions: m >= 3 for the angle pi/m,
/// Parallel for a bold edge (entry -1), Divergent for a dashed edge carrying
/// the weight w > 1 (entry -w).
struct CoxeterDiagram {
    struct Edge {
        int u = 0;
        int v = 0;
        AngleLabel label;
    };

    std::vector<std::string> vertices;
    std::vector<Edge> edges;

    std::size_t size() const { return vertices.size(); }
    /// Label between u and v (RightAngle if there is no edge).
    AngleLabel label(int u, int v) const;
    /// Throws InvalidInput on self-loops, duplicate edges, bad labels.
    void validate() const;
};

/// -cos(pi/m), 0, -1 or -w per edge, 1 on the diagonal.
GramMatrix diagram_to_gram(const CoxeterDiagram& d);

/// Entrywise recognition; labels that fail become NonCoxeter edges.
CoxeterDiagram gram_to_diagram(const GramMatrix& g, long max_m = 60);

/// Label-preserving isomorphism, returned as a vertex map a -> b. Divergent
/// weights are compared exactly only when compare_weights is set.
std::optional<std::vector<int>> diagram_isomorphism(const CoxeterDiagram& a, const CoxeterDiagram& b,
                                                    bool compare_weights = false);

}  // namespace hypercox
