#pragma once

#include "hypercox/arith.hpp"
#include "hypercox/diagram.hpp"
#include "hypercox/faces.hpp"
#include "hypercox/vinberg.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace hypercox::cli {

using nlohmann::json;

/// A polytope read from JSON: always a Gram matrix, plus the diagram when
/// the input was given as one.
struct PolytopeInput {
    GramMatrix gram;
    std::optional<CoxeterDiagram> diagram;
    std::optional<int> dim;
};

json read_json_file(const std::string& path);

/// {"dim", "gram"} or {"diagram"}, the Gram matrix winning when both are
/// present; an optional "scaled" matrix and "tower" radicand list make the
/// round trip exact. Throws PositiveEntry on an obtuse entry.
PolytopeInput polytope_from_json(const json& j);
/// Diagram part of the polytope schema. Divergent edges given as the bare
/// string "divergent" carry no weight and are only good for comparisons.
CoxeterDiagram diagram_from_json(const json& j);
json diagram_to_json(const CoxeterDiagram& d);

json gram_to_json(const GramMatrix& g);
json field_to_json(const SubfieldDescriptor& f);
json witness_to_json(const Witness& w);
json report_to_json(const ClassificationReport& r);
json face_to_json(const FaceDescriptor& f);
json tree_to_json(const FacetTree& t);

DiagonalLattice lattice_from_json(const json& j);
json lattice_to_json(const DiagonalLattice& l);
json vinberg_to_json(const VinbergResult& r, bool partial);

/// Edge labels: "m" for pi/m, "∞" for parallel, "d=<weight>" for divergent.
std::string diagram_to_dot(const CoxeterDiagram& d);
std::string tree_to_dot(const FacetTree& t);

}  // namespace hypercox::cli
