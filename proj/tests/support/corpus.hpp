#pragma once

#include "hypercox/diagram.hpp"
#include "hypercox/faces.hpp"
#include "hypercox/vinberg.hpp"

#include <string>
#include <vector>

namespace hypercox::testing {

std::string fixture_path(const std::string& name);

/// Fixtures given directly as Gram matrices or diagrams.
const std::vector<std::string>& gram_fixtures();
/// Diagonal lattice fixtures, turned into polytopes by Vinberg's algorithm.
const std::vector<std::string>& lattice_fixtures();
/// Both lists.
std::vector<std::string> all_fixtures();

GramMatrix load_polytope(const std::string& name);
CoxeterDiagram load_diagram(const std::string& name);
DiagonalLattice load_lattice(const std::string& name);

/// Cached results; safe to call from several threads.
const VinbergResult& lattice_run(const std::string& name);
const GramMatrix& fixture_gram(const std::string& name);
const FacetTree& fixture_tree(const std::string& name);

}  // namespace hypercox::testing
