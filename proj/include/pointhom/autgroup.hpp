#pragma once

#include <vector>

#include "pointhom/distmat.hpp"
#include "pointhom/permgroup.hpp"

namespace pointhom {

/// Generators of the full automorphism group of the labeled distance matrix
/// (= the isometry group of the finite metric space). Completeness is
/// certified by the search exhausting the backtrack tree at every level of
/// the stabilizer tower.
std::vector<Perm> automorphisms(const LabeledDistanceMatrix& ldm);

PermGroup automorphism_group(const LabeledDistanceMatrix& ldm);

bool is_transitive(const PermGroup& g);

/// Stable coloring from equitable refinement of the edge-colored complete
/// graph; points with different colors lie in different orbits. Exposed for
/// tests.
std::vector<int> equitable_coloring(const LabeledDistanceMatrix& ldm);

}  // namespace pointhom
