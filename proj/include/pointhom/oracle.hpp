#pragma once

#include <vector>

#include "pointhom/distmat.hpp"
#include "pointhom/permgroup.hpp"

namespace pointhom {

/// Exhaustive list of all label-preserving bijections, by depth-first
/// assignment with row-profile pruning. Test-only reference path; throws
/// CapExceeded for k > 12.
std::vector<Perm> brute_automorphisms(const LabeledDistanceMatrix& ldm);

/// Definition-verbatim m-point homogeneity: enumerates all m-tuples with
/// repetition, groups them by their label profile and requires each class to
/// be a single orbit of brute_automorphisms. Throws CapExceeded for k > 12 or
/// m > 4.
bool brute_m_homog(const LabeledDistanceMatrix& ldm, int m);

}  // namespace pointhom
