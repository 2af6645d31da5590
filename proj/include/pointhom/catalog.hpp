#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pointhom/distmat.hpp"
#include "pointhom/geometry.hpp"

namespace pointhom {

/// Golden values attached to catalog instances; everything optional so that
/// tests assert exactly what is known.
struct ExpectedDegree {
  enum Kind { none, finite, infinite, at_least } kind = none;
  int value = 0;

  static ExpectedDegree fin(int v) { return {finite, v}; }
  static ExpectedDegree inf() { return {infinite, 0}; }
  static ExpectedDegree lower_bound(int v) { return {at_least, v}; }
};

struct ExpectedFacts {
  ExpectedDegree degree;
  std::optional<long long> group_order;
  std::optional<long long> group_order_at_least;
  std::vector<int> shell_sizes;  // empty = unasserted
  std::optional<int> num_classes;
  std::optional<int> vertex_count;
};

/// A generated instance: exactly one of points / matrix is set. Instances
/// with points get their matrix from label_exact(squared_distances(...)).
struct CatalogInstance {
  std::string name;
  std::optional<PointSet> points;
  std::optional<LabeledDistanceMatrix> matrix;
  ExpectedFacts expected;
  bool min_class_is_edge = false;
  bool expensive = false;

  const LabeledDistanceMatrix& distance_matrix();  // lazily fills matrix from points
};

struct FamilyInfo {
  std::string family;
  std::string params;        // human-readable schema, e.g. "n >= 3, lateral^2 > 0"
  std::string vertex_count;  // formula
  std::string notes;
};

std::vector<FamilyInfo> catalog_list();

/// Instance specs making up the degree table (every entry carries asserted
/// expected facts).
std::vector<std::string> degree_table_instances();

/// Family names: simplex(n), cube(n), orthoplex(n), demihypercube(n),
/// truncated_simplex(n), doubled_simplex(n), tetrahedron, cube3, octahedron,
/// icosahedron, dodecahedron, cuboctahedron, icosidodecahedron, goss6, goss7,
/// 24cell, 600cell, 120cell, rhombus(a), rectangle(a,b),
/// simplex_3edge(a,b,c), prism(n,l2), antiprism(n,l2), n_gon(n),
/// octsev(alpha). Parameters are exact rationals.
CatalogInstance generate(const std::string& family, const std::vector<Rational>& params = {});

/// Parses "family" or "family(p1,p2,...)" and generates the instance.
CatalogInstance generate_spec(const std::string& text);

/// Geometric realization of octsev(alpha) on the unit sphere; available
/// exactly when the shape parameter beta solving beta(2+beta)/(1+2beta^2) =
/// alpha is rational.
std::optional<PointSet> octsev_realization(const Rational& alpha);

}  // namespace pointhom
