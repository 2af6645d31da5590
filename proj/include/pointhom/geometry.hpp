#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pointhom/scalar.hpp"

namespace pointhom {

using ScalarVec = std::vector<Scalar>;
using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// k exact points in R^n over one quadratic field Q(sqrt(d)), with optional
/// positive rational column weights: the literal coordinate in column c is
/// (stored value) * sqrt(w_c), so squared distances are
/// sum_c w_c (x_ic - x_jc)^2 and stay in the same field.
struct PointSet {
  std::string name;
  unsigned radicand = 0;
  std::vector<ScalarVec> points;        // k rows of n entries
  std::vector<Rational> column_weights; // n entries, all positive
  std::optional<int> declared_dimension;
  bool min_class_is_edge = false;  // construction asserts: minimal distance = edge length

  int count() const { return static_cast<int>(points.size()); }
  int ambient_dim() const { return points.empty() ? 0 : static_cast<int>(points[0].size()); }

  void validate() const;  // throws ParamError on an ill-formed instance
  Scalar squared_distance(int i, int j) const;
};

ScalarMatrix squared_distances(const PointSet& ps);

struct Circumsphere {
  ScalarVec center;  // exact barycenter
  Scalar radius2;    // meaningful when equidistant
  bool equidistant = false;
};

/// Barycenter as circumcenter candidate: equidistant iff all points have the
/// same squared distance to the barycenter.
Circumsphere circumsphere_check(const PointSet& ps);

/// Rank of {x_i - x_1} under exact Gaussian elimination over the field.
int affine_rank(const PointSet& ps);

/// The involution i -> j with x_j = 2*barycenter - x_i, when it exists on all
/// points; nullopt otherwise.
std::optional<std::vector<int>> central_symmetry(const PointSet& ps);

/// JSON instance file: { name, radicand, column_weights[], points[[...]],
/// declared_dimension? } with scalar-text entries; bit-exact round-trip.
std::string pointset_to_json(const PointSet& ps);
PointSet pointset_from_json(const std::string& json_text);

}  // namespace pointhom
