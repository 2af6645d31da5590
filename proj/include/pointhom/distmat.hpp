#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pointhom/geometry.hpp"
#include "pointhom/scalar.hpp"

namespace pointhom {

/// The canonical combinatorial object: a k x k matrix of distance-class
/// labels. Label 0 is the diagonal; labels 1..L index the distinct nonzero
/// squared distances in strictly ascending order.
struct LabeledDistanceMatrix {
  std::string name;
  int k = 0;
  std::vector<std::vector<int>> labels;
  std::vector<Scalar> exact_values;   // per label 1..L (index 0 unused); empty on the float path
  std::vector<double> float_values;   // per label 1..L (index 0 unused); always populated
  std::vector<long long> class_counts;  // unordered pairs per label 1..L (index 0 unused)
  std::optional<int> dimension_hint;
  double separation_certificate = 0.0;  // float path only: inter-gap / intra-spread

  int num_labels() const { return static_cast<int>(class_counts.size()) - 1; }
  bool has_exact_values() const { return !exact_values.empty(); }
  bool is_valid_automorphism(const std::vector<int>& perm) const;
};

LabeledDistanceMatrix label_exact(const ScalarMatrix& m);

/// Single-linkage clustering of the off-diagonal values with merge threshold
/// tol (relative to the max value). Requires a separation certificate
/// (min inter-cluster gap) / (max intra-cluster spread) >= 100 and throws
/// AmbiguousClustering when it fails.
LabeledDistanceMatrix label_float(const std::vector<std::vector<double>>& m, double tol);

struct SpherePartition {
  int center = 0;
  std::vector<std::pair<int, std::vector<int>>> shells;  // (label, members), ascending label

  std::vector<int> shell_sizes() const;
};

SpherePartition sphere_partition(const LabeledDistanceMatrix& ldm, int v);

/// Embedding dimension from squared distances: rank of the double-centered
/// Gram matrix, computed exactly. Requires exact class values.
int rank_from_distances(const LabeledDistanceMatrix& ldm);

/// Distance-matrix files: CSV of floats, or JSON with scalar-text entries.
/// Entries are squared distances in both cases.
LabeledDistanceMatrix distance_matrix_from_csv(const std::string& text, double tol);
LabeledDistanceMatrix distance_matrix_from_json(const std::string& text);

}  // namespace pointhom
