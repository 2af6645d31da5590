#include "pointhom/distmat.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pointhom/errors.hpp"

namespace pointhom {

bool LabeledDistanceMatrix::is_valid_automorphism(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != k) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (labels[perm[i]][perm[j]] != labels[i][j]) return false;
  return true;
}

LabeledDistanceMatrix label_exact(const ScalarMatrix& m) {
  const int k = static_cast<int>(m.size());
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(m[i].size()) != k) throw ParamError("distance matrix not square");
    if (m[i][i].sign() != 0) throw ParamError("nonzero diagonal in distance matrix");
    for (int j = 0; j < k; ++j) {
      if (m[i][j] != m[j][i]) throw ParamError("distance matrix not symmetric");
      if (m[i][j].sign() < 0) throw ParamError("negative entry in distance matrix");
    }
  }
  std::vector<Scalar> values;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) values.push_back(m[i][j]);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  LabeledDistanceMatrix out;
  out.k = k;
  out.labels.assign(k, std::vector<int>(k, 0));
  out.exact_values.resize(values.size() + 1);
  out.float_values.resize(values.size() + 1, 0.0);
  out.class_counts.assign(values.size() + 1, 0);
  for (std::size_t l = 0; l < values.size(); ++l) {
    out.exact_values[l + 1] = values[l];
    out.float_values[l + 1] = values[l].to_double();
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const int label =
          static_cast<int>(std::lower_bound(values.begin(), values.end(), m[i][j]) -
                           values.begin()) + 1;
      out.labels[i][j] = out.labels[j][i] = label;
      ++out.class_counts[label];
    }
  }
  out.separation_certificate = std::numeric_limits<double>::infinity();
  return out;
}

LabeledDistanceMatrix label_float(const std::vector<std::vector<double>>& m, double tol) {
  const int k = static_cast<int>(m.size());
  double max_val = 0.0;
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(m[i].size()) != k) throw ParamError("distance matrix not square");
    for (int j = 0; j < k; ++j) {
      if (std::abs(m[i][j] - m[j][i]) > tol * std::max(1.0, std::abs(m[i][j])))
        throw ParamError("distance matrix not symmetric within tol");
      max_val = std::max(max_val, std::abs(m[i][j]));
    }
  }
  if (max_val == 0.0) max_val = 1.0;

  std::vector<double> values;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) values.push_back(m[i][j] / max_val);
  std::sort(values.begin(), values.end());

  // Single-linkage on the sorted normalized values: a gap > tol starts a new cluster.
  struct Cluster { double lo, hi; };
  std::vector<Cluster> clusters;
  for (double v : values) {
    if (clusters.empty() || v - clusters.back().hi > tol)
      clusters.push_back({v, v});
    else
      clusters.back().hi = v;
  }

  double max_spread = 0.0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    max_spread = std::max(max_spread, clusters[c].hi - clusters[c].lo);
    if (c + 1 < clusters.size()) min_gap = std::min(min_gap, clusters[c + 1].lo - clusters[c].hi);
  }
  double certificate;
  if (max_spread == 0.0)
    certificate = std::numeric_limits<double>::infinity();
  else
    certificate = min_gap / max_spread;
  if (certificate < 100.0)
    throw AmbiguousClustering("separation certificate " + std::to_string(certificate) +
                              " < 100; supply exact input or a different tol");

  LabeledDistanceMatrix out;
  out.k = k;
  out.labels.assign(k, std::vector<int>(k, 0));
  out.separation_certificate = certificate;
  // Cluster 0 must be the zero (diagonal) class.
  const std::size_t first_nonzero = (clusters[0].hi <= tol) ? 1 : 0;
  const int num_labels = static_cast<int>(clusters.size() - first_nonzero);
  out.float_values.resize(num_labels + 1, 0.0);
  out.class_counts.assign(num_labels + 1, 0);
  auto label_of = [&](double v) {
    for (std::size_t c = first_nonzero; c < clusters.size(); ++c)
      if (v >= clusters[c].lo - tol && v <= clusters[c].hi + tol)
        return static_cast<int>(c - first_nonzero) + 1;
    throw ParamError("internal: value escaped all clusters");
  };
  for (std::size_t c = first_nonzero; c < clusters.size(); ++c)
    out.float_values[c - first_nonzero + 1] = 0.5 * (clusters[c].lo + clusters[c].hi) * max_val;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const double v = m[i][j] / max_val;
      if (v <= tol) throw ParamError("zero off-diagonal distance between distinct points");
      const int label = label_of(v);
      out.labels[i][j] = out.labels[j][i] = label;
      ++out.class_counts[label];
    }
  }
  return out;
}

SpherePartition sphere_partition(const LabeledDistanceMatrix& ldm, int v) {
  if (v < 0 || v >= ldm.k) throw ParamError("sphere center out of range");
  SpherePartition out;
  out.center = v;
  for (int label = 1; label <= ldm.num_labels(); ++label) {
    std::vector<int> members;
    for (int j = 0; j < ldm.k; ++j)
      if (j != v && ldm.labels[v][j] == label) members.push_back(j);
    if (!members.empty()) out.shells.emplace_back(label, std::move(members));
  }
  return out;
}

std::vector<int> SpherePartition::shell_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(shells.size());
  for (const auto& [label, members] : shells) sizes.push_back(static_cast<int>(members.size()));
  return sizes;
}

int rank_from_distances(const LabeledDistanceMatrix& ldm) {
  if (!ldm.has_exact_values())
    throw NeedsDimension(ldm.name + ": exact class values required to derive a dimension");
  const int k = ldm.k;
  // Double centering: B_ij = -1/2 (D_ij - row_i - col_j + total), D = squared distances.
  ScalarMatrix d(k, ScalarVec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) d[i][j] = ldm.exact_values[ldm.labels[i][j]];
  ScalarVec row_mean(k);
  Scalar total;
  const Scalar inv_k = Scalar(Rational(1, k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) row_mean[i] += d[i][j];
    row_mean[i] *= inv_k;
    total += row_mean[i];
  }
  total *= inv_k;
  ScalarMatrix b(k, ScalarVec(k));
  const Scalar minus_half = Scalar(Rational(-1, 2));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      b[i][j] = minus_half * (d[i][j] - row_mean[i] - row_mean[j] + total);
  // Exact Gaussian elimination.
  int rank = 0;
  for (int col = 0; col < k && rank < k; ++col) {
    int pivot = -1;
    for (int r = rank; r < k; ++r)
      if (b[r][col].sign() != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(b[rank], b[pivot]);
    const Scalar inv = b[rank][col].inverse();
    for (int r = rank + 1; r < k; ++r) {
      if (b[r][col].sign() == 0) continue;
      const Scalar factor = b[r][col] * inv;
      for (int c = col; c < k; ++c) b[r][c] -= factor * b[rank][c];
    }
    ++rank;
  }
  return rank;
}

LabeledDistanceMatrix distance_matrix_from_csv(const std::string& text, double tol) {
  std::vector<std::vector<double>> m;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    m.push_back(std::move(row));
  }
  if (m.empty()) throw ParseError("empty CSV distance matrix");
  return label_float(m, tol);
}

LabeledDistanceMatrix distance_matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad distance-matrix JSON: ") + e.what());
  }
  ScalarMatrix m;
  LabeledDistanceMatrix ldm;
  try {
    for (const auto& row : j.at("entries")) {
      ScalarVec r;
      for (const auto& x : row) r.push_back(Scalar::parse(x.get<std::string>()));
      m.push_back(std::move(r));
    }
    ldm = label_exact(m);
    ldm.name = j.value("name", std::string("unnamed"));
    if (j.contains("dimension_hint")) ldm.dimension_hint = j["dimension_hint"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad distance-matrix JSON: ") + e.what());
  }
  return ldm;
}

}  // namespace pointhom
