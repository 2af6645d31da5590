#include "pointhom/geometry.hpp"

#include "json.hpp"

#include "pointhom/errors.hpp"

namespace pointhom {

void PointSet::validate() const {
  if (points.empty()) throw ParamError(name + ": point set must be non-empty");
  const std::size_t n = points[0].size();
  if (n == 0) throw ParamError(name + ": ambient dimension must be >= 1");
  if (column_weights.size() != n)
    throw ParamError(name + ": column_weights size must equal ambient dimension");
  for (const auto& w : column_weights)
    if (w <= 0) throw ParamError(name + ": column weights must be positive");
  for (const auto& row : points) {
    if (row.size() != n) throw ParamError(name + ": ragged point matrix");
    for (const auto& x : row)
      if (!x.is_rational() && x.radicand() != radicand)
        throw ParamError(name + ": coordinate radicand differs from the declared one");
  }
}

Scalar PointSet::squared_distance(int i, int j) const {
  Scalar acc;
  for (std::size_t c = 0; c < points[i].size(); ++c) {
    Scalar diff = points[i][c] - points[j][c];
    acc += Scalar(column_weights[c]) * diff * diff;
  }
  return acc;
}

ScalarMatrix squared_distances(const PointSet& ps) {
  const int k = ps.count();
  ScalarMatrix m(k, ScalarVec(k));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      m[i][j] = ps.squared_distance(i, j);
      m[j][i] = m[i][j];
    }
  }
  return m;
}

namespace {

ScalarVec barycenter(const PointSet& ps) {
  const int k = ps.count();
  const int n = ps.ambient_dim();
  ScalarVec c(n);
  for (const auto& row : ps.points)
    for (int j = 0; j < n; ++j) c[j] += row[j];
  const Scalar inv_k = Scalar(Rational(1, k));
  for (auto& x : c) x *= inv_k;
  return c;
}

Scalar weighted_sq_norm(const PointSet& ps, const ScalarVec& v) {
  Scalar acc;
  for (std::size_t c = 0; c < v.size(); ++c)
    acc += Scalar(ps.column_weights[c]) * v[c] * v[c];
  return acc;
}

}  // namespace

Circumsphere circumsphere_check(const PointSet& ps) {
  ps.validate();
  Circumsphere out;
  out.center = barycenter(ps);
  const int n = ps.ambient_dim();
  out.equidistant = true;
  for (int i = 0; i < ps.count(); ++i) {
    ScalarVec diff(n);
    for (int j = 0; j < n; ++j) diff[j] = ps.points[i][j] - out.center[j];
    Scalar r2 = weighted_sq_norm(ps, diff);
    if (i == 0) {
      out.radius2 = r2;
    } else if (r2 != out.radius2) {
      out.equidistant = false;
    }
  }
  return out;
}

int affine_rank(const PointSet& ps) {
  ps.validate();
  const int k = ps.count();
  const int n = ps.ambient_dim();
  // Rows x_i - x_0; positive weights do not change the rank.
  ScalarMatrix rows;
  rows.reserve(k - 1);
  for (int i = 1; i < k; ++i) {
    ScalarVec r(n);
    for (int j = 0; j < n; ++j) r[j] = ps.points[i][j] - ps.points[0][j];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col].sign() != 0) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const Scalar inv = rows[rank][col].inverse();
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col].sign() == 0) continue;
      const Scalar factor = rows[r][col] * inv;
      for (int c = col; c < n; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<int>> central_symmetry(const PointSet& ps) {
  ps.validate();
  const int k = ps.count();
  const int n = ps.ambient_dim();
  const ScalarVec c = barycenter(ps);
  std::vector<int> pairing(k, -1);
  for (int i = 0; i < k; ++i) {
    ScalarVec target(n);
    for (int j = 0; j < n; ++j) target[j] = c[j] + c[j] - ps.points[i][j];
    int match = -1;
    for (int t = 0; t < k; ++t) {
      if (ps.points[t] == target) { match = t; break; }
    }
    if (match < 0 || match == i) return std::nullopt;  // a fixed point would sit at the center
    pairing[i] = match;
  }
  for (int i = 0; i < k; ++i)
    if (pairing[pairing[i]] != i) return std::nullopt;
  return pairing;
}

std::string pointset_to_json(const PointSet& ps) {
  nlohmann::json j;
  j["name"] = ps.name;
  j["radicand"] = ps.radicand;
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& w : ps.column_weights) weights.push_back(rational_to_string(w));
  j["column_weights"] = weights;
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& row : ps.points) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(x.str());
    pts.push_back(r);
  }
  j["points"] = pts;
  if (ps.declared_dimension) j["declared_dimension"] = *ps.declared_dimension;
  return j.dump(2);
}

PointSet pointset_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad instance JSON: ") + e.what());
  }
  PointSet ps;
  try {
    ps.name = j.value("name", std::string("unnamed"));
    ps.radicand = j.value("radicand", 0u);
    for (const auto& w : j.at("column_weights"))
      ps.column_weights.push_back(rational_from_string(w.get<std::string>()));
    for (const auto& row : j.at("points")) {
      ScalarVec r;
      for (const auto& x : row) r.push_back(Scalar::parse(x.get<std::string>()));
      ps.points.push_back(std::move(r));
    }
    if (j.contains("declared_dimension"))
      ps.declared_dimension = j["declared_dimension"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad instance JSON: ") + e.what());
  }
  ps.validate();
  return ps;
}

}  // namespace pointhom
