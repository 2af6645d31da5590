#include "pointhom/homogeneity.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "pointhom/errors.hpp"

namespace pointhom {

namespace {

/// Partition of `pts` into orbits of the generators, each orbit sorted, the
/// list ordered by smallest element.
std::vector<std::vector<int>> orbit_partition(const std::vector<int>& pts,
                                              const std::vector<Perm>& gens, int degree) {
  std::vector<char> in_set(degree, 0), seen(degree, 0);
  for (int p : pts) in_set[p] = 1;
  std::vector<std::vector<int>> orbits;
  for (int p : pts) {
    if (seen[p]) continue;
    std::vector<int> orbit{p};
    seen[p] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& g : gens) {
        const int q = g(orbit[head]);
        if (!in_set[q])
          throw ParamError("internal: group does not preserve the extension class");
        if (!seen[q]) { seen[q] = 1; orbit.push_back(q); }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

HomogeneityEngine::HomogeneityEngine(LabeledDistanceMatrix ldm, PermGroup group,
                                     std::vector<int> domain)
    : ldm_(std::move(ldm)), group_(std::move(group)), domain_(std::move(domain)) {
  if (domain_.empty()) {
    domain_.resize(ldm_.k);
    std::iota(domain_.begin(), domain_.end(), 0);
  } else {
    std::sort(domain_.begin(), domain_.end());
  }
  levels_.push_back({Rep{{}, group_}});
}

bool HomogeneityEngine::check_level(int j) {
  std::vector<Rep> next;
  for (const Rep& rep : levels_[j]) {
    std::map<std::vector<int>, std::vector<int>> classes;
    for (int x : domain_) {
      if (std::find(rep.tuple.begin(), rep.tuple.end(), x) != rep.tuple.end()) continue;
      std::vector<int> profile(rep.tuple.size());
      for (std::size_t i = 0; i < rep.tuple.size(); ++i) profile[i] = ldm_.labels[x][rep.tuple[i]];
      classes[std::move(profile)].push_back(x);
    }
    for (const auto& [profile, members] : classes) {
      const auto orbits =
          orbit_partition(members, rep.stabilizer.generators(), group_.degree());
      if (orbits.size() > 1) {
        std::vector<int> a = rep.tuple, b = rep.tuple;
        a.push_back(orbits[0][0]);
        b.push_back(orbits[1][0]);
        failure_ = Verdict{j + 1, false, std::make_pair(std::move(a), std::move(b))};
        return false;
      }
      std::vector<int> extended = rep.tuple;
      extended.push_back(orbits[0][0]);
      PermGroup stab = group_.tuple_stabilizer(extended);
      next.push_back(Rep{std::move(extended), std::move(stab)});
    }
  }
  levels_.push_back(std::move(next));
  return true;
}

Verdict HomogeneityEngine::check(int m) {
  if (m < 1) throw ParamError("m-point homogeneity requires m >= 1");
  while (!failure_ && levels_passed_ < m) {
    if (check_level(levels_passed_)) ++levels_passed_;
  }
  if (failure_ && failure_->m <= m) return Verdict{m, false, failure_->witness};
  return Verdict{m, true, std::nullopt};
}

Verdict is_m_point_homogeneous(const LabeledDistanceMatrix& ldm, const PermGroup& g, int m) {
  HomogeneityEngine engine(ldm, g);
  return engine.check(m);
}

bool distinct_distance_shortcut(const LabeledDistanceMatrix& ldm, const PermGroup& g) {
  if (!g.is_transitive()) return false;
  std::vector<char> seen(ldm.num_labels() + 1, 0);
  for (int j = 1; j < ldm.k; ++j) {
    const int label = ldm.labels[0][j];
    if (seen[label]) return false;
    seen[label] = 1;
  }
  return true;
}

DegreeReport homogeneity_degree(const LabeledDistanceMatrix& ldm, const PermGroup& g,
                                std::optional<int> dimension) {
  const auto start = std::chrono::steady_clock::now();
  DegreeReport report;
  if (dimension) {
    report.dimension = *dimension;
  } else if (ldm.has_exact_values()) {
    report.dimension = rank_from_distances(ldm);
  } else if (ldm.dimension_hint) {
    report.dimension = *ldm.dimension_hint;
  } else {
    throw NeedsDimension(ldm.name + ": no dimension available for the degree cap");
  }
  auto finish = [&](DegreeReport& r) -> DegreeReport& {
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  HomogeneityEngine engine(ldm, g);
  const Verdict v1 = engine.check(1);
  report.verdicts.push_back(v1);
  report.cap = 1;
  if (!v1.holds) {
    report.infinite = false;
    report.degree = 0;
    report.termination = TerminationRule::failed_at_m;
    return finish(report);
  }
  if (distinct_distance_shortcut(ldm, g)) {
    report.infinite = true;
    report.termination = TerminationRule::distinct_distance_shortcut;
    return finish(report);
  }
  const int cap = std::min(report.dimension, ldm.k - 1);
  report.cap = std::max(cap, 1);
  for (int m = 2; m <= cap; ++m) {
    const Verdict v = engine.check(m);
    report.verdicts.push_back(v);
    if (!v.holds) {
      report.infinite = false;
      report.degree = m - 1;
      report.termination = TerminationRule::failed_at_m;
      return finish(report);
    }
  }
  report.infinite = true;
  report.termination = cap == report.dimension ? TerminationRule::reached_affine_rank
                                               : TerminationRule::reached_k;
  return finish(report);
}

bool two_point_sphere_criterion(const LabeledDistanceMatrix& ldm, const PermGroup& g) {
  if (!g.is_transitive()) throw NotHomogeneous(ldm.name + ": group is not transitive");
  if (ldm.k <= 1) return true;
  const PermGroup stab = g.tuple_stabilizer({0});
  const auto partition = sphere_partition(ldm, 0);
  for (const auto& [label, members] : partition.shells)
    if (orbit_partition(members, stab.generators(), g.degree()).size() > 1) return false;
  return true;
}

std::optional<bool> three_distance_accelerator(const LabeledDistanceMatrix& ldm,
                                               const PermGroup& g, int m,
                                               const PointSet* points) {
  if (m < 2) throw ParamError("three_distance_accelerator requires m >= 2");
  if (ldm.num_labels() != 3 || !g.is_transitive()) return std::nullopt;
  // The diameter class must be a perfect antipodal matching.
  std::vector<int> sigma(ldm.k, -1);
  for (int i = 0; i < ldm.k; ++i) {
    for (int j = 0; j < ldm.k; ++j) {
      if (i == j || ldm.labels[i][j] != 3) continue;
      if (sigma[i] != -1) return std::nullopt;
      sigma[i] = j;
    }
    if (sigma[i] == -1) return std::nullopt;
  }
  if (!ldm.is_valid_automorphism(sigma)) return std::nullopt;
  // Central symmetry: negation must swap the two short classes.
  for (int i = 0; i < ldm.k; ++i)
    for (int j = 0; j < ldm.k; ++j) {
      if (i == j || j == sigma[i]) continue;
      if (ldm.labels[i][sigma[j]] != 3 - ldm.labels[i][j]) return std::nullopt;
    }
  if (points) {
    const auto pairing = central_symmetry(*points);
    if (!pairing || *pairing != sigma) return std::nullopt;
  }
  const auto shell = sphere_partition(ldm, 0).shells;
  if (shell.empty() || shell[0].first != 1) return std::nullopt;
  HomogeneityEngine restricted(ldm, g.tuple_stabilizer({0}), shell[0].second);
  return restricted.check(m - 1).holds;
}

std::optional<std::array<int, 4>> reflection_falsifier_3d(const PointSet& ps,
                                                          const LabeledDistanceMatrix& ldm,
                                                          const PermGroup& g) {
  if (affine_rank(ps) != 3) throw ParamError(ps.name + ": reflection falsifier needs rank 3");
  if (!g.is_transitive()) throw ParamError(ps.name + ": reflection falsifier needs transitivity");
  const int k = ps.count();
  const int n = ps.ambient_dim();
  // Center at the barycenter.
  ScalarVec bary(n);
  for (const auto& p : ps.points)
    for (int c = 0; c < n; ++c) bary[c] += p[c];
  const Scalar inv_k = Scalar(Rational(1, k));
  for (int c = 0; c < n; ++c) bary[c] *= inv_k;
  std::vector<ScalarVec> q(k, ScalarVec(n));
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < n; ++c) q[i][c] = ps.points[i][c] - bary[c];

  std::vector<Scalar> w(n);
  for (int c = 0; c < n; ++c) w[c] = Scalar(ps.column_weights[c]);
  auto dot_w = [&](const ScalarVec& x, const ScalarVec& y) {
    Scalar s;
    for (int c = 0; c < n; ++c) s += w[c] * x[c] * y[c];
    return s;
  };
  if (n != 3)
    throw ParamError(ps.name + ": reflection falsifier needs 3 ambient coordinates");

  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      // Normal (in the weighted metric) to the plane through O, A, B.
      ScalarVec wa(3), wb(3);
      for (int c = 0; c < 3; ++c) { wa[c] = w[c] * q[a][c]; wb[c] = w[c] * q[b][c]; }
      ScalarVec normal = {wa[1] * wb[2] - wa[2] * wb[1], wa[2] * wb[0] - wa[0] * wb[2],
                          wa[0] * wb[1] - wa[1] * wb[0]};
      const Scalar nn = dot_w(normal, normal);
      if (nn.sign() == 0) continue;  // A, B, O collinear
      const Scalar inv_nn = nn.inverse();
      // Point map induced by the reflection across plane OAB, if any.
      std::vector<int> rho(k, -1);
      bool is_map = true;
      for (int i = 0; i < k && is_map; ++i) {
        const Scalar coeff = Scalar(2) * dot_w(q[i], normal) * inv_nn;
        ScalarVec image(3);
        for (int c = 0; c < 3; ++c) image[c] = q[i][c] - coeff * normal[c];
        is_map = false;
        for (int j = 0; j < k; ++j)
          if (q[j] == image) { rho[i] = j; is_map = true; break; }
      }
      for (int c = 0; c < k; ++c) {
        if (c == a || c == b) continue;
        for (int d = c + 1; d < k; ++d) {
          if (d == a || d == b) continue;
          if (ldm.labels[a][c] != ldm.labels[a][d] || ldm.labels[b][c] != ldm.labels[b][d])
            continue;
          if (!is_map || rho[c] != d) return std::array<int, 4>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace pointhom
