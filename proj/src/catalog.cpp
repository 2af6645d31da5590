#include "pointhom/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "pointhom/errors.hpp"

namespace pointhom {

const LabeledDistanceMatrix& CatalogInstance::distance_matrix() {
  if (!matrix) {
    if (!points) throw ParamError(name + ": instance has neither points nor a matrix");
    auto ldm = label_exact(squared_distances(*points));
    ldm.name = name;
    if (points->declared_dimension) ldm.dimension_hint = points->declared_dimension;
    matrix = std::move(ldm);
  }
  return *matrix;
}

namespace {

const Scalar kPhi(Rational(1, 2), Rational(1, 2), 5);        // (1+sqrt5)/2
const Scalar kPhiInv(Rational(-1, 2), Rational(1, 2), 5);    // phi - 1
const Scalar kPhiSq(Rational(3, 2), Rational(1, 2), 5);      // phi + 1
const Scalar kPhiInvSq(Rational(3, 2), Rational(-1, 2), 5);  // 2 - phi
const Scalar kSqrt5(Rational(0), Rational(1), 5);

int int_param(const Rational& r, const std::string& what, int lo) {
  if (boost::multiprecision::denominator(r) != 1)
    throw ParamError(what + " must be an integer");
  const BigInt num = boost::multiprecision::numerator(r);
  if (num < lo || num > 64) throw ParamError(what + " must be in [" + std::to_string(lo) + ", 64]");
  return static_cast<int>(num);
}

Rational positive_param(const Rational& r, const std::string& what) {
  if (r <= 0) throw ParamError(what + " must be positive");
  return r;
}

std::string rat_str(const Rational& r) { return rational_to_string(r); }

void require_params(const std::vector<Rational>& params, std::size_t n, const std::string& family) {
  if (params.size() != n)
    throw ParamError(family + " takes " + std::to_string(n) + " parameter(s), got " +
                     std::to_string(params.size()));
}

/// All permutations of `base`, optionally even ones only, with every sign
/// choice on nonzero entries; deduplicated.
std::vector<ScalarVec> signed_perms(const ScalarVec& base, bool even_only) {
  const int n = static_cast<int>(base.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::set<ScalarVec> out;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (idx[i] > idx[j]) ++inversions;
    if (even_only && inversions % 2 != 0) continue;
    ScalarVec p(n);
    for (int i = 0; i < n; ++i) p[i] = base[idx[i]];
    for (int mask = 0; mask < (1 << n); ++mask) {
      ScalarVec q = p;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) q[i] = -q[i];
      out.insert(std::move(q));
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return {out.begin(), out.end()};
}

PointSet make_pointset(std::string name, std::vector<ScalarVec> pts, unsigned radicand) {
  PointSet ps;
  ps.name = std::move(name);
  ps.radicand = radicand;
  ps.points = std::move(pts);
  ps.column_weights.assign(ps.ambient_dim(), Rational(1));
  ps.validate();
  return ps;
}

CatalogInstance from_points(PointSet ps, ExpectedFacts expected) {
  CatalogInstance inst;
  inst.name = ps.name;
  inst.min_class_is_edge = ps.min_class_is_edge;
  inst.expected = std::move(expected);
  inst.expected.vertex_count = ps.count();
  inst.points = std::move(ps);
  return inst;
}

CatalogInstance from_matrix(LabeledDistanceMatrix ldm, ExpectedFacts expected) {
  CatalogInstance inst;
  inst.name = ldm.name;
  inst.expected = std::move(expected);
  inst.expected.vertex_count = ldm.k;
  inst.matrix = std::move(ldm);
  return inst;
}

CatalogInstance make_simplex(int n) {
  std::vector<ScalarVec> pts(n + 1, ScalarVec(n + 1, Scalar(0)));
  for (int i = 0; i <= n; ++i) pts[i][i] = Scalar(1);
  ExpectedFacts f;
  f.degree = ExpectedDegree::inf();
  f.num_classes = 1;
  return from_points(make_pointset("simplex(" + std::to_string(n) + ")", std::move(pts), 0), f);
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

CatalogInstance make_cube(int n, const std::string& name) {
  if (n > 20) throw ParamError("cube: n too large");
  std::vector<ScalarVec> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    ScalarVec p(n);
    for (int j = 0; j < n; ++j) p[j] = (mask >> j) & 1 ? Scalar(-1) : Scalar(1);
    pts.push_back(std::move(p));
  }
  ExpectedFacts f;
  f.degree = n <= 3 ? ExpectedDegree::inf() : ExpectedDegree::fin(3);
  if (n <= 10) f.group_order = (1LL << n) * factorial(n);
  f.num_classes = n;
  if (n == 3) f.shell_sizes = {3, 3, 1};
  auto ps = make_pointset(name, std::move(pts), 0);
  ps.min_class_is_edge = true;
  return from_points(std::move(ps), f);
}

CatalogInstance make_orthoplex(int n, const std::string& name) {
  std::vector<ScalarVec> pts(2 * n, ScalarVec(n, Scalar(0)));
  for (int i = 0; i < n; ++i) {
    pts[2 * i][i] = Scalar(1);
    pts[2 * i + 1][i] = Scalar(-1);
  }
  ExpectedFacts f;
  f.degree = ExpectedDegree::inf();
  if (n <= 10) f.group_order = (1LL << n) * factorial(n);
  f.num_classes = n == 1 ? 1 : 2;
  if (n == 3) f.shell_sizes = {4, 1};
  auto ps = make_pointset(name, std::move(pts), 0);
  ps.min_class_is_edge = true;
  return from_points(std::move(ps), f);
}

CatalogInstance make_demihypercube(int n) {
  if (n > 20) throw ParamError("demihypercube: n too large");
  std::vector<ScalarVec> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    ScalarVec p(n);
    for (int j = 0; j < n; ++j) p[j] = (mask >> j) & 1 ? Scalar(-1) : Scalar(1);
    pts.push_back(std::move(p));
  }
  ExpectedFacts f;
  // n <= 3: segment / square-diagonal pair / regular tetrahedron. n = 4
  // coincides metrically with the 4-orthoplex, hence fully homogeneous; only
  // n >= 5 has degree 3.
  f.degree = n <= 4 ? ExpectedDegree::inf() : ExpectedDegree::fin(3);
  if (n == 4) f.group_order = 384;
  if (n == 5) f.group_order = 1920;
  return from_points(make_pointset("demihypercube(" + std::to_string(n) + ")", std::move(pts), 0),
                     f);
}

CatalogInstance make_truncated_simplex(int n) {
  std::vector<ScalarVec> pts;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      ScalarVec p(n + 1, Scalar(0));
      p[i] = p[j] = Scalar(1);
      pts.push_back(std::move(p));
    }
  ExpectedFacts f;
  f.degree = n <= 3 ? ExpectedDegree::inf() : ExpectedDegree::fin(2);
  if (n == 3)
    f.group_order = 48;  // metrically the octahedron
  else if (n >= 4 && n <= 12)
    f.group_order = factorial(n + 1);
  f.num_classes = n >= 3 ? 2 : (n == 2 ? 1 : 0);
  return from_points(
      make_pointset("truncated_simplex(" + std::to_string(n) + ")", std::move(pts), 0), f);
}

CatalogInstance make_doubled_simplex(int n) {
  std::vector<ScalarVec> pts;
  for (int sign : {+1, -1})
    for (int i = 0; i <= n; ++i) {
      ScalarVec p(n + 1, Scalar(-sign));
      p[i] = Scalar(sign * n);
      pts.push_back(std::move(p));
    }
  ExpectedFacts f;
  f.degree = ExpectedDegree::inf();
  return from_points(make_pointset("doubled_simplex(" + std::to_string(n) + ")", std::move(pts), 0),
                     f);
}

CatalogInstance make_tetrahedron() {
  std::vector<ScalarVec> pts = {{Scalar(1), Scalar(1), Scalar(1)},
                                {Scalar(1), Scalar(-1), Scalar(-1)},
                                {Scalar(-1), Scalar(1), Scalar(-1)},
                                {Scalar(-1), Scalar(-1), Scalar(1)}};
  ExpectedFacts f;
  f.degree = ExpectedDegree::inf();
  f.group_order = 24;
  f.num_classes = 1;
  f.shell_sizes = {3};
  auto ps = make_pointset("tetrahedron", std::move(pts), 0);
  ps.min_class_is_edge = true;
  return from_points(std::move(ps), f);
}

std::vector<ScalarVec> icosahedron_points() {
  std::vector<ScalarVec> pts;
  for (int rot = 0; rot < 3; ++rot)
    for (int s1 : {+1, -1})
      for (int s2 : {+1, -1}) {
        ScalarVec base = {Scalar(0), Scalar(s1), s2 > 0 ? kPhi : -kPhi};
        ScalarVec p(3);
        for (int c = 0; c < 3; ++c) p[(c + rot) % 3] = base[c];
        pts.push_back(std::move(p));
      }
  return pts;
}

CatalogInstance make_icosahedron() {
  ExpectedFacts f;
  f.degree = ExpectedDegree::inf();
  f.group_order = 120;
  f.num_classes = 3;
  f.shell_sizes = {5, 5, 1};
  auto ps = make_pointset("icosahedron", icosahedron_points(), 5);
  ps.min_class_is_edge = true;
  return from_points(std::move(ps), f);
}

CatalogInstance make_dodecahedron() {
  std::vector<ScalarVec> pts;
  for (int mask = 0; mask < 8; ++mask) {
    ScalarVec p(3);
    for (int j = 0; j < 3; ++j) p[j] = (mask >> j) & 1 ? Scalar(-1) : Scalar(1);
    pts.push_back(std::move(p));
  }
  for (int rot = 0; rot < 3; ++rot)
    for (int s1 : {+1, -1})
      for (int s2 : {+1, -1}) {
        ScalarVec base = {Scalar(0), s1 > 0 ? kPhiInv : -kPhiInv, s2 > 0 ? kPhi : -kPhi};
        ScalarVec p(3);
        for (int c = 0; c < 3; ++c) p[(c + rot) % 3] = base[c];
        pts.push_back(std::move(p));
      }
  ExpectedFacts f;
  f.degree = ExpectedDegree::fin(2);
  f.group_order = 120;
  f.num_classes = 5;
  f.shell_sizes = {3, 6, 6, 3, 1};
  auto ps = make_pointset("dodecahedron", std::move(pts), 5);
  ps.min_class_is_edge = true;
  return from_points(std::move(ps), f);
}

CatalogInstance make_cuboctahedron() {
  ExpectedFacts f;
  f.degree = ExpectedDegree::inf();
  f.group_order = 48;
  f.num_classes = 4;
  f.shell_sizes = {4, 2, 4, 1};
  auto ps = make_pointset("cuboctahedron",
                          signed_perms({Scalar(1), Scalar(1), Scalar(0)}, false), 0);
  ps.min_class_is_edge = true;
  return from_points(std::move(ps), f);
}

CatalogInstance make_icosidodecahedron() {
  const auto ico = icosahedron_points();
  const int k = static_cast<int>(ico.size());
  auto sqdist = [&](int i, int j) {
    Scalar s;
    for (int c = 0; c < 3; ++c) {
      const Scalar d = ico[i][c] - ico[j][c];
      s += d * d;
    }
    return s;
  };
  Scalar min_sq;
  bool have = false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const Scalar s = sqdist(i, j);
      if (!have || s < min_sq) { min_sq = s; have = true; }
    }
  const Scalar half(Rational(1, 2));
  std::vector<ScalarVec> pts;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (sqdist(i, j) == min_sq) {
        ScalarVec mid(3);
        for (int c = 0; c < 3; ++c) mid[c] = (ico[i][c] + ico[j][c]) * half;
        pts.push_back(std::move(mid));
      }
  ExpectedFacts f;
  f.degree = ExpectedDegree::fin(1);
  f.group_order = 120;
  auto ps = make_pointset("icosidodecahedron", std::move(pts), 5);
  ps.min_class_is_edge = true;
  return from_points(std::move(ps), f);
}

/// Gosset 27-vertex polytope in R^6. Stored coordinates are integers; the
/// literal coordinates carry factors sqrt(1/8) (columns 1-5) and sqrt(1/24)
/// (column 6) via column weights, so all squared distances are rational.
CatalogInstance make_goss6() {
  std::vector<ScalarVec> pts;
  auto push = [&](std::vector<int> c) {
    ScalarVec p(6);
    for (int i = 0; i < 6; ++i) p[i] = Scalar(c[i]);
    pts.push_back(std::move(p));
  };
  push({0, 0, 0, 0, 0, 4});
  for (int mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    std::vector<int> c(6, 1);
    for (int j = 0; j < 5; ++j)
      if ((mask >> j) & 1) c[j] = -1;
    push(c);
  }
  for (int i = 0; i < 5; ++i)
    for (int s : {+2, -2}) {
      std::vector<int> c(6, 0);
      c[i] = s;
      c[5] = -2;
      push(c);
    }
  PointSet ps;
  ps.name = "goss6";
  ps.radicand = 0;
  ps.points = std::move(pts);
  ps.column_weights = {Rational(1, 8), Rational(1, 8), Rational(1, 8),
                       Rational(1, 8), Rational(1, 8), Rational(1, 24)};
  ps.declared_dimension = 6;
  ps.validate();
  ExpectedFacts f;
  f.degree = ExpectedDegree::lower_bound(2);
  f.group_order_at_least = 51840;
  f.num_classes = 2;
  f.shell_sizes = {16, 10};
  return from_points(std::move(ps), f);
}

/// Gosset 56-vertex polytope in R^7; column weights sqrt(1/8) x5, sqrt(1/24),
/// sqrt(1/12).
CatalogInstance make_goss7() {
  std::vector<std::vector<int>> half;
  half.push_back({0, 0, 0, 0, 0, 0, 3});
  half.push_back({0, 0, 0, 0, 0, 4, 1});
  for (int mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    std::vector<int> c(7, 1);
    for (int j = 0; j < 5; ++j)
      if ((mask >> j) & 1) c[j] = -1;
    c[5] = 1;
    c[6] = 1;
    half.push_back(c);
  }
  for (int i = 0; i < 5; ++i)
    for (int s : {+2, -2}) {
      std::vector<int> c(7, 0);
      c[i] = s;
      c[5] = -2;
      c[6] = 1;
      half.push_back(c);
    }
  std::vector<ScalarVec> pts;
  for (const auto& c : half) {
    ScalarVec p(7);
    for (int i = 0; i < 7; ++i) p[i] = Scalar(c[i]);
    pts.push_back(std::move(p));
  }
  for (const auto& c : half) {
    ScalarVec p(7);
    for (int i = 0; i < 7; ++i) p[i] = Scalar(-c[i]);
    pts.push_back(std::move(p));
  }
  PointSet ps;
  ps.name = "goss7";
  ps.radicand = 0;
  ps.points = std::move(pts);
  ps.column_weights = {Rational(1, 8),  Rational(1, 8), Rational(1, 8), Rational(1, 8),
                       Rational(1, 8),  Rational(1, 24), Rational(1, 12)};
  ps.declared_dimension = 7;
  ps.validate();
  ExpectedFacts f;
  f.degree = ExpectedDegree::lower_bound(3);
  f.num_classes = 3;
  f.shell_sizes = {27, 27, 1};
  return from_points(std::move(ps), f);
}

CatalogInstance make_24cell() {
  ExpectedFacts f;
  auto pts = signed_perms({Scalar(1), Scalar(1), Scalar(0), Scalar(0)}, false);
  return from_points(make_pointset("24cell", std::move(pts), 0), f);
}

CatalogInstance make_600cell() {
  std::set<ScalarVec> out;
  const Scalar half(Rational(1, 2));
  for (int mask = 0; mask < 16; ++mask) {
    ScalarVec p(4);
    for (int j = 0; j < 4; ++j) p[j] = (mask >> j) & 1 ? -half : half;
    out.insert(std::move(p));
  }
  for (const auto& p : signed_perms({Scalar(1), Scalar(0), Scalar(0), Scalar(0)}, false))
    out.insert(p);
  for (const auto& p : signed_perms({kPhi * half, half, kPhiInv * half, Scalar(0)}, true))
    out.insert(p);
  ExpectedFacts f;
  auto inst = from_points(make_pointset("600cell", {out.begin(), out.end()}, 5), f);
  inst.expensive = true;
  return inst;
}

CatalogInstance make_120cell() {
  std::set<ScalarVec> out;
  auto add = [&](const ScalarVec& base, bool even_only) {
    for (const auto& p : signed_perms(base, even_only)) out.insert(p);
  };
  add({Scalar(0), Scalar(0), Scalar(2), Scalar(2)}, false);
  add({Scalar(1), Scalar(1), Scalar(1), kSqrt5}, false);
  add({kPhiInvSq, kPhi, kPhi, kPhi}, false);
  add({kPhiInv, kPhiInv, kPhiInv, kPhiSq}, false);
  add({Scalar(0), kPhiInvSq, Scalar(1), kPhiSq}, true);
  add({Scalar(0), kPhiInv, kPhi, kSqrt5}, true);
  add({kPhiInv, Scalar(1), kPhi, Scalar(2)}, true);
  ExpectedFacts f;
  auto inst = from_points(make_pointset("120cell", {out.begin(), out.end()}, 5), f);
  inst.expensive = true;
  return inst;
}

CatalogInstance make_rhombus(const Rational& a) {
  positive_param(a, "rhombus half-diagonal");
  std::vector<ScalarVec> pts = {{Scalar(-1), Scalar(0)},
                                {Scalar(1), Scalar(0)},
                                {Scalar(0), Scalar(a)},
                                {Scalar(0), Scalar(-a)}};
  ExpectedFacts f;
  if (a != 1) f.degree = ExpectedDegree::fin(0);
  return from_points(make_pointset("rhombus(" + rat_str(a) + ")", std::move(pts), 0), f);
}

CatalogInstance make_rectangle(const Rational& a, const Rational& b) {
  positive_param(a, "rectangle side a");
  positive_param(b, "rectangle side b");
  std::vector<ScalarVec> pts = {{Scalar(0), Scalar(0)},
                                {Scalar(a), Scalar(0)},
                                {Scalar(0), Scalar(b)},
                                {Scalar(a), Scalar(b)}};
  ExpectedFacts f;
  f.degree = ExpectedDegree::inf();
  return from_points(
      make_pointset("rectangle(" + rat_str(a) + "," + rat_str(b) + ")", std::move(pts), 0), f);
}

/// Tetrahedron whose opposite edges are equal, with edge lengths a < b < c
/// each appearing on two opposite edges. Vertices are (+-1,+-1,+-1) with an
/// even number of minus signs; column weights encode the edge lengths.
CatalogInstance make_simplex_3edge(const Rational& a, const Rational& b, const Rational& c) {
  if (!(0 < a && a < b && b < c))
    throw ParamError("simplex_3edge requires 0 < a < b < c");
  const Rational a2 = a * a, b2 = b * b, c2 = c * c;
  if (c2 >= a2 + b2) throw ParamError("simplex_3edge requires c^2 < a^2 + b^2");
  PointSet ps;
  ps.name = "simplex_3edge(" + rat_str(a) + "," + rat_str(b) + "," + rat_str(c) + ")";
  ps.radicand = 0;
  ps.points = {{Scalar(1), Scalar(1), Scalar(1)},
               {Scalar(1), Scalar(-1), Scalar(-1)},
               {Scalar(-1), Scalar(1), Scalar(-1)},
               {Scalar(-1), Scalar(-1), Scalar(1)}};
  ps.column_weights = {(b2 + c2 - a2) / 8, (a2 + c2 - b2) / 8, (a2 + b2 - c2) / 8};
  ps.validate();
  ExpectedFacts f;
  f.degree = ExpectedDegree::inf();
  f.num_classes = 3;
  return from_points(std::move(ps), f);
}

/// Squared chord lengths of the regular n-gon with unit side, by index
/// offset; exact for n in {3,4,5,6}, empty otherwise.
ScalarVec exact_base_chords(int n) {
  switch (n) {
    case 3: return {Scalar(0), Scalar(1)};
    case 4: return {Scalar(0), Scalar(1), Scalar(2)};
    case 5: return {Scalar(0), Scalar(1), Scalar(Rational(3, 2), Rational(1, 2), 5)};
    case 6: return {Scalar(0), Scalar(1), Scalar(3), Scalar(4)};
    default: return {};
  }
}

/// Squared horizontal chords between the two n-gons of an antiprism (offset
/// angle (2m+1)*pi/n), unit base side; exact for n in {3,4,5,6}.
ScalarVec exact_anti_chords(int n) {
  switch (n) {
    case 3: return {Scalar(Rational(1, 3)), Scalar(Rational(4, 3)), Scalar(Rational(1, 3))};
    case 4: {
      const Scalar lo(Rational(1), Rational(-1, 2), 2);  // (2-sqrt2)/2
      const Scalar hi(Rational(1), Rational(1, 2), 2);   // (2+sqrt2)/2
      return {lo, hi, hi, lo};
    }
    case 5: {
      const Scalar t0(Rational(1, 2), Rational(-1, 10), 5);  // (5-sqrt5)/10
      const Scalar t1(Rational(1), Rational(2, 5), 5);       // (5+2sqrt5)/5
      const Scalar t2(Rational(2), Rational(2, 5), 5);       // (10+2sqrt5)/5
      return {t0, t1, t2, t1, t0};
    }
    case 6: {
      const Scalar lo(Rational(2), Rational(-1), 3);
      const Scalar hi(Rational(2), Rational(1), 3);
      return {lo, Scalar(2), hi, hi, Scalar(2), lo};
    }
    default: return {};
  }
}

double float_base_chord(int n, int j) {
  const double s = std::sin(j * M_PI / n) / std::sin(M_PI / n);
  return s * s;
}

ExpectedFacts prismatic_expected(int n, const Rational& l2, bool base_diam_exceeded,
                                 bool is_prism) {
  ExpectedFacts f;
  if (base_diam_exceeded) {
    f.degree = ExpectedDegree::lower_bound(3);
  } else if (l2 == 1) {
    // Unit lateral and base edges: vertex-transitive but the lateral edge
    // class is not exchangeable with the base edge class, except when the
    // shape degenerates to a regular polyhedron.
    const bool regular = (is_prism && n == 4) || (!is_prism && n == 3);
    f.degree = regular ? ExpectedDegree::inf() : ExpectedDegree::fin(1);
  }
  return f;
}

CatalogInstance make_prism(int n, const Rational& l2) {
  if (n < 3) throw ParamError("prism base must have n >= 3");
  positive_param(l2, "prism lateral^2");
  const std::string name = "prism(" + std::to_string(n) + "," + rat_str(l2) + ")";
  const ScalarVec s = exact_base_chords(n);
  const int half = n / 2;
  auto offset = [&](int i, int j) { return std::min(std::abs(i - j), n - std::abs(i - j)); };
  if (!s.empty()) {
    const int k = 2 * n;
    ScalarMatrix m(k, ScalarVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        const int bi = i % n, bj = j % n;
        const Scalar base = s[offset(bi, bj)];
        m[i][j] = (i < n) == (j < n) ? base : base + Scalar(l2);
      }
    auto ldm = label_exact(m);
    ldm.name = name;
    ldm.dimension_hint = 3;
    const bool exceeds = Scalar(l2) > s[half];
    auto inst = from_matrix(std::move(ldm), prismatic_expected(n, l2, exceeds, true));
    inst.min_class_is_edge = (l2 == 1);
    return inst;
  }
  // General n: classes are fixed combinatorially; this needs the lateral edge
  // to dominate the base diameter so base and cross classes cannot interleave.
  const double l2f = rational_to_double(l2);
  const double diam = float_base_chord(n, half);
  if (l2f <= diam * (1 + 1e-9))
    throw ParamError("prism with n outside {3,4,5,6} requires lateral^2 > base diameter^2");
  LabeledDistanceMatrix ldm;
  ldm.name = name;
  ldm.k = 2 * n;
  ldm.labels.assign(ldm.k, std::vector<int>(ldm.k, 0));
  const int num_labels = half + (half + 1);
  ldm.float_values.assign(num_labels + 1, 0.0);
  ldm.class_counts.assign(num_labels + 1, 0);
  for (int j = 1; j <= half; ++j) ldm.float_values[j] = float_base_chord(n, j);
  for (int j = 0; j <= half; ++j) ldm.float_values[half + 1 + j] = l2f + float_base_chord(n, j);
  for (int i = 0; i < ldm.k; ++i)
    for (int j = i + 1; j < ldm.k; ++j) {
      const int off = offset(i % n, j % n);
      const int label = (i < n) == (j < n) ? off : half + 1 + off;
      ldm.labels[i][j] = ldm.labels[j][i] = label;
      ++ldm.class_counts[label];
    }
  ldm.dimension_hint = 3;
  auto inst = from_matrix(std::move(ldm), prismatic_expected(n, l2, true, true));
  return inst;
}

CatalogInstance make_antiprism(int n, const Rational& l2) {
  if (n < 3) throw ParamError("antiprism base must have n >= 3");
  positive_param(l2, "antiprism lateral^2");
  const std::string name = "antiprism(" + std::to_string(n) + "," + rat_str(l2) + ")";
  const ScalarVec s = exact_base_chords(n);
  const ScalarVec t = exact_anti_chords(n);
  const int half = n / 2;
  auto offset = [&](int i, int j) { return std::min(std::abs(i - j), n - std::abs(i - j)); };
  if (!s.empty()) {
    const Scalar h2 = Scalar(l2) - t[0];
    if (h2.sign() <= 0)
      throw ParamError("antiprism lateral^2 too small for n=" + std::to_string(n));
    const int k = 2 * n;
    ScalarMatrix m(k, ScalarVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        if ((i < n) == (j < n)) {
          m[i][j] = s[offset(i % n, j % n)];
        } else {
          const int bottom = i < n ? i : j;
          const int top = i < n ? j - n : i - n;
          m[i][j] = t[((top - bottom) % n + n) % n] + h2;
        }
      }
    auto ldm = label_exact(m);
    ldm.name = name;
    ldm.dimension_hint = 3;
    const bool exceeds = Scalar(l2) > s[half];
    auto inst = from_matrix(std::move(ldm), prismatic_expected(n, l2, exceeds, false));
    inst.min_class_is_edge = (l2 == 1);
    return inst;
  }
  const double l2f = rational_to_double(l2);
  const double diam = float_base_chord(n, half);
  if (l2f <= diam * (1 + 1e-9))
    throw ParamError("antiprism with n outside {3,4,5,6} requires lateral^2 > base diameter^2");
  auto anti_chord = [&](int m) {
    const double v = std::sin((2 * m + 1) * M_PI / (2 * n)) / std::sin(M_PI / n);
    return v * v;
  };
  LabeledDistanceMatrix ldm;
  ldm.name = name;
  ldm.k = 2 * n;
  ldm.labels.assign(ldm.k, std::vector<int>(ldm.k, 0));
  const int cross_classes = (n + 1) / 2;
  const int num_labels = half + cross_classes;
  ldm.float_values.assign(num_labels + 1, 0.0);
  ldm.class_counts.assign(num_labels + 1, 0);
  for (int j = 1; j <= half; ++j) ldm.float_values[j] = float_base_chord(n, j);
  for (int c = 0; c < cross_classes; ++c)
    ldm.float_values[half + 1 + c] = l2f + anti_chord(c) - anti_chord(0);
  for (int i = 0; i < ldm.k; ++i)
    for (int j = i + 1; j < ldm.k; ++j) {
      int label;
      if ((i < n) == (j < n)) {
        label = offset(i % n, j % n);
      } else {
        const int bottom = i < n ? i : j;
        const int top = i < n ? j - n : i - n;
        const int m = ((top - bottom) % n + n) % n;
        label = half + 1 + std::min(2 * m + 1, 2 * n - 2 * m - 1) / 2;
      }
      ldm.labels[i][j] = ldm.labels[j][i] = label;
      ++ldm.class_counts[label];
    }
  ldm.dimension_hint = 3;
  return from_matrix(std::move(ldm), prismatic_expected(n, l2, true, false));
}

CatalogInstance make_n_gon(int n) {
  if (n < 3) throw ParamError("n_gon requires n >= 3");
  LabeledDistanceMatrix ldm;
  ldm.name = "n_gon(" + std::to_string(n) + ")";
  ldm.k = n;
  ldm.labels.assign(n, std::vector<int>(n, 0));
  const int num_labels = n / 2;
  ldm.float_values.assign(num_labels + 1, 0.0);
  ldm.class_counts.assign(num_labels + 1, 0);
  for (int j = 1; j <= num_labels; ++j) ldm.float_values[j] = float_base_chord(n, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int label = std::min(j - i, n - (j - i));
      ldm.labels[i][j] = ldm.labels[j][i] = label;
      ++ldm.class_counts[label];
    }
  ldm.dimension_hint = 2;
  ExpectedFacts f;
  f.degree = ExpectedDegree::inf();
  f.group_order = 2LL * n;
  return from_matrix(std::move(ldm), f);
}

/// Abstract 6-point metric: three antipodal pairs (0,1), (2,3), (4,5) at the
/// diameter, the designated 6 pairs at the smaller distance d1 with
/// cos d1 = alpha, the remaining 6 at d2 = pi - d1. Entries are squared
/// chords on the unit sphere.
CatalogInstance make_octsev(const Rational& alpha) {
  if (!(alpha > 0 && alpha < 1)) throw ParamError("octsev requires 0 < alpha < 1");
  const Scalar v1 = Scalar(Rational(2) - 2 * alpha);
  const Scalar v2 = Scalar(Rational(2) + 2 * alpha);
  const Scalar v3 = Scalar(4);
  ScalarMatrix m(6, ScalarVec(6, v2));
  for (int i = 0; i < 6; ++i) m[i][i] = Scalar(0);
  auto set = [&](int i, int j, const Scalar& v) { m[i][j] = m[j][i] = v; };
  set(0, 1, v3);
  set(2, 3, v3);
  set(4, 5, v3);
  set(0, 2, v1);
  set(0, 4, v1);
  set(1, 3, v1);
  set(1, 5, v1);
  set(2, 4, v1);
  set(3, 5, v1);
  auto ldm = label_exact(m);
  ldm.name = "octsev(" + rat_str(alpha) + ")";
  ldm.dimension_hint = 3;
  ExpectedFacts f;
  f.degree = ExpectedDegree::inf();
  f.num_classes = 3;
  return from_matrix(std::move(ldm), f);
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const BigInt sn = boost::multiprecision::sqrt(num);
  const BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace

std::optional<PointSet> octsev_realization(const Rational& alpha) {
  if (!(alpha > 0 && alpha < 1)) throw ParamError("octsev requires 0 < alpha < 1");
  // beta^2 (1 - 2 alpha) + 2 beta - alpha = 0
  Rational beta;
  if (alpha == Rational(1, 2)) {
    beta = Rational(1, 4);
  } else {
    const Rational disc = 1 + alpha - 2 * alpha * alpha;
    const auto root = rational_sqrt(disc);
    if (!root) return std::nullopt;
    beta = (*root - 1) / (1 - 2 * alpha);
    if (beta <= 0) return std::nullopt;
  }
  const Rational w = Rational(1) / (1 + 2 * beta * beta);
  PointSet ps;
  ps.name = "octsev_realization(" + rat_str(alpha) + ")";
  ps.radicand = 0;
  const Scalar one(1), b(beta);
  ps.points = {{one, b, b}, {-one, -b, -b}, {b, one, b},
               {-b, -one, -b}, {b, b, one}, {-b, -b, -one}};
  ps.column_weights = {w, w, w};
  ps.declared_dimension = 3;
  ps.validate();
  return ps;
}

CatalogInstance generate(const std::string& family, const std::vector<Rational>& params) {
  if (family == "simplex") {
    require_params(params, 1, family);
    return make_simplex(int_param(params[0], "simplex n", 1));
  }
  if (family == "cube") {
    require_params(params, 1, family);
    const int n = int_param(params[0], "cube n", 1);
    return make_cube(n, "cube(" + std::to_string(n) + ")");
  }
  if (family == "cube3") {
    require_params(params, 0, family);
    return make_cube(3, "cube3");
  }
  if (family == "orthoplex") {
    require_params(params, 1, family);
    const int n = int_param(params[0], "orthoplex n", 1);
    return make_orthoplex(n, "orthoplex(" + std::to_string(n) + ")");
  }
  if (family == "octahedron") {
    require_params(params, 0, family);
    return make_orthoplex(3, "octahedron");
  }
  if (family == "demihypercube") {
    require_params(params, 1, family);
    return make_demihypercube(int_param(params[0], "demihypercube n", 2));
  }
  if (family == "truncated_simplex") {
    require_params(params, 1, family);
    return make_truncated_simplex(int_param(params[0], "truncated_simplex n", 2));
  }
  if (family == "doubled_simplex") {
    require_params(params, 1, family);
    return make_doubled_simplex(int_param(params[0], "doubled_simplex n", 1));
  }
  if (family == "tetrahedron") {
    require_params(params, 0, family);
    return make_tetrahedron();
  }
  if (family == "icosahedron") {
    require_params(params, 0, family);
    return make_icosahedron();
  }
  if (family == "dodecahedron") {
    require_params(params, 0, family);
    return make_dodecahedron();
  }
  if (family == "cuboctahedron") {
    require_params(params, 0, family);
    return make_cuboctahedron();
  }
  if (family == "icosidodecahedron") {
    require_params(params, 0, family);
    return make_icosidodecahedron();
  }
  if (family == "goss6") {
    require_params(params, 0, family);
    return make_goss6();
  }
  if (family == "goss7") {
    require_params(params, 0, family);
    return make_goss7();
  }
  if (family == "24cell") {
    require_params(params, 0, family);
    return make_24cell();
  }
  if (family == "600cell") {
    require_params(params, 0, family);
    return make_600cell();
  }
  if (family == "120cell") {
    require_params(params, 0, family);
    return make_120cell();
  }
  if (family == "rhombus") {
    require_params(params, 1, family);
    return make_rhombus(params[0]);
  }
  if (family == "rectangle") {
    require_params(params, 2, family);
    return make_rectangle(params[0], params[1]);
  }
  if (family == "simplex_3edge") {
    require_params(params, 3, family);
    return make_simplex_3edge(params[0], params[1], params[2]);
  }
  if (family == "prism") {
    require_params(params, 2, family);
    return make_prism(int_param(params[0], "prism n", 3), params[1]);
  }
  if (family == "antiprism") {
    require_params(params, 2, family);
    return make_antiprism(int_param(params[0], "antiprism n", 3), params[1]);
  }
  if (family == "n_gon") {
    require_params(params, 1, family);
    return make_n_gon(int_param(params[0], "n_gon n", 3));
  }
  if (family == "octsev") {
    require_params(params, 1, family);
    return make_octsev(params[0]);
  }
  throw ParamError("unknown catalog family: " + family);
}

CatalogInstance generate_spec(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos) return generate(text);
  if (text.back() != ')') throw ParamError("malformed instance spec: " + text);
  const std::string family = text.substr(0, open);
  const std::string inner = text.substr(open + 1, text.size() - open - 2);
  std::vector<Rational> params;
  std::size_t start = 0;
  while (start <= inner.size() && !inner.empty()) {
    const auto comma = inner.find(',', start);
    const std::string tok = inner.substr(start, comma == std::string::npos ? std::string::npos
                                                                           : comma - start);
    params.push_back(rational_from_string(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return generate(family, params);
}

std::vector<std::string> degree_table_instances() {
  return {
      "tetrahedron",
      "cube3",
      "octahedron",
      "icosahedron",
      "dodecahedron",
      "cuboctahedron",
      "icosidodecahedron",
      "cube(4)",
      "cube(5)",
      "demihypercube(4)",
      "demihypercube(5)",
      "truncated_simplex(3)",
      "truncated_simplex(4)",
      "truncated_simplex(5)",
      "orthoplex(3)",
      "orthoplex(4)",
      "doubled_simplex(2)",
      "doubled_simplex(3)",
      "simplex(3)",
      "n_gon(5)",
      "n_gon(7)",
      "octsev(1/3)",
      "simplex_3edge(3,4,24/5)",
      "rhombus(1/2)",
      "rectangle(1,2)",
      "prism(4,9)",
      "antiprism(4,9)",
  };
}

std::vector<FamilyInfo> catalog_list() {
  return {
      {"simplex", "n >= 1", "n+1", "regular simplex, one distance class"},
      {"cube", "n >= 1", "2^n", "vertices (+-1,...,+-1)"},
      {"cube3", "", "8", "alias for cube(3)"},
      {"orthoplex", "n >= 1", "2n", "cross-polytope +-e_i"},
      {"octahedron", "", "6", "alias for orthoplex(3)"},
      {"demihypercube", "n >= 2", "2^(n-1)", "cube vertices with an even number of -1s"},
      {"truncated_simplex", "n >= 2", "n(n+1)/2", "points with two coordinates 1 in R^(n+1)"},
      {"doubled_simplex", "n >= 1", "2(n+1)", "regular simplex united with its central reflection"},
      {"tetrahedron", "", "4", "regular tetrahedron"},
      {"icosahedron", "", "12", "cyclic permutations of (0,+-1,+-phi)"},
      {"dodecahedron", "", "20", "(+-1,+-1,+-1) plus cyclic (0,+-1/phi,+-phi)"},
      {"cuboctahedron", "", "12", "permutations of (+-1,+-1,0)"},
      {"icosidodecahedron", "", "30", "icosahedron edge midpoints"},
      {"goss6", "", "27", "27-vertex Gosset polytope in R^6"},
      {"goss7", "", "56", "56-vertex Gosset polytope in R^7"},
      {"24cell", "", "24", "permutations of (+-1,+-1,0,0)"},
      {"600cell", "", "120", "600-cell vertices (expensive)"},
      {"120cell", "", "600", "120-cell vertices (expensive)"},
      {"rhombus", "a > 0", "4", "vertices (+-1,0), (0,+-a)"},
      {"rectangle", "a > 0, b > 0", "4", "axis-aligned a x b rectangle"},
      {"simplex_3edge", "0 < a < b < c, c^2 < a^2+b^2", "4",
       "tetrahedron with equal opposite edges of lengths a, b, c"},
      {"prism", "n >= 3, l2 > 0", "2n",
       "right prism over a unit-sided n-gon, squared lateral edge l2; exact for n in {3,4,5,6}, "
       "otherwise requires l2 > base diameter^2"},
      {"antiprism", "n >= 3, l2 > horizontal chord^2", "2n",
       "right antiprism over a unit-sided n-gon, squared lateral edge l2; exact for n in "
       "{3,4,5,6}, otherwise requires l2 > base diameter^2"},
      {"n_gon", "n >= 3", "n", "regular n-gon, combinatorial distance classes"},
      {"octsev", "0 < alpha < 1", "6",
       "octahedron-like 6-point metric with three antipodal pairs, cos d1 = alpha"},
  };
}

}  // namespace pointhom
