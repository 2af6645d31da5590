#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "pointhom/autgroup.hpp"
#include "pointhom/catalog.hpp"
#include "pointhom/geometry.hpp"
#include "pointhom/homogeneity.hpp"

using namespace pointhom;

namespace {

std::mt19937 rng(20260823);

Rational random_rational() {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 20);
  return Rational(num(rng), den(rng));
}

Scalar random_scalar(unsigned d) {
  if (d == 0) return Scalar(random_rational());
  return Scalar(random_rational(), random_rational(), d);
}

std::vector<std::vector<double>> to_float(const ScalarMatrix& m) {
  std::vector<std::vector<double>> out(m.size(), std::vector<double>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m[i][j].to_double();
  return out;
}

const std::vector<std::string> kSmallCatalog = {
    "tetrahedron", "cube3", "octahedron", "icosahedron", "dodecahedron", "cuboctahedron",
    "icosidodecahedron", "cube(4)", "demihypercube(4)", "truncated_simplex(4)",
    "doubled_simplex(2)", "simplex(4)", "goss6"};

}  // namespace

TEST_CASE("scalar arithmetic tracks floating point on random values") {
  for (unsigned d : {0u, 2u, 3u, 5u}) {
    for (int trial = 0; trial < 200; ++trial) {
      Scalar x = random_scalar(d), y = random_scalar(d);
      const double fx = x.to_double(), fy = y.to_double();
      CHECK((x + y).to_double() == doctest::Approx(fx + fy).epsilon(1e-9));
      CHECK((x - y).to_double() == doctest::Approx(fx - fy).epsilon(1e-9));
      CHECK((x * y).to_double() == doctest::Approx(fx * fy).epsilon(1e-9));
      if (std::abs(fx - fy) > 1e-6)
        CHECK(((x < y) == (fx < fy)));
      if (!y.is_zero()) CHECK((x / y * y - x).is_zero());
      CHECK(Scalar::parse(x.str()) == x);
    }
  }
}

TEST_CASE("labels are equivariant under coordinate permutations") {
  auto inst = generate_spec("cube(4)");
  auto m = squared_distances(*inst.points);
  auto ldm = label_exact(m);
  const int k = ldm.k;
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    ScalarMatrix pm(k, ScalarVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) pm[i][j] = m[perm[i]][perm[j]];
    auto pldm = label_exact(pm);
    CHECK(pldm.exact_values == ldm.exact_values);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) CHECK(pldm.labels[i][j] == ldm.labels[perm[i]][perm[j]]);
  }
}

TEST_CASE("float labeling reproduces exact labels on every small catalog instance") {
  for (const auto& spec : kSmallCatalog) {
    auto inst = generate_spec(spec);
    if (!inst.points) continue;
    auto exact = label_exact(squared_distances(*inst.points));
    auto floated = label_float(to_float(squared_distances(*inst.points)), 1e-9);
    INFO(spec);
    CHECK(floated.labels == exact.labels);
  }
}

TEST_CASE("homogeneous instances sit on their circumsphere") {
  for (const auto& spec : kSmallCatalog) {
    auto inst = generate_spec(spec);
    if (!inst.points) continue;
    auto ldm = inst.distance_matrix();
    auto g = automorphism_group(ldm);
    if (!g.is_transitive()) continue;
    INFO(spec);
    CHECK(circumsphere_check(*inst.points).equidistant);
  }
}

TEST_CASE("shell sizes do not depend on the center in transitive spaces") {
  for (const auto& spec : kSmallCatalog) {
    auto inst = generate_spec(spec);
    auto ldm = inst.distance_matrix();
    auto g = automorphism_group(ldm);
    if (!g.is_transitive()) continue;
    auto sizes = sphere_partition(ldm, 0).shell_sizes();
    for (int v = 1; v < ldm.k; ++v) CHECK(sphere_partition(ldm, v).shell_sizes() == sizes);
  }
}

TEST_CASE("orbit-stabilizer identity on random tuples") {
  std::uniform_int_distribution<int> len(1, 3);
  for (const char* spec : {"cube3", "icosahedron", "truncated_simplex(4)", "goss6"}) {
    auto inst = generate_spec(spec);
    auto ldm = inst.distance_matrix();
    auto g = automorphism_group(ldm);
    std::uniform_int_distribution<int> pt(0, ldm.k - 1);
    for (int trial = 0; trial < 6; ++trial) {
      std::set<int> chosen;
      const int want = len(rng);
      while (static_cast<int>(chosen.size()) < want) chosen.insert(pt(rng));
      std::vector<int> tuple(chosen.begin(), chosen.end());
      std::shuffle(tuple.begin(), tuple.end(), rng);
      auto stab = g.tuple_stabilizer(tuple);
      INFO(spec);
      CHECK(stab.order() * g.orbit_of_tuple_size(tuple) == g.order());
      for (const auto& p : stab.generators())
        for (int t : tuple) CHECK(p(t) == t);
    }
  }
}

TEST_CASE("group membership closed under products and inverses") {
  auto g = automorphism_group(generate_spec("dodecahedron").distance_matrix());
  const auto& gens = g.generators();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  Perm w(g.degree());
  for (int step = 0; step < 30; ++step) {
    w = Perm::compose(w, gens[pick(rng)]);
    CHECK(g.contains(w));
    CHECK(g.contains(w.inverse()));
  }
}

TEST_CASE("verdict monotonicity across the catalog") {
  for (const auto& spec : kSmallCatalog) {
    auto inst = generate_spec(spec);
    auto ldm = inst.distance_matrix();
    auto g = automorphism_group(ldm);
    HomogeneityEngine engine(ldm, g);
    bool previous = true;
    for (int m = 1; m <= 4; ++m) {
      const bool holds = engine.check(m).holds;
      INFO(spec << " m=" << m);
      CHECK((previous || !holds));  // once false, stays false
      previous = holds;
    }
  }
}

TEST_CASE("witnesses produced anywhere are genuine") {
  for (const auto& spec : kSmallCatalog) {
    auto inst = generate_spec(spec);
    auto ldm = inst.distance_matrix();
    auto g = automorphism_group(ldm);
    HomogeneityEngine engine(ldm, g);
    for (int m = 1; m <= 4; ++m) {
      auto v = engine.check(m);
      if (v.holds || !v.witness) continue;
      const auto& [t1, t2] = *v.witness;
      INFO(spec << " m=" << m);
      REQUIRE(t1.size() == t2.size());
      for (std::size_t i = 0; i < t1.size(); ++i)
        for (std::size_t j = 0; j < t1.size(); ++j)
          CHECK(ldm.labels[t1[i]][t1[j]] == ldm.labels[t2[i]][t2[j]]);
      CHECK_FALSE(g.tuples_equivalent(t1, t2));
    }
  }
}

TEST_CASE("full-rank tuples pin down every remaining point") {
  // once a tuple affinely spans the space, each point is determined by its
  // distances to the tuple: extension classes become singletons, which is why
  // the affine rank caps the degree
  for (const char* spec : {"cube3", "icosahedron", "octahedron"}) {
    auto inst = generate_spec(spec);
    auto ldm = inst.distance_matrix();
    // greedily grow a tuple of affinely independent points
    std::vector<int> tuple{0};
    auto rank_of = [&](const std::vector<int>& t) {
      PointSet sub = *inst.points;
      sub.points.clear();
      for (int i : t) sub.points.push_back(inst.points->points[i]);
      return affine_rank(sub);
    };
    for (int v = 1; v < ldm.k && rank_of(tuple) < affine_rank(*inst.points); ++v) {
      auto probe = tuple;
      probe.push_back(v);
      if (rank_of(probe) > rank_of(tuple)) tuple = probe;
    }
    REQUIRE(rank_of(tuple) == affine_rank(*inst.points));
    // the tuple affinely spans the space, so distances to it determine each
    // point: label vectors must be pairwise distinct
    std::set<std::vector<int>> profiles;
    for (int p = 0; p < ldm.k; ++p) {
      std::vector<int> profile;
      for (int t : tuple) profile.push_back(ldm.labels[p][t]);
      CHECK(profiles.insert(profile).second);
    }
  }
}

TEST_CASE("degree infinity spot-check by exhausting all levels") {
  // for k <= 30, certify the infinite degree all the way to m = k - 1
  for (const char* spec : {"octahedron", "tetrahedron", "n_gon(5)", "octsev(1/3)"}) {
    auto inst = generate_spec(spec);
    auto ldm = inst.distance_matrix();
    auto g = automorphism_group(ldm);
    HomogeneityEngine engine(ldm, g);
    for (int m = 1; m < ldm.k; ++m) {
      INFO(spec << " m=" << m);
      CHECK(engine.check(m).holds);
    }
  }
}

TEST_CASE("central symmetry, when present, is an isometry") {
  for (const char* spec : {"cube3", "icosahedron", "dodecahedron", "cuboctahedron", "goss7",
                           "cube(4)", "orthoplex(4)"}) {
    auto inst = generate_spec(spec);
    auto sym = central_symmetry(*inst.points);
    if (!sym) continue;
    auto ldm = inst.distance_matrix();
    INFO(spec);
    CHECK(ldm.is_valid_automorphism(*sym));
  }
}

TEST_CASE("equitable colors refine orbits") {
  for (const auto& spec : kSmallCatalog) {
    auto inst = generate_spec(spec);
    auto ldm = inst.distance_matrix();
    auto g = automorphism_group(ldm);
    auto colors = equitable_coloring(ldm);
    for (int v = 0; v < ldm.k; ++v)
      for (int w : g.orbit(v)) CHECK(colors[w] == colors[v]);
  }
}
