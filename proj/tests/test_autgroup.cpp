#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "pointhom/autgroup.hpp"
#include "pointhom/catalog.hpp"

using namespace pointhom;

namespace {

BigInt group_order(const char* spec) {
  auto inst = generate_spec(spec);
  return automorphism_group(inst.distance_matrix()).order();
}

}  // namespace

TEST_CASE("isometry group orders of the classical polytopes") {
  CHECK(group_order("tetrahedron") == 24);
  CHECK(group_order("cube3") == 48);
  CHECK(group_order("octahedron") == 48);
  CHECK(group_order("icosahedron") == 120);
  CHECK(group_order("dodecahedron") == 120);
  CHECK(group_order("cuboctahedron") == 48);
  CHECK(group_order("icosidodecahedron") == 120);
  CHECK(group_order("cube(4)") == 384);
  CHECK(group_order("orthoplex(4)") == 384);
  CHECK(group_order("cube(5)") == 3840);
  CHECK(group_order("demihypercube(5)") == 1920);
  CHECK(group_order("simplex(4)") == 120);
  CHECK(group_order("24cell") == 1152);
  CHECK(group_order("n_gon(7)") == 14);
  CHECK(group_order("truncated_simplex(4)") == 120);
}

TEST_CASE("metric group can exceed the polytope group") {
  // the 4-demihypercube is metrically a 4-orthoplex, so the full group of
  // order 384 appears, not the demihypercube symmetry group of order 192
  CHECK(group_order("demihypercube(4)") == 384);
}

TEST_CASE("generators are valid automorphisms") {
  for (const char* spec : {"dodecahedron", "goss6", "antiprism(5,1)"}) {
    auto inst = generate_spec(spec);
    auto ldm = inst.distance_matrix();
    auto g = automorphism_group(ldm);
    for (const auto& p : g.generators()) CHECK(ldm.is_valid_automorphism(p.images()));
  }
}

TEST_CASE("transitivity") {
  for (const char* spec : {"cube3", "icosahedron", "goss6", "n_gon(5)"})
    CHECK(is_transitive(automorphism_group(generate_spec(spec).distance_matrix())));
  // a generic rectangle is still transitive, a rhombus with unequal diagonals not
  CHECK(is_transitive(automorphism_group(generate_spec("rectangle(1,2)").distance_matrix())));
  CHECK_FALSE(is_transitive(automorphism_group(generate_spec("rhombus(1/2)").distance_matrix())));
}

TEST_CASE("automorphisms returns a generating set, not the whole group") {
  auto ldm = generate_spec("icosahedron").distance_matrix();
  auto gens = automorphisms(ldm);
  CHECK(!gens.empty());
  CHECK(gens.size() < 120);
  CHECK(PermGroup::from_generators(gens, ldm.k).order() == 120);
}

TEST_CASE("equitable coloring separates structurally distinct points") {
  // rhombus(1/2): points 0,1 = (+-1, 0) and 2,3 = (0, +-1/2); the two
  // diagonal pairs have different distance rows
  auto ldm = generate_spec("rhombus(1/2)").distance_matrix();
  auto colors = equitable_coloring(ldm);
  CHECK(colors[0] == colors[1]);
  CHECK(colors[2] == colors[3]);
  CHECK(colors[0] != colors[2]);

  // vertex-transitive instance: one color
  auto cube = generate_spec("cube3").distance_matrix();
  auto cc = equitable_coloring(cube);
  CHECK(std::set<int>(cc.begin(), cc.end()).size() == 1);
}

TEST_CASE("big instances: exact orders via BSGS") {
  auto goss6 = generate_spec("goss6");
  auto g6 = automorphism_group(goss6.distance_matrix());
  CHECK(g6.order() == 51840);

  auto goss7 = generate_spec("goss7");
  auto g7 = automorphism_group(goss7.distance_matrix());
  CHECK(g7.order() == 2903040);
}
