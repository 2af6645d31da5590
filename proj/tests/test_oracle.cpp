#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pointhom/autgroup.hpp"
#include "pointhom/catalog.hpp"
#include "pointhom/errors.hpp"
#include "pointhom/homogeneity.hpp"
#include "pointhom/oracle.hpp"

using namespace pointhom;

TEST_CASE("brute automorphisms agree with the search on small instances") {
  for (const char* spec : {"tetrahedron", "octahedron", "n_gon(5)", "n_gon(6)", "rhombus(1/2)",
                           "rectangle(1,2)", "octsev(1/3)", "cube3", "simplex(3)",
                           "doubled_simplex(2)", "prism(3,1)", "antiprism(3,1)", "n_gon(12)",
                           "cuboctahedron"}) {
    auto inst = generate_spec(spec);
    auto ldm = inst.distance_matrix();
    auto auts = brute_automorphisms(ldm);
    auto g = automorphism_group(ldm);
    INFO(spec);
    CHECK(BigInt(auts.size()) == g.order());
    for (const auto& p : auts) CHECK(g.contains(p));
  }
}

TEST_CASE("brute m-point homogeneity agrees with the engine") {
  for (const char* spec : {"tetrahedron", "octahedron", "n_gon(5)", "n_gon(6)", "rhombus(1/2)",
                           "rectangle(1,2)", "octsev(1/3)", "cube3", "cuboctahedron",
                           "prism(5,1)", "antiprism(3,1)"}) {
    auto inst = generate_spec(spec);
    auto ldm = inst.distance_matrix();
    auto g = automorphism_group(ldm);
    HomogeneityEngine engine(ldm, g);
    for (int m = 1; m <= 4; ++m) {
      INFO(spec << " m=" << m);
      CHECK(engine.check(m).holds == brute_m_homog(ldm, m));
    }
  }
}

TEST_CASE("oracle caps") {
  auto big = generate_spec("dodecahedron").distance_matrix();  // k = 20 > 12
  CHECK_THROWS_AS(brute_automorphisms(big), CapExceeded);
  CHECK_THROWS_AS(brute_m_homog(big, 2), CapExceeded);
  auto small = generate_spec("tetrahedron").distance_matrix();
  CHECK_THROWS_AS(brute_m_homog(small, 5), CapExceeded);
}

TEST_CASE("brute results on known spaces") {
  auto ldm = generate_spec("octahedron").distance_matrix();
  CHECK(brute_automorphisms(ldm).size() == 48);
  CHECK(brute_m_homog(ldm, 2));
  CHECK(brute_m_homog(ldm, 3));

  auto rh = generate_spec("rhombus(1/2)").distance_matrix();
  CHECK_FALSE(brute_m_homog(rh, 1));
}
