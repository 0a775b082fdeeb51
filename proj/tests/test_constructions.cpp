#include <doctest.h>

#include "satake/constructions.hpp"
#include "satake/lie.hpp"
#include "support.hpp"

using namespace satake;

TEST_SUITE("constructions") {
  TEST_CASE("magic square dimensions") {
    CHECK(test_support::model("f4m52").lie.dim() == 52);
    CHECK(test_support::model("e6m14").lie.dim() == 78);
    const MagicSquareAlgebra g = magic_square(symmetric_composition("Oks"), symmetric_composition("pRR"),
                                              EpsilonTriple(1, 1, 1));
    // tri(Oks) + tri(pRR) + 3 * 8 * 2
    CHECK(g.tri_dim() == 28);
    CHECK(g.tri_prime_dim() == 2);
    CHECK(g.lie.dim() == 78);
    CHECK(certify_jacobi(g.lie).passed());
    CHECK(killing_signature(g.lie).signature() == 6);
    CHECK_THROWS(magic_square(symmetric_composition("pC"), symmetric_composition("pH"), EpsilonTriple(1, 1, 1)));
  }

  TEST_CASE("argument order is normalized") {
    const MagicSquareAlgebra g = magic_square(symmetric_composition("pC"), symmetric_composition("pO"),
                                              EpsilonTriple(1, 1, 1));
    CHECK(g.swapped);
    CHECK(g.s().name == "pO");
    CHECK(g.lie.dim() == 78);
  }

  TEST_CASE("basis tags follow the block layout") {
    const MagicSquareAlgebra& g = *test_support::model("e6p2").magic;
    CHECK(g.tags.size() == 78);
    const int k = g.iota_index(2, 5, 1);
    CHECK(g.tags[k].kind == Component::Iota);
    CHECK(g.tags[k].block == 2);
    CHECK(g.tags[k].x == 5);
    CHECK(g.tags[k].xp == 1);
    CHECK(g.tags[0].kind == Component::Tri);
    CHECK(g.tags[g.tri_dim()].kind == Component::TriPrime);
  }

  TEST_CASE("Jacobi holds for the f4 models") {
    for (const char* n : {"f4m52", "f4m20", "f4p4"}) CHECK(certify_jacobi(test_support::model(n).lie).passed());
  }

  TEST_CASE("rho is a bijective homomorphism onto Der(A)") {
    for (EpsilonTriple eps : {EpsilonTriple(1, 1, 1), EpsilonTriple(1, -1, 1)}) {
      const MagicSquareAlgebra g = magic_square(symmetric_composition("pO"), symmetric_composition("R"), eps);
      const RhoMap rho = rho_map(g);
      CHECK(rho.der.algebra.dim() == 52);
      CHECK(rho.images.size() == 52);
      CHECK(check_rho(g, rho).passed);
    }
  }

  TEST_CASE("Tits model") {
    const Model& m = test_support::model("e6m26");
    REQUIRE(m.tits);
    CHECK(m.tits->der_dim() == 52);
    CHECK(m.tits->a0_basis.size() == 26);
    CHECK(m.lie.dim() == 78);
    CHECK(certify_jacobi(m.lie).passed());
  }

  TEST_CASE("catalog and errors") {
    CHECK(model_catalog().size() == 8);
    CHECK(model_info("e6p6").signature == 6);
    CHECK_THROWS_AS(model_info("e7"), ModelError);
    CHECK_THROWS_AS(preset_cartan(test_support::model("f4m52")), ModelError);
    CHECK(has_cartan_preset("e6p2"));
    CHECK_FALSE(has_cartan_preset("e6p6"));
  }
}
