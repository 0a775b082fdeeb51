#include <doctest.h>

#include "satake/algebra.hpp"
#include "satake/json_io.hpp"

using namespace satake;

TEST_SUITE("algebras") {
  TEST_CASE("the seven Hurwitz algebras") {
    const auto kinds = all_hurwitz_kinds();
    CHECK(kinds.size() == 7);
    for (HurwitzKind k : kinds) {
      const AlgebraTable a = hurwitz(k);
      CAPTURE(a.name);
      CHECK(check_composition(a).passed);
      CHECK(check_unit(a).passed);
      CHECK(check_quadratic_equation(a).passed);
    }
    CHECK(hurwitz(HurwitzKind::O).dim == 8);
    CHECK(norm_is_definite(hurwitz(HurwitzKind::O)));
    CHECK_FALSE(norm_is_definite(hurwitz(HurwitzKind::Osplit)));
    CHECK_FALSE(norm_is_definite(hurwitz(HurwitzKind::Mat2)));
  }

  TEST_CASE("Cayley-Dickson doubling of H gives a composition algebra") {
    const AlgebraTable o = cayley_dickson(hurwitz(HurwitzKind::H), Scalar(-1), "l");
    CHECK(o.dim == 8);
    CHECK(check_composition(o).passed);
    const AlgebraTable s = cayley_dickson(o, Scalar(-1), "m");
    CHECK_FALSE(check_composition(s).passed);
  }

  TEST_CASE("octonions are not associative but alternative") {
    const AlgebraTable o = hurwitz(HurwitzKind::O);
    bool associative = true;
    for (int i = 0; i < o.dim && associative; ++i) {
      for (int j = 0; j < o.dim && associative; ++j) {
        for (int k = 0; k < o.dim && associative; ++k) {
          const Vec x = o.basis(i), y = o.basis(j), z = o.basis(k);
          if (o.multiply(o.multiply(x, y), z) != o.multiply(x, o.multiply(y, z))) associative = false;
        }
      }
    }
    CHECK_FALSE(associative);
    for (int i = 0; i < o.dim; ++i) {
      for (int j = 0; j < o.dim; ++j) {
        const Vec x = o.basis(i), y = o.basis(j);
        CHECK(o.multiply(o.multiply(x, x), y) == o.multiply(x, o.multiply(x, y)));
      }
    }
  }

  TEST_CASE("para-Hurwitz algebras are symmetric composition algebras") {
    for (const char* n : {"R", "pRR", "pC", "pMat2", "pH", "pO", "pOs"}) {
      const AlgebraTable a = symmetric_composition(n);
      CAPTURE(n);
      CHECK(check_composition(a).passed);
      CHECK(check_symmetric(a).passed);
    }
  }

  TEST_CASE("the four eight-dimensional symmetric composition algebras") {
    for (const char* n : {"pO", "pOs", "Ok", "Oks"}) {
      const AlgebraTable a = symmetric_composition(n);
      CAPTURE(n);
      CHECK(a.dim == 8);
      CHECK(check_composition(a).passed);
      CHECK(check_symmetric(a).passed);
    }
    CHECK(norm_is_definite(okubo(false)));
    CHECK_FALSE(norm_is_definite(okubo(true)));
  }

  TEST_CASE("Okubo algebra has no unit and needs sqrt 3") {
    const AlgebraTable ok = okubo(false);
    CHECK(commutative_center(ok).empty());
    bool irrational = false;
    for (const auto& p : ok.products) {
      for (const auto& [k, c] : p) irrational = irrational || !c.is_rational();
    }
    CHECK(irrational);
  }

  TEST_CASE("unknown names are rejected") {
    CHECK_THROWS(symmetric_composition("pX"));
    CHECK_FALSE(hurwitz_kind("X"));
    CHECK_THROWS_AS(EpsilonTriple(1, 2, 1), AlgebraError);
    CHECK(EpsilonTriple::parse("1,-1,1") == EpsilonTriple(1, -1, 1));
    CHECK(EpsilonTriple(1, -1, 1)[4] == -1);
  }

  TEST_CASE("Albert algebras are 27-dimensional Jordan algebras") {
    struct Case {
      const char* s;
      EpsilonTriple eps;
    };
    for (const Case& c : {Case{"pO", EpsilonTriple(1, 1, 1)}, Case{"pO", EpsilonTriple(1, -1, 1)},
                          Case{"pOs", EpsilonTriple(1, 1, 1)}, Case{"Ok", EpsilonTriple(1, 1, 1)},
                          Case{"Oks", EpsilonTriple(1, -1, 1)}}) {
      const AlgebraTable a = albert(symmetric_composition(c.s), c.eps);
      CAPTURE(c.s);
      CAPTURE(c.eps.str());
      CHECK(a.dim == 27);
      CHECK(check_commutative(a).passed);
      CHECK(check_jordan_sampled(a, 100, 20240611).passed);
      CHECK(zero_trace_basis(a).size() == 26);
    }
  }

  TEST_CASE("sampled Jordan check catches a non-Jordan product") {
    AlgebraTable a = albert(symmetric_composition("pO"), EpsilonTriple(1, 1, 1));
    Vec broken = to_dense(a.product(3, 4), a.dim);
    broken[0] += Scalar(1);
    a.set_product(3, 4, broken);
    a.set_product(4, 3, broken);
    CHECK_FALSE(check_jordan_sampled(a, 100, 20240611).passed);
  }

  TEST_CASE("exhaustive Jordan linearization on the compact Albert algebra") {
    const AlgebraTable a = albert(symmetric_composition("pO"), EpsilonTriple(1, 1, 1));
    CHECK(check_jordan_exhaustive(a).passed);
  }

  TEST_CASE("hermitian matrix model") {
    const AlgebraTable h = h3_octonions();
    CHECK(h.dim == 27);
    CHECK(check_jordan_sampled(h, 50, 5).passed);
    CHECK(check_albert_matrix_iso().passed);
    const AlgebraTable a = albert(symmetric_composition("pO"), EpsilonTriple(1, 1, 1));
    CHECK(check_algebra_homomorphism(a, h, albert_to_h3(true)).passed);
  }

  TEST_CASE("the literal placement of x above the diagonal is not multiplicative") {
    const AlgebraTable a = albert(symmetric_composition("pO"), EpsilonTriple(1, 1, 1));
    CHECK_FALSE(check_algebra_homomorphism(a, h3_octonions(), albert_to_h3(false)).passed);
  }

  TEST_CASE("algebra JSON round trip") {
    for (const AlgebraTable& a : {hurwitz(HurwitzKind::Osplit), okubo(false),
                                  albert(symmetric_composition("pO"), EpsilonTriple(1, -1, 1))}) {
      const AlgebraTable b = algebra_from_json(Json::parse(to_json(a).dump()));
      CHECK(b.name == a.name);
      CHECK(b.labels == a.labels);
      CHECK(b.products == a.products);
      CHECK(b.form == a.form);
      CHECK(b.unit == a.unit);
      CHECK(b.involution == a.involution);
      CHECK(b.trace == a.trace);
    }
  }
}
