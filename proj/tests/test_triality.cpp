#include <doctest.h>

#include "satake/lie.hpp"
#include "satake/triality.hpp"

using namespace satake;

TEST_SUITE("triality") {
  TEST_CASE("dimensions of tri(S)") {
    CHECK(triality_algebra(symmetric_composition("pO")).dim() == 28);
    CHECK(triality_algebra(symmetric_composition("pOs")).dim() == 28);
    CHECK(triality_algebra(symmetric_composition("Ok")).dim() == 28);
    CHECK(triality_algebra(symmetric_composition("pH")).dim() == 9);
    CHECK(triality_algebra(symmetric_composition("pRR")).dim() == 2);
    CHECK(triality_algebra(symmetric_composition("R")).dim() == 0);
  }

  TEST_CASE("tri(pC) is two-dimensional and abelian") {
    const TrialityAlgebra t = triality_algebra(symmetric_composition("pC"));
    CHECK(t.dim() == 2);
    CHECK(center(t.lie()).size() == 2);
  }

  TEST_CASE("tri(pO) is compact so(8)") {
    const TrialityAlgebra t = triality_algebra(symmetric_composition("pO"));
    CHECK(certify_jacobi(t.lie()).passed());
    CHECK(killing_signature(t.lie()).signature() == -28);
    CHECK(orthogonal_lie(t.s()).algebra.dim() == 28);
  }

  TEST_CASE("theta has order three and is an automorphism") {
    const TrialityAlgebra t = triality_algebra(symmetric_composition("pOs"));
    for (int k = 0; k < t.dim(); ++k) {
      const Vec x = unit_vec(t.dim(), k);
      CHECK(t.theta(x, 3) == x);
      CHECK(t.theta(t.theta(x)) == t.theta(x, 2));
    }
    CHECK(check_lie_homomorphism(t.lie(), t.lie(), t.theta_matrix()).passed);
  }

  TEST_CASE("t_{x,y} lies in tri(S) and components satisfy triality") {
    const AlgebraTable s = symmetric_composition("Ok");
    const TrialityAlgebra t = triality_algebra(s);
    for (int i = 0; i < s.dim; ++i) {
      for (int j = i + 1; j < s.dim; ++j) {
        const Triple d = t_components(s, s.basis(i), s.basis(j));
        CHECK(satisfies_triality(s, d));
        CHECK(t.components(t_element(t, s.basis(i), s.basis(j))) == d);
      }
    }
  }

  TEST_CASE("non-triples are rejected") {
    const AlgebraTable s = symmetric_composition("pO");
    const TrialityAlgebra t = triality_algebra(s);
    const Matrix sig = sigma(s, s.basis(0), s.basis(1));
    const Matrix zero(8, 8);
    CHECK_FALSE(satisfies_triality(s, {sig, zero, zero}));
    CHECK_THROWS_AS(t.solve({sig, zero, zero}), TrialityError);
  }
}
