#include <doctest.h>

#include "satake/eii.hpp"
#include "satake/lie.hpp"
#include "support.hpp"

using namespace satake;

TEST_SUITE("eii") {
  TEST_CASE("Psi_i acts as prescribed") {
    const MagicSquareAlgebra& g = *test_support::model("e6p2").magic;
    const int n = g.lie.dim();
    for (int i = 0; i < 3; ++i) {
      const Matrix psi = psi_matrix(g, i);
      for (int k = 0; k < g.tri_dim() + g.tri_prime_dim(); ++k) {
        CHECK(psi.apply(unit_vec(n, k)) == unit_vec(n, k));
      }
      for (int x = 0; x < 8; ++x) {
        CHECK(psi.apply(unit_vec(n, g.iota_index(i, x, 0))) == Scalar(-1) * unit_vec(n, g.iota_index(i, x, 0)));
      }
      const Matrix sq = psi * psi;
      for (int j = 0; j < 3; ++j) {
        if (j == i) continue;
        // (x (x) e0) -> -(x (x) e1) -> -(x (x) e0)
        const Vec v = unit_vec(n, g.iota_index(j, 3, 0));
        CHECK(sq.apply(v) == Scalar(-1) * v);
      }
    }
    const Matrix psi1 = psi_matrix(g, 1);
    for (int x = 0; x < 8; ++x) {
      CHECK(psi1.apply(unit_vec(n, g.iota_index(0, x, 0))) == Scalar(-1) * unit_vec(n, g.iota_index(0, x, 1)));
      CHECK(psi1.apply(unit_vec(n, g.iota_index(0, x, 1))) == unit_vec(n, g.iota_index(0, x, 0)));
    }
  }

  TEST_CASE("Psi_i are automorphisms") {
    const MagicSquareAlgebra& g = *test_support::model("e6p2").magic;
    for (int i = 0; i < 3; ++i) CHECK_NOTHROW(psi_automorphism(g, i));
  }

  TEST_CASE("assembly of the compact form") {
    const PipelineResult& r = test_support::pipeline("e6p2");
    const EiiAssembly a = assemble_eii_cartan_decomposition(*r.model.magic, r.cartan);
    CHECK(a.g0.algebra.dim() == 52);
    CHECK(killing_signature(a.g0.algebra).signature() == 4);
    CHECK(a.roots0.size() == 48);
    CHECK(a.positive.size() == 24);
    int long_roots = 0;
    std::array<int, 3> per_block{};
    for (int b : a.block) {
      if (b < 0) {
        ++long_roots;
      } else {
        ++per_block[b];
      }
    }
    CHECK(long_roots == 12);
    CHECK(per_block == std::array<int, 3>{4, 4, 4});
    for (const Scalar& k : a.k0) {
      REQUIRE(k.is_real());
      CHECK(sign(k) > 0);
    }
    const LieAlgebra& l = r.model.lie;
    for (const Sl2Triple& t : a.sl2) {
      CHECK(l.bracket(t.e, t.f) == t.h);
      CHECK(l.bracket(t.h, t.e) == Scalar(2) * t.e);
    }
    CHECK(a.t.size() == 38);
    CHECK(a.p.size() == 40);
    const CartanDecompositionReport rep = verify_cartan_decomposition(l, a.t, a.p);
    CHECK(rep.passed());
    CHECK(rep.killing_t->n_minus == 38);
    CHECK(rep.killing_p->n_plus == 40);
  }
}
