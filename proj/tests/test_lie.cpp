#include <doctest.h>

#include "satake/json_io.hpp"
#include "satake/kernels.hpp"
#include "satake/lie.hpp"
#include "support.hpp"

using namespace satake;

namespace {

LinearLieAlgebra sl2() {
  Matrix e(2, 2), f(2, 2), h(2, 2);
  e(0, 1) = 1;
  f(1, 0) = 1;
  h(0, 0) = 1;
  h(1, 1) = -1;
  return linear_lie_algebra("sl2", {e, f, h}, {"e", "f", "h"});
}

}  // namespace

TEST_SUITE("lie") {
  TEST_CASE("sl2 from matrices") {
    const LinearLieAlgebra s = sl2();
    const LieAlgebra& l = s.algebra;
    CHECK(l.dim() == 3);
    CHECK(l.bracket(Vec{1, 0, 0}, Vec{0, 1, 0}) == Vec{0, 0, 1});
    CHECK(l.bracket(Vec{0, 0, 1}, Vec{1, 0, 0}) == Vec{2, 0, 0});
    CHECK(certify_jacobi(l).passed());
    // k(e, f) = 4, k(h, h) = 8
    CHECK(l.killing()(0, 1) == Scalar(4));
    CHECK(l.killing()(2, 2) == Scalar(8));
    CHECK(killing_signature(l) == SignatureReport{2, 1, 0});
    CHECK(center(l).empty());
    CHECK(centralizer(l, {Vec{0, 0, 1}}).size() == 1);
  }

  TEST_CASE("Jacobi failures are reported") {
    const LieAlgebra good = sl2().algebra;
    std::vector<SparseVec> table = good.table();
    // [e, f] = h + e breaks Jacobi for the triple (e, f, h)
    table[0 * 3 + 1] = {{0, Scalar(1)}, {2, Scalar(1)}};
    table[1 * 3 + 0] = {{0, Scalar(-1)}, {2, Scalar(-1)}};
    const LieAlgebra bad("bad", good.labels(), table);
    const JacobiReport r = certify_jacobi(bad);
    CHECK_FALSE(r.passed());
    REQUIRE(r.first);
    CHECK(*r.first == std::array<int, 3>{0, 1, 2});
    CHECK_FALSE(jacobi_report(bad).passed);
  }

  TEST_CASE("antisymmetry is enforced") {
    std::vector<SparseVec> t(4);
    t[1] = {{0, Scalar(1)}};
    CHECK_THROWS_AS(LieAlgebra("x", {"a", "b"}, t), LieError);
  }

  TEST_CASE("derivation algebras") {
    CHECK(derivations(hurwitz(HurwitzKind::H)).algebra.dim() == 3);
    const LinearLieAlgebra g2 = derivations(hurwitz(HurwitzKind::O));
    CHECK(g2.algebra.dim() == 14);
    CHECK(killing_signature(g2.algebra).signature() == -14);
    const LinearLieAlgebra g2s = derivations(hurwitz(HurwitzKind::Osplit));
    CHECK(killing_signature(g2s.algebra).signature() == 2);
    CHECK(certify_jacobi(g2.algebra).passed());
  }

  TEST_CASE("subalgebras") {
    const LieAlgebra& f4 = test_support::model("f4m52").lie;
    const Subalgebra s = subalgebra_closure(f4, {unit_vec(f4.dim(), 0)});
    CHECK(s.basis.size() == 1);
    const Subalgebra all = subalgebra_closure(f4, {unit_vec(f4.dim(), 0), unit_vec(f4.dim(), 40)});
    CHECK(certify_jacobi(all.algebra).passed());
    CHECK_THROWS_AS(restrict_to(f4, {unit_vec(f4.dim(), 30), unit_vec(f4.dim(), 40)}), LieError);
  }

  TEST_CASE("serial and parallel kernels agree") {
    for (const char* name : {"f4m20", "e6m14"}) {
      const LieAlgebra& l = test_support::model(name).lie;
      CHECK(kernels::killing_serial(l) == kernels::killing_parallel(l));
      const JacobiReport a = kernels::jacobi_serial(l);
      const JacobiReport b = kernels::jacobi_parallel(l);
      CHECK(a.checked == b.checked);
      CHECK(a.failures == b.failures);
      CHECK(a.passed());
    }
  }

  TEST_CASE("Killing invariance on all basis triples") {
    CHECK(check_killing_invariance(test_support::model("f4m20").lie).passed);
    CHECK(check_killing_invariance(sl2().algebra).passed);
  }

  TEST_CASE("Lie JSON round trip") {
    const LieAlgebra& l = test_support::model("f4p4").lie;
    const LieAlgebra back = lie_from_json(Json::parse(to_json(l).dump()));
    CHECK(back.name() == l.name());
    CHECK(back.labels() == l.labels());
    CHECK(back.table() == l.table());
  }
}
