#include <doctest.h>

#include "satake/lie.hpp"
#include "satake/rootspace.hpp"
#include "support.hpp"

using namespace satake;
using test_support::pipeline;

namespace {

/// (x, y) on h* induced by the Killing form restricted to the Cartan span.
struct KillingDual {
  Matrix ginv;
  explicit KillingDual(const PipelineResult& r) {
    const int n = r.cartan.rank();
    Matrix g(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) g(i, j) = r.model.lie.killing(r.cartan.h[i], r.cartan.h[j]);
    }
    ginv = inverse(g);
  }
  Scalar operator()(const Vec& x, const Vec& y) const {
    Scalar s;
    const Vec gy = ginv.apply(y);
    for (size_t k = 0; k < x.size(); ++k) s += x[k] * gy[k];
    return s;
  }
};

}  // namespace

TEST_SUITE("rootspace") {
  TEST_CASE("lattice eigenspaces of small matrices") {
    Matrix m(3, 3);
    m(0, 0) = Scalar::rational(1, 2) * Scalar::imag();
    m(1, 1) = Scalar::sqrt3();
    m(2, 2) = Scalar::sqrt3();
    m(0, 2) = 0;
    const auto sp = lattice_eigenspaces(m);
    int total = 0;
    for (const auto& e : sp) {
      total += static_cast<int>(e.vectors.size());
      for (const auto& v : e.vectors) CHECK(m.apply(v) == e.value * v);
    }
    CHECK(total == 3);
    Matrix jordan(2, 2);
    jordan(0, 0) = jordan(1, 1) = 1;
    jordan(0, 1) = 1;
    int jt = 0;
    for (const auto& e : lattice_eigenspaces(jordan)) jt += static_cast<int>(e.vectors.size());
    CHECK(jt == 1);
  }

  TEST_CASE("root decompositions of the three models") {
    const int e6_roots = test_support::oracle_root_count(catalog_cartan('E', 6));
    for (const char* name : {"e6m26", "e6m14", "e6p2"}) {
      CAPTURE(name);
      const PipelineResult& r = pipeline(name);
      CHECK(r.datum.size() == e6_roots);
      CHECK(r.datum.zero_space.size() == 6);
      CHECK(r.axioms.passed);
      int dims = static_cast<int>(r.datum.zero_space.size());
      for (const auto& root : r.datum.roots) {
        CHECK(root.space.size() == 1);
        dims += static_cast<int>(root.space.size());
        for (int i = 0; i < r.cartan.rank(); ++i) {
          CHECK(r.model.lie.bracket(r.cartan.h[i], root.space[0]) == root.values[i] * root.space[0]);
        }
      }
      CHECK(dims == 78);
    }
  }

  TEST_CASE("Cartan integers from root strings match the Killing form") {
    for (const char* name : {"e6m14", "e6p2"}) {
      CAPTURE(name);
      const PipelineResult& r = pipeline(name);
      const KillingDual form(r);
      for (int a = 0; a < r.datum.size(); a += 5) {
        for (int b = 0; b < r.datum.size(); b += 3) {
          const Vec& x = r.datum.roots[a].values;
          const Vec& y = r.datum.roots[b].values;
          if (x == y || x == Scalar(-1) * y) continue;
          const auto [p, q] = root_string(r.datum, a, b);
          const Scalar c = Scalar(2) * form(x, y) / form(y, y);
          REQUIRE(c.is_rational());
          CHECK(c == Scalar(p - q));
          CHECK(std::abs(p - q) <= 3);
        }
      }
    }
  }

  TEST_CASE("preset bases give the E6 Cartan matrix in catalog order") {
    for (const char* name : {"e6m26", "e6m14", "e6p2"}) {
      CAPTURE(name);
      const PipelineResult& r = pipeline(name);
      CHECK(verify_basis(r.datum, r.basis).passed);
      CHECK(cartan_matrix(r.datum, r.basis) == catalog_cartan('E', 6));
      CHECK(positive_roots(r.datum, r.basis).size() == 36);
    }
  }

  TEST_CASE("literal reference bases of the compact-imaginary models contain non-roots") {
    for (const char* name : {"e6m26", "e6m14"}) {
      CAPTURE(name);
      const PipelineResult& r = pipeline(name);
      const auto literal = paper_basis_literal(name);
      CHECK_FALSE(r.datum.find(literal[0]));
      CHECK(r.datum.find(literal[5]).has_value() == (std::string(name) == "e6m26"));
      for (int k = 1; k < 5; ++k) CHECK(r.datum.find(literal[k]));
      CHECK_THROWS_AS(roots_from_values(r.datum, literal), RootError);
    }
    const PipelineResult& r = pipeline("e6p2");
    CHECK(roots_from_values(r.datum, paper_basis_literal("e6p2")) == r.basis);
  }

  TEST_CASE("a non-basis is rejected with a witness") {
    const PipelineResult& r = pipeline("e6m14");
    std::vector<int> b = r.basis;
    b[0] = *r.datum.find(Scalar(-1) * r.datum.roots[b[0]].values);
    const BasisReport rep = verify_basis(r.datum, b);
    CHECK_FALSE(rep.passed);
    CHECK_FALSE(rep.witness.empty());
  }

  TEST_CASE("compact roots and restricted multiplicity totals") {
    struct Case {
      const char* name;
      const char* compact;
    };
    for (const Case& c : {Case{"e6m26", "D4"}, Case{"e6m14", "A3"}, Case{"e6p2", "0"}}) {
      CAPTURE(c.name);
      const PipelineResult& r = pipeline(c.name);
      CHECK(r.compact_type == c.compact);
      const IntMatrix b0 = cartan_matrix(r.datum, compact_part(r.datum, r.basis));
      const int oracle = b0.empty() ? 0 : test_support::oracle_root_count(b0);
      CHECK(r.compact_root_count == oracle);
      CHECK(r.restricted.total_multiplicity() == r.datum.size() - r.compact_root_count);
    }
  }

  TEST_CASE("maximal root of e6(-14) restricts to w5 + w6 with multiplicity one") {
    const PipelineResult& r = pipeline("e6m14");
    const Vec top = test_support::combination(r.datum, r.basis, {1, 2, 2, 3, 2, 1});
    const auto k = r.datum.find(top);
    REQUIRE(k);
    const Vec bar = r.datum.restrict(top);
    CHECK(bar == Vec{1, 1});
    CHECK(r.restricted.multiplicity(bar) == 1);
    // no root exceeds it
    for (int b : r.basis) CHECK_FALSE(r.datum.find(top + r.datum.roots[b].values));
  }

  TEST_CASE("sl2 triples") {
    const PipelineResult& r = pipeline("e6p2");
    const LieAlgebra& l = r.model.lie;
    for (int k = 0; k < r.datum.size(); k += 7) {
      const Sl2Triple t = sl2_triple(l, r.datum, k);
      CHECK(l.bracket(t.e, t.f) == t.h);
      CHECK(l.bracket(t.h, t.e) == Scalar(2) * t.e);
      CHECK(l.bracket(t.h, t.f) == Scalar(-2) * t.f);
    }
  }

  TEST_CASE("rank identity") {
    for (const char* name : {"e6m26", "e6m14", "e6p2"}) {
      const RankIdentity id = rank_identity_check(pipeline(name).datum, pipeline(name).basis);
      CHECK(id.holds());
      CHECK(id.rank == 6);
    }
  }

  TEST_CASE("non-commuting elements are rejected") {
    const LieAlgebra& l = test_support::model("f4m52").lie;
    CartanSpec h;
    h.h = {unit_vec(l.dim(), 0), unit_vec(l.dim(), 1)};
    bool commute = is_zero(l.bracket(h.h[0], h.h[1]));
    REQUIRE_FALSE(commute);
    CHECK_THROWS_AS(root_decomposition(l, h), RootError);
  }

  TEST_CASE("Cartan decompositions of the preset models") {
    struct Case {
      const char* name;
      int t, p;
    };
    for (const Case& c : {Case{"e6m26", 52, 26}, Case{"e6m14", 46, 32}, Case{"e6p2", 38, 40}}) {
      CAPTURE(c.name);
      const PipelineResult& r = pipeline(c.name);
      const DecompositionBases b = preset_cartan_decomposition(r.model, r.cartan);
      const CartanDecompositionReport rep = verify_cartan_decomposition(r.model.lie, b.t, b.p);
      CHECK(rep.passed());
      CHECK(rep.dim_t == c.t);
      CHECK(rep.dim_p == c.p);
      CHECK(rep.signature() == r.signature.signature());
    }
  }

  TEST_CASE("swapping t and p fails the decomposition check") {
    const PipelineResult& r = pipeline("e6m14");
    const DecompositionBases b = preset_cartan_decomposition(r.model, r.cartan);
    CHECK_FALSE(verify_cartan_decomposition(r.model.lie, b.p, b.t).passed());
  }
}
