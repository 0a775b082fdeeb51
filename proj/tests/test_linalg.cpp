#include <doctest.h>

#include <random>

#include "satake/lie.hpp"
#include "satake/linalg.hpp"
#include "support.hpp"

using namespace satake;

namespace {

/// Integer matrix with determinant +-1 from random elementary operations.
Matrix random_unimodular(int n, std::mt19937& rng) {
  Matrix p = Matrix::identity(n);
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (int step = 0; step < 3 * n; ++step) {
    const int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const Scalar c(mult(rng));
    for (int r = 0; r < n; ++r) p(r, i) += c * p(r, j);
  }
  for (int step = 0; step < n; ++step) {
    const int i = idx(rng), j = idx(rng);
    for (int r = 0; r < n; ++r) std::swap(p(r, i), p(r, j));
  }
  return p;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("nullspace annihilates and has the right dimension") {
    const Matrix m = Matrix::from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, Scalar::sqrt3(), 0}}, 4);
    const auto ker = nullspace(m);
    CHECK(ker.size() == 2);
    for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
    CHECK(rank(m) == 2);
  }

  TEST_CASE("sparse nullspace equals the dense one") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> val(-2, 2);
    const int rows = 12, cols = 15;
    Matrix m(rows, cols);
    std::vector<SparseVec> sparse;
    for (int r = 0; r < rows; ++r) {
      Vec row(cols);
      for (int c = 0; c < cols; ++c) {
        if ((r * 7 + c * 3) % 5 == 0) row[c] = Scalar(val(rng));
        m(r, c) = row[c];
      }
      sparse.push_back(to_sparse(row));
    }
    CHECK(nullspace(sparse, cols) == nullspace(m));
  }

  TEST_CASE("coordinate solver detects non-members") {
    CoordinateSolver s({{1, 0, 1}, {0, 1, 1}});
    const auto c = s.coordinates(Vec{2, 3, 5});
    REQUIRE(c);
    CHECK(*c == Vec{2, 3});
    CHECK_FALSE(s.coordinates(Vec{1, 1, 1}));
    CHECK_THROWS_AS(CoordinateSolver({{1, 2}, {2, 4}}), LinalgError);
  }

  TEST_CASE("inverse") {
    const Matrix m = Matrix::from_rows({{2, Scalar::sqrt3()}, {Scalar::imag(), 1}}, 2);
    CHECK(m * inverse(m) == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(Matrix::from_rows({{1, 2}, {2, 4}}, 2)), LinalgError);
  }

  TEST_CASE("signature of small forms") {
    CHECK(signature(Matrix::from_rows({{0, 1}, {1, 0}}, 2)) == SignatureReport{1, 1, 0});
    CHECK(signature(Matrix::from_rows({{1, 2}, {2, 4}}, 2)) == SignatureReport{1, 0, 1});
    CHECK(signature(Matrix::from_rows({{1, 2}, {2, 3}}, 2)).signature() == 0);
    CHECK_THROWS_AS(signature(Matrix::from_rows({{1, 2}, {3, 4}}, 2)), LinalgError);
  }

  TEST_CASE("signature is invariant under 20 random unimodular congruences") {
    for (const char* name : {"f4m20", "e6m14"}) {
      const Matrix& k = test_support::model(name).lie.killing();
      const SignatureReport base = signature(k);
      std::mt19937 rng(20240611);
      for (int t = 0; t < 20; ++t) {
        const Matrix p = random_unimodular(k.rows(), rng);
        CHECK(signature(p.transpose() * k * p) == base);
      }
    }
  }

  TEST_CASE("exact signature agrees with floating point eigenvalues") {
    for (const char* name : {"f4m52", "f4m20", "f4p4", "e6m14"}) {
      const Matrix& k = test_support::model(name).lie.killing();
      const SignatureReport s = signature(k);
      const auto [plus, minus] = test_support::numeric_inertia(k);
      CHECK(s.n_plus == plus);
      CHECK(s.n_minus == minus);
    }
  }
}
