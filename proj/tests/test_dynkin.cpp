#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "satake/dynkin.hpp"
#include "satake/rootspace.hpp"
#include "support.hpp"

using namespace satake;

namespace {

struct Type {
  char family;
  int rank;
};

std::vector<Type> all_types() {
  std::vector<Type> out;
  for (int n = 1; n <= 8; ++n) out.push_back({'A', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'B', n});
  for (int n = 3; n <= 8; ++n) out.push_back({'C', n});
  for (int n = 4; n <= 8; ++n) out.push_back({'D', n});
  for (int n = 6; n <= 8; ++n) out.push_back({'E', n});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

IntMatrix permuted(const IntMatrix& a, const std::vector<int>& p) {
  const int n = static_cast<int>(a.size());
  IntMatrix b(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b[p[i]][p[j]] = a[i][j];
  }
  return b;
}

IntMatrix block_sum(const IntMatrix& x, const IntMatrix& y) {
  const int n = static_cast<int>(x.size()), m = static_cast<int>(y.size());
  IntMatrix out(n + m, std::vector<int>(n + m, 0));
  for (int i = 0; i < n; ++i) for (int j = 0; j < n; ++j) out[i][j] = x[i][j];
  for (int i = 0; i < m; ++i) for (int j = 0; j < m; ++j) out[n + i][n + j] = y[i][j];
  return out;
}

}  // namespace

TEST_SUITE("dynkin") {
  TEST_CASE("catalog types classify to themselves under relabeling") {
    std::mt19937 rng(5);
    for (const Type& t : all_types()) {
      const IntMatrix a = catalog_cartan(t.family, t.rank);
      const std::string name = std::string(1, t.family) + std::to_string(t.rank);
      CAPTURE(name);
      auto c = classify(a);
      REQUIRE(c);
      CHECK(c->name() == name);
      std::vector<int> p(t.rank);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      const IntMatrix b = permuted(a, p);
      c = classify(b);
      REQUIRE(c);
      CHECK(c->name() == name);
      // the reported node order reproduces the catalog matrix
      const auto& nodes = c->components[0].nodes;
      for (int i = 0; i < t.rank; ++i) {
        for (int j = 0; j < t.rank; ++j) CHECK(b[nodes[i]][nodes[j]] == a[i][j]);
      }
    }
  }

  TEST_CASE("root counts agree with the root string oracle") {
    for (const Type& t : all_types()) {
      const IntMatrix a = catalog_cartan(t.family, t.rank);
      CAPTURE(t.family);
      CAPTURE(t.rank);
      CHECK(root_count(*classify(a)) == test_support::oracle_root_count(a));
    }
    CHECK(test_support::oracle_root_count(catalog_cartan('E', 6)) == 72);
    CHECK(test_support::oracle_root_count(catalog_cartan('D', 4)) == 24);
    CHECK(test_support::oracle_root_count(catalog_cartan('F', 4)) == 48);
  }

  TEST_CASE("small and decomposable diagrams") {
    CHECK(classify({})->name() == "0");
    const IntMatrix b2 = catalog_cartan('B', 2);
    IntMatrix c2 = b2;
    std::swap(c2[0][1], c2[1][0]);
    CHECK(classify(c2)->name() == "B2");
    const auto sum = classify(block_sum(catalog_cartan('A', 1), catalog_cartan('A', 1)));
    CHECK(sum->name() == "A1+A1");
    CHECK(sum->rank() == 2);
    CHECK(classify(block_sum(catalog_cartan('A', 2), catalog_cartan('D', 4)))->name() == "A2+D4");
  }

  TEST_CASE("non-finite matrices are rejected") {
    CHECK_FALSE(classify({{2, -2}, {-2, 2}}));
    CHECK_FALSE(classify({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
    CHECK_FALSE(classify({{2, -4}, {-1, 2}}));
    CHECK_THROWS(catalog_cartan('E', 5));
  }

  TEST_CASE("bond multiplicities") {
    const IntMatrix f4 = catalog_cartan('F', 4);
    CHECK(bond(f4, 0, 1) == 1);
    CHECK(bond(f4, 1, 2) == 2);
    CHECK(bond(catalog_cartan('G', 2), 0, 1) == 3);
    CHECK(bond(f4, 0, 3) == 0);
  }
}
