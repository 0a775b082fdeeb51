#include "satake/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace satake::kernels {

namespace {

// k_ij = sum_b sum_a c_{jb}^a c_{ia}^b
Scalar killing_entry(const LieAlgebra& l, int i, int j) {
  const int n = l.dim();
  Scalar s;
  for (int b = 0; b < n; ++b) {
    for (const auto& [a, c] : l.bracket(j, b)) {
      const SparseVec& ia = l.bracket(i, a);
      auto it = std::lower_bound(
          ia.begin(), ia.end(), b,
          [](const auto& e, int key) { return e.first < key; });
      if (it != ia.end() && it->first == b) s.add_product(c, it->second);
    }
  }
  return s;
}

bool jacobi_holds(const LieAlgebra& l, int i, int j, int k, Vec& acc) {
  std::fill(acc.begin(), acc.end(), Scalar());
  const std::array<std::array<int, 3>, 3> cyc{{{i, j, k}, {j, k, i}, {k, i, j}}};
  for (const auto& [x, y, z] : cyc) {
    for (const auto& [a, c] : l.bracket(x, y)) axpy(acc, c, l.bracket(a, z));
  }
  return is_zero(acc);
}

void count_row(const LieAlgebra& l, int i, JacobiReport& rep, Vec& acc) {
  const int n = l.dim();
  for (int j = i + 1; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ++rep.checked;
      if (!jacobi_holds(l, i, j, k, acc)) {
        ++rep.failures;
        if (!rep.first) rep.first = std::array<int, 3>{i, j, k};
      }
    }
  }
}

}  // namespace

int thread_count() {
  if (const char* env = std::getenv("SATAKE_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

Matrix killing_serial(const LieAlgebra& l) {
  const int n = l.dim();
  Matrix k(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) k(i, j) = k(j, i) = killing_entry(l, i, j);
  }
  return k;
}

Matrix killing_parallel(const LieAlgebra& l) {
  const int n = l.dim();
  Matrix k(n, n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) k(i, j) = killing_entry(l, i, j);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) k(i, j) = k(j, i);
  }
  return k;
}

JacobiReport jacobi_serial(const LieAlgebra& l) {
  JacobiReport rep;
  Vec acc(l.dim());
  for (int i = 0; i < l.dim(); ++i) count_row(l, i, rep, acc);
  return rep;
}

JacobiReport jacobi_parallel(const LieAlgebra& l) {
  const int n = l.dim();
  std::vector<JacobiReport> rows(n);
#pragma omp parallel num_threads(thread_count())
  {
    Vec acc(n);
#pragma omp for schedule(dynamic, 1)
    for (int i = 0; i < n; ++i) count_row(l, i, rows[i], acc);
  }
  JacobiReport rep;
  for (const auto& r : rows) {
    rep.checked += r.checked;
    rep.failures += r.failures;
    if (!rep.first && r.first) rep.first = r.first;
  }
  return rep;
}

}  // namespace satake::kernels
