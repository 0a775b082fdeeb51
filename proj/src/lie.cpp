#include "satake/lie.hpp"

#include <map>

#include "satake/kernels.hpp"

namespace satake {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels,
                       std::vector<SparseVec> brackets)
    : name_(std::move(name)),
      dim_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      table_(std::move(brackets)) {
  if (static_cast<int>(table_.size()) != dim_ * dim_) {
    throw LieError(name_ + ": bracket table has the wrong size");
  }
  for (int i = 0; i < dim_; ++i) {
    if (!bracket(i, i).empty()) {
      throw LieError(name_ + ": [x,x] != 0 at " + labels_[i]);
    }
    for (int j = i + 1; j < dim_; ++j) {
      const SparseVec& a = bracket(i, j);
      const SparseVec& b = bracket(j, i);
      bool ok = a.size() == b.size();
      for (size_t k = 0; ok && k < a.size(); ++k) {
        ok = a[k].first == b[k].first && a[k].second == -b[k].second;
      }
      if (!ok) {
        throw LieError(name_ + ": bracket not antisymmetric at (" +
                       labels_[i] + "," + labels_[j] + ")");
      }
    }
  }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || bracket(i, j).empty()) continue;
      axpy(out, x[i] * y[j], bracket(i, j));
    }
  }
  return out;
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  Vec out(dim_);
  for (const auto& [i, xi] : x) {
    for (const auto& [j, yj] : y) {
      if (!bracket(i, j).empty()) axpy(out, xi * yj, bracket(i, j));
    }
  }
  return to_sparse(out);
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : bracket(i, j)) m(k, j) += x[i] * c;
    }
  }
  return m;
}

const Matrix& LieAlgebra::killing() const {
  std::call_once(cache_->once,
                 [this] { cache_->killing = kernels::killing_parallel(*this); });
  return cache_->killing;
}

Scalar LieAlgebra::killing(const Vec& x, const Vec& y) const {
  const Matrix& k = killing();
  Scalar s;
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (!y[j].is_zero() && !k(i, j).is_zero()) s += x[i] * k(i, j) * y[j];
    }
  }
  return s;
}

JacobiReport certify_jacobi(const LieAlgebra& l) {
  return kernels::jacobi_parallel(l);
}

CheckReport jacobi_report(const LieAlgebra& l) {
  JacobiReport j = certify_jacobi(l);
  CheckReport rep("Jacobi identity " + l.name());
  rep.checked = j.checked;
  if (j.first) {
    const auto& [a, b, c] = *j.first;
    rep.fail("triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
             std::to_string(c) + ") = (" + l.labels()[a] + "," +
             l.labels()[b] + "," + l.labels()[c] + "), " +
             std::to_string(j.failures) + " violations");
  }
  return rep;
}

SignatureReport killing_signature(const LieAlgebra& l) {
  return signature(l.killing());
}

CheckReport check_killing_invariance(const LieAlgebra& l) {
  CheckReport rep("Killing invariance " + l.name());
  const Matrix& k = l.killing();
  const int n = l.dim();
  auto kv = [&](const SparseVec& u, int z) {
    Scalar s;
    for (const auto& [a, c] : u) s.add_product(c, k(a, z));
    return s;
  };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = y; z < n; ++z) {
        ++rep.checked;
        if (!(kv(l.bracket(x, y), z) + kv(l.bracket(x, z), y)).is_zero()) {
          rep.fail("(" + l.labels()[x] + "," + l.labels()[y] + "," +
                   l.labels()[z] + ")");
        }
      }
    }
  }
  return rep;
}

Matrix LinearLieAlgebra::element(const Vec& coords) const {
  const int r = basis.front().rows(), c = basis.front().cols();
  return Matrix::unflatten(solver.combine(coords), r, c);
}

LinearLieAlgebra linear_lie_algebra(std::string name, std::vector<Matrix> basis,
                                    std::vector<std::string> labels) {
  const int n = static_cast<int>(basis.size());
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back("d" + std::to_string(i));
  }
  std::vector<Vec> flat;
  flat.reserve(n);
  for (const auto& m : basis) flat.push_back(m.flatten());
  LinearLieAlgebra out;
  out.solver = CoordinateSolver(std::move(flat));
  std::vector<SparseVec> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto coords = out.solver.coordinates(commutator(basis[i], basis[j]).flatten());
      if (!coords) {
        throw LieError(name + ": span is not closed under commutators");
      }
      table[i * n + j] = to_sparse(*coords);
      SparseVec neg = table[i * n + j];
      for (auto& [k, c] : neg) c = -c;
      table[j * n + i] = std::move(neg);
    }
  }
  out.algebra = LieAlgebra(std::move(name), std::move(labels), std::move(table));
  out.basis = std::move(basis);
  return out;
}

LinearLieAlgebra derivations(const AlgebraTable& a) {
  const int n = a.dim;
  std::vector<SparseVec> rows;
  // Unknown D(c, k), index c * n + k: coefficient of e_c in d(e_k).
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::map<int, std::map<int, Scalar>> eq;  // output coordinate -> row
      for (const auto& [k, p] : a.product(i, j)) {
        for (int c = 0; c < n; ++c) eq[c][c * n + k] += p;
      }
      for (int m = 0; m < n; ++m) {
        for (const auto& [c, v] : a.product(m, j)) eq[c][m * n + i] -= v;
        for (const auto& [c, v] : a.product(i, m)) eq[c][m * n + j] -= v;
      }
      for (const auto& [c, row] : eq) {
        SparseVec s;
        for (const auto& [col, v] : row) {
          if (!v.is_zero()) s.emplace_back(col, v);
        }
        if (!s.empty()) rows.push_back(std::move(s));
      }
    }
  }
  std::vector<Matrix> basis;
  for (const auto& v : nullspace(rows, n * n)) {
    basis.push_back(Matrix::unflatten(v, n, n));
  }
  return linear_lie_algebra("Der(" + a.name + ")", std::move(basis));
}

Subalgebra restrict_to(const LieAlgebra& l, const std::vector<Vec>& basis,
                       std::string name) {
  const int n = static_cast<int>(basis.size());
  Subalgebra out;
  out.basis = basis;
  if (n > 0) out.solver = CoordinateSolver(basis);
  std::vector<SparseVec> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto coords = out.solver.coordinates(l.bracket(basis[i], basis[j]));
      if (!coords) throw LieError("subspace of " + l.name() + " is not closed");
      table[i * n + j] = to_sparse(*coords);
      SparseVec neg = table[i * n + j];
      for (auto& [k, c] : neg) c = -c;
      table[j * n + i] = std::move(neg);
    }
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  if (name.empty()) name = "sub(" + l.name() + ")";
  out.algebra = LieAlgebra(std::move(name), std::move(labels), std::move(table));
  return out;
}

Subalgebra subalgebra_closure(const LieAlgebra& l,
                              const std::vector<Vec>& generators) {
  Echelon ech(l.dim());
  std::vector<Vec> basis;
  for (const auto& g : generators) {
    if (ech.insert(g)) basis.push_back(g);
  }
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      Vec b = l.bracket(basis[j], basis[i]);
      if (ech.insert(b)) basis.push_back(std::move(b));
    }
  }
  return restrict_to(l, basis);
}

std::vector<Vec> centralizer(const LieAlgebra& l, const std::vector<Vec>& set) {
  const int n = l.dim();
  std::vector<SparseVec> rows;
  for (const auto& s : set) {
    std::vector<Vec> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = l.bracket(unit_vec(n, i), s);
    for (int c = 0; c < n; ++c) {
      SparseVec row;
      for (int i = 0; i < n; ++i) {
        if (!cols[i][c].is_zero()) row.emplace_back(i, cols[i][c]);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return nullspace(rows, n);
}

std::vector<Vec> center(const LieAlgebra& l) {
  std::vector<Vec> all;
  for (int i = 0; i < l.dim(); ++i) all.push_back(unit_vec(l.dim(), i));
  return centralizer(l, all);
}

CheckReport check_lie_homomorphism(const LieAlgebra& from, const LieAlgebra& to,
                                   const Matrix& map) {
  CheckReport rep("Lie homomorphism " + from.name() + " -> " + to.name());
  if (map.rows() != to.dim() || map.cols() != from.dim()) {
    throw LieError("homomorphism matrix has the wrong shape");
  }
  std::vector<Vec> images(from.dim());
  for (int j = 0; j < from.dim(); ++j) images[j] = map.column(j);
  for (int i = 0; i < from.dim(); ++i) {
    for (int j = i + 1; j < from.dim(); ++j) {
      ++rep.checked;
      Vec lhs = map.apply(to_dense(from.bracket(i, j), from.dim()));
      if (!(lhs == to.bracket(images[i], images[j]))) {
        rep.fail("f([x,y]) != [f(x),f(y)] at (" + from.labels()[i] + "," +
                 from.labels()[j] + ")");
      }
    }
  }
  return rep;
}

}  // namespace satake
