#include "satake/triality.hpp"

namespace satake {

namespace {

Matrix block_diag(const Triple& d) {
  const int n = d[0].rows();
  Matrix m(3 * n, 3 * n);
  for (int b = 0; b < 3; ++b) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m(b * n + r, b * n + c) = d[b](r, c);
    }
  }
  return m;
}

}  // namespace

LinearLieAlgebra orthogonal_lie(const AlgebraTable& s) {
  if (!s.form) throw TrialityError(s.name + ": no bilinear form");
  const Matrix& q = *s.form;
  const int n = s.dim;
  if (rank(q) != n) throw TrialityError(s.name + ": degenerate form");
  // sum_a D(a,x) q(a,y) + q(x,a) D(a,y) = 0 for x <= y
  std::vector<SparseVec> rows;
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      Vec row(n * n);
      for (int a = 0; a < n; ++a) {
        row[a * n + x] += q(a, y);
        row[a * n + y] += q(x, a);
      }
      auto sp = to_sparse(row);
      if (!sp.empty()) rows.push_back(std::move(sp));
    }
  }
  std::vector<Matrix> basis;
  for (const auto& v : nullspace(rows, n * n)) {
    basis.push_back(Matrix::unflatten(v, n, n));
  }
  return linear_lie_algebra("o(" + s.name + ")", std::move(basis));
}

TrialityAlgebra::TrialityAlgebra(AlgebraTable s) : s_(std::move(s)) {
  const int n = s_.dim;
  LinearLieAlgebra o = orthogonal_lie(s_);
  const int m = o.algebra.dim();
  // Unknown (i, k): coefficient of o-basis element k in d_i.
  // Equation (x, y, c): coordinate c of d0(x*y) - d1(x)*y - x*d2(y).
  std::vector<Vec> cols(3 * m, Vec(n * n * n));
  for (int k = 0; k < m; ++k) {
    const Matrix& ok = o.basis[k];
    for (int x = 0; x < n; ++x) {
      Vec ox = ok.column(x);
      for (int y = 0; y < n; ++y) {
        Vec oy = ok.column(y);
        const int base = (x * n + y) * n;
        Vec v0 = ok.apply(to_dense(s_.product(x, y), n));
        Vec v1 = s_.multiply(ox, s_.basis(y));
        Vec v2 = s_.multiply(s_.basis(x), oy);
        for (int c = 0; c < n; ++c) {
          cols[k][base + c] = v0[c];
          cols[m + k][base + c] = -v1[c];
          cols[2 * m + k][base + c] = -v2[c];
        }
      }
    }
  }
  std::vector<SparseVec> rows;
  for (int e = 0; e < n * n * n; ++e) {
    SparseVec row;
    for (int u = 0; u < 3 * m; ++u) {
      if (!cols[u][e].is_zero()) row.emplace_back(u, cols[u][e]);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  std::vector<Matrix> basis;
  for (const auto& v : nullspace(rows, 3 * m)) {
    Triple d{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < m; ++k) {
        if (!v[i * m + k].is_zero()) d[i] = d[i] + v[i * m + k] * o.basis[k];
      }
    }
    comps_.push_back(d);
    basis.push_back(block_diag(d));
  }
  std::vector<std::string> labels;
  for (size_t k = 0; k < basis.size(); ++k) labels.push_back("t" + std::to_string(k));
  lie_ = linear_lie_algebra("tri(" + s_.name + ")", std::move(basis),
                            std::move(labels));
  const int d = dim();
  theta_ = Matrix(d, d);
  for (int k = 0; k < d; ++k) {
    const Triple& c = comps_[k];
    Vec img = solve(Triple{c[2], c[0], c[1]});
    for (int r = 0; r < d; ++r) theta_(r, k) = img[r];
  }
}

Triple TrialityAlgebra::components(const Vec& coords) const {
  const int n = s_.dim;
  Triple d{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (int k = 0; k < dim(); ++k) {
    if (coords[k].is_zero()) continue;
    for (int i = 0; i < 3; ++i) d[i] = d[i] + coords[k] * comps_[k][i];
  }
  return d;
}

std::optional<Vec> TrialityAlgebra::coordinates(const Triple& d) const {
  if (dim() == 0) {
    for (const auto& m : d) {
      if (!m.is_zero()) return std::nullopt;
    }
    return Vec{};
  }
  return lie_.coordinates(block_diag(d));
}

Vec TrialityAlgebra::solve(const Triple& d) const {
  auto c = coordinates(d);
  if (!c) throw TrialityError("triple is not in tri(" + s_.name + ")");
  return *c;
}

Vec TrialityAlgebra::theta(const Vec& coords, int power) const {
  Vec v = coords;
  for (int p = ((power % 3) + 3) % 3; p > 0; --p) v = theta_.apply(v);
  return v;
}

TrialityAlgebra triality_algebra(const AlgebraTable& s) {
  return TrialityAlgebra(s);
}

Matrix sigma(const AlgebraTable& s, const Vec& x, const Vec& y) {
  const int n = s.dim;
  Matrix m(n, n);
  for (int z = 0; z < n; ++z) {
    Vec ez = s.basis(z);
    Vec col = s.bilinear(x, ez) * y - s.bilinear(y, ez) * x;
    for (int r = 0; r < n; ++r) m(r, z) = col[r];
  }
  return m;
}

Matrix left_op(const AlgebraTable& s, const Vec& x) { return s.left_mult(x); }

Matrix right_op(const AlgebraTable& s, const Vec& x) { return s.right_mult(x); }

Triple t_components(const AlgebraTable& s, const Vec& x, const Vec& y) {
  const int n = s.dim;
  const Scalar h = s.bilinear(x, y) / 2;
  Matrix id = h * Matrix::identity(n);
  Matrix lx = left_op(s, x), ly = left_op(s, y);
  Matrix rx = right_op(s, x), ry = right_op(s, y);
  return Triple{sigma(s, x, y), id - rx * ly, id - lx * ry};
}

Vec t_element(const TrialityAlgebra& t, const Vec& x, const Vec& y) {
  Triple d = t_components(t.s(), x, y);
  auto c = t.coordinates(d);
  if (!c) {
    throw TrialityError("t_{x,y} violates the triality constraint in " +
                        t.s().name);
  }
  return *c;
}

bool satisfies_triality(const AlgebraTable& s, const Triple& d) {
  const int n = s.dim;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      Vec lhs = d[0].apply(to_dense(s.product(x, y), n));
      Vec rhs = s.multiply(d[1].column(x), s.basis(y)) +
                s.multiply(s.basis(x), d[2].column(y));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace satake
