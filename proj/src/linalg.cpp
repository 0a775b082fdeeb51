#include "satake/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace satake {

Vec zero_vec(int n) { return Vec(n); }

Vec unit_vec(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Vec operator+(const Vec& x, const Vec& y) {
  Vec r = x;
  for (size_t i = 0; i < y.size(); ++i) {
    if (!y[i].is_zero()) r[i] += y[i];
  }
  return r;
}

Vec operator-(const Vec& x, const Vec& y) {
  Vec r = x;
  for (size_t i = 0; i < y.size(); ++i) {
    if (!y[i].is_zero()) r[i] -= y[i];
  }
  return r;
}

Vec operator*(const Scalar& s, const Vec& x) {
  Vec r(x.size());
  if (s.is_zero()) return r;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) r[i] = s * x[i];
  }
  return r;
}

void axpy(Vec& y, const Scalar& s, const Vec& x) {
  if (s.is_zero()) return;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i].add_product(s, x[i]);
  }
}

void axpy(Vec& y, const Scalar& s, const SparseVec& x) {
  if (s.is_zero()) return;
  for (const auto& [i, v] : x) y[i].add_product(s, v);
}

SparseVec to_sparse(std::span<const Scalar> v) {
  SparseVec r;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) r.emplace_back(static_cast<int>(i), v[i]);
  }
  return r;
}

Vec to_dense(const SparseVec& v, int n) {
  Vec r(n);
  for (const auto& [i, s] : v) r[i] = s;
  return r;
}

Scalar sparse_at(const SparseVec& v, int index) {
  auto it = std::lower_bound(
      v.begin(), v.end(), index,
      [](const std::pair<int, Scalar>& p, int i) { return p.first < i; });
  if (it != v.end() && it->first == index) return it->second;
  return Scalar();
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    for (int r = 0; r < rows; ++r) m(r, static_cast<int>(c)) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < cols; ++c) m(static_cast<int>(r), c) = rows[r][c];
  }
  return m;
}

Vec Matrix::column(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::unflatten(const Vec& v, int rows, int cols) {
  if (static_cast<int>(v.size()) != rows * cols) {
    throw LinalgError("unflatten: size mismatch");
  }
  Matrix m(rows, cols);
  m.data_ = v;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const { return satake::is_zero(data_); }

Vec Matrix::apply(std::span<const Scalar> v) const {
  Vec out(rows_);
  for (int c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (int r = 0; r < rows_; ++r) {
      const Scalar& m = (*this)(r, c);
      if (!m.is_zero()) out[r].add_product(m, v[c]);
    }
  }
  return out;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw LinalgError("matrix product: shape mismatch");
  Matrix z(x.rows_, y.cols_);
  for (int r = 0; r < x.rows_; ++r) {
    for (int k = 0; k < x.cols_; ++k) {
      const Scalar& a = x(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < y.cols_; ++c) {
        const Scalar& b = y(k, c);
        if (!b.is_zero()) z(r, c).add_product(a, b);
      }
    }
  }
  return z;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  Matrix z = x;
  for (size_t i = 0; i < z.data_.size(); ++i) z.data_[i] += y.data_[i];
  return z;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  Matrix z = x;
  for (size_t i = 0; i < z.data_.size(); ++i) z.data_[i] -= y.data_[i];
  return z;
}

Matrix operator*(const Scalar& s, const Matrix& x) {
  Matrix z = x;
  for (auto& e : z.data_) {
    if (!e.is_zero()) e *= s;
  }
  return z;
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

void Echelon::reduce(Vec& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar f = v[pivots_[r]];
    if (f.is_zero()) continue;
    const Vec& row = rows_[r];
    for (int c = 0; c < cols_; ++c) {
      if (!row[c].is_zero()) v[c] -= f * row[c];
    }
  }
}

bool Echelon::insert(Vec v) {
  reduce(v);
  int p = -1;
  for (int c = 0; c < cols_; ++c) {
    if (!v[c].is_zero()) {
      p = c;
      break;
    }
  }
  if (p < 0) return false;
  const Scalar inv = v[p].inverse();
  for (auto& e : v) {
    if (!e.is_zero()) e *= inv;
  }
  for (auto& row : rows_) {
    const Scalar f = row[p];
    if (f.is_zero()) continue;
    for (int c = 0; c < cols_; ++c) {
      if (!v[c].is_zero()) row[c] -= f * v[c];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

std::vector<int> Echelon::free_columns() const {
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots_) is_pivot[p] = true;
  std::vector<int> out;
  for (int c = 0; c < cols_; ++c) {
    if (!is_pivot[c]) out.push_back(c);
  }
  return out;
}

std::vector<Vec> Echelon::kernel() const {
  std::vector<int> row_of(cols_, -1);
  for (size_t r = 0; r < pivots_.size(); ++r) {
    row_of[pivots_[r]] = static_cast<int>(r);
  }
  std::vector<Vec> out;
  for (int f = 0; f < cols_; ++f) {
    if (row_of[f] >= 0) continue;
    Vec x(cols_);
    x[f] = 1;
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& e = rows_[r][f];
      if (!e.is_zero()) x[pivots_[r]] = -e;
    }
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

// Echelon form with sparse rows kept fully reduced: every row is zero at
// all other pivot columns, so reducing a vector is a single pass over its
// pivot entries.
class SparseEchelon {
 public:
  explicit SparseEchelon(int cols)
      : cols_(cols), row_of_col_(cols, -1), occ_(cols), acc_(cols),
        mark_(cols, false) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  bool insert(const SparseVec& v) {
    std::vector<int> touched;
    auto touch = [&](int c) {
      if (!mark_[c]) {
        mark_[c] = true;
        touched.push_back(c);
      }
    };
    for (const auto& [c, x] : v) {
      touch(c);
      acc_[c] += x;
    }
    for (const auto& [c, x] : v) {
      const int r = row_of_col_[c];
      if (r < 0) continue;
      for (const auto& [k, y] : rows_[r]) {
        touch(k);
        acc_[k] -= x * y;
      }
    }
    std::sort(touched.begin(), touched.end());
    SparseVec red;
    for (int c : touched) {
      if (!acc_[c].is_zero()) red.emplace_back(c, std::move(acc_[c]));
      acc_[c] = Scalar();
      mark_[c] = false;
    }
    if (red.empty()) return false;
    const int p = red.front().first;
    const Scalar inv = red.front().second.inverse();
    for (auto& [c, x] : red) x *= inv;

    auto& holders = occ_[p];
    std::sort(holders.begin(), holders.end());
    holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
    for (int r : holders) {
      const Scalar f = sparse_at(rows_[r], p);
      if (f.is_zero()) continue;
      rows_[r] = subtract(rows_[r], f, red);
      for (const auto& [c, x] : red) {
        if (c != p) occ_[c].push_back(r);
      }
    }
    holders.clear();
    const int idx = rank();
    for (const auto& [c, x] : red) {
      if (c != p) occ_[c].push_back(idx);
    }
    row_of_col_[p] = idx;
    pivots_.push_back(p);
    rows_.push_back(std::move(red));
    return true;
  }

  std::vector<int> free_columns() const {
    std::vector<int> out;
    for (int c = 0; c < cols_; ++c) {
      if (row_of_col_[c] < 0) out.push_back(c);
    }
    return out;
  }

  SparseVec kernel_vector(int f) const {
    SparseVec x{{f, Scalar(1)}};
    std::vector<int> holders = occ_[f];
    std::sort(holders.begin(), holders.end());
    holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
    for (int r : holders) {
      Scalar e = sparse_at(rows_[r], f);
      if (!e.is_zero()) x.emplace_back(pivots_[r], -e);
    }
    std::sort(x.begin(), x.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return x;
  }

 private:
  static SparseVec subtract(const SparseVec& a, const Scalar& f,
                            const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -(f * b[j].second));
        ++j;
      } else {
        Scalar v = a[i].second - f * b[j].second;
        if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  int cols_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivots_;
  std::vector<int> row_of_col_;
  std::vector<std::vector<int>> occ_;  // column -> rows that may hold it
  Vec acc_;
  std::vector<bool> mark_;
};

}  // namespace

std::vector<Vec> nullspace(const std::vector<SparseVec>& rows, int cols) {
  UnionFind uf(cols);
  for (const auto& row : rows) {
    for (size_t k = 1; k < row.size(); ++k) {
      uf.unite(row[0].first, row[k].first);
    }
  }
  std::map<int, std::vector<int>> comp_cols;
  for (int c = 0; c < cols; ++c) comp_cols[uf.find(c)].push_back(c);
  std::map<int, std::vector<const SparseVec*>> comp_rows;
  for (const auto& row : rows) {
    if (!row.empty()) comp_rows[uf.find(row[0].first)].push_back(&row);
  }

  std::vector<std::pair<int, Vec>> keyed;  // (free column, vector)
  for (const auto& [root, members] : comp_cols) {
    const int m = static_cast<int>(members.size());
    std::map<int, int> local;
    for (int k = 0; k < m; ++k) local[members[k]] = k;
    SparseEchelon ech(m);
    auto it = comp_rows.find(root);
    if (it != comp_rows.end()) {
      for (const SparseVec* row : it->second) {
        SparseVec v;
        v.reserve(row->size());
        for (const auto& [c, s] : *row) v.emplace_back(local[c], s);
        ech.insert(v);
        if (ech.rank() == m) break;
      }
    }
    for (int f : ech.free_columns()) {
      Vec full(cols);
      for (const auto& [k, x] : ech.kernel_vector(f)) full[members[k]] = x;
      keyed.emplace_back(members[f], std::move(full));
    }
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Vec> out;
  out.reserve(keyed.size());
  for (auto& [k, v] : keyed) out.push_back(std::move(v));
  return out;
}

std::vector<Vec> nullspace(const Matrix& m) {
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    auto s = to_sparse(m.row(r));
    if (!s.empty()) rows.push_back(std::move(s));
  }
  return nullspace(rows, m.cols());
}

int rank(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  Echelon ech(static_cast<int>(vectors.front().size()));
  for (const auto& v : vectors) ech.insert(v);
  return ech.rank();
}

int rank(const Matrix& m) {
  Echelon ech(m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    ech.insert(Vec(m.row(r).begin(), m.row(r).end()));
  }
  return ech.rank();
}

SignatureReport signature(const Matrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw LinalgError("signature of non-square matrix");
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (!m(r, c).is_real()) {
        throw LinalgError("signature of non-real matrix");
      }
      if (!(m(r, c) == m(c, r))) {
        throw LinalgError("signature of non-symmetric matrix");
      }
    }
  }
  Matrix a = m;
  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;
  SignatureReport out;
  while (!live.empty()) {
    int piv = -1;
    int best = 1 << 30;
    for (int idx : live) {
      if (a(idx, idx).is_zero()) continue;
      int cost = pivot_cost(a(idx, idx));
      if (cost < best) {
        best = cost;
        piv = idx;
      }
    }
    if (piv < 0) {
      // Zero diagonal: replace e_i by e_i + e_j where a(i,j) != 0, which
      // makes the new diagonal entry 2 a(i,j).
      int pi = -1, pj = -1;
      for (int i : live) {
        for (int j : live) {
          if (i != j && !a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
        }
        if (pi >= 0) break;
      }
      if (pi < 0) {
        out.n_zero += static_cast<int>(live.size());
        break;
      }
      for (int c : live) a(pi, c) += a(pj, c);
      for (int r : live) a(r, pi) += a(r, pj);
      piv = pi;
    }
    const Scalar p = a(piv, piv);
    (sign(p) > 0 ? out.n_plus : out.n_minus) += 1;
    const Scalar pinv = p.inverse();
    std::erase(live, piv);
    for (int r : live) {
      if (a(r, piv).is_zero()) continue;
      const Scalar f = a(r, piv) * pinv;
      for (int c : live) {
        if (!a(piv, c).is_zero()) a(r, c) -= f * a(piv, c);
      }
    }
  }
  return out;
}

Matrix inverse(const Matrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw LinalgError("inverse of non-square matrix");
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    int best = 1 << 30;
    for (int r = col; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      int cost = pivot_cost(a(r, col));
      if (cost < best) {
        best = cost;
        piv = r;
      }
    }
    if (piv < 0) throw LinalgError("inverse of singular matrix");
    if (piv != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    const Scalar p = a(col, col).inverse();
    for (int c = 0; c < n; ++c) {
      if (!a(col, c).is_zero()) a(col, c) *= p;
      if (!inv(col, c).is_zero()) inv(col, c) *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Scalar f = a(r, col);
      if (f.is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

CoordinateSolver::CoordinateSolver(std::vector<Vec> basis)
    : basis_(std::move(basis)) {
  if (basis_.empty()) return;
  ambient_ = static_cast<int>(basis_.front().size());
  Echelon ech(ambient_);
  for (const auto& v : basis_) {
    if (!ech.insert(v)) {
      throw LinalgError("CoordinateSolver: basis vectors are dependent");
    }
  }
  pivot_coords_ = ech.pivots();
  std::sort(pivot_coords_.begin(), pivot_coords_.end());
  const int k = dim();
  Matrix mt(k, k);  // mt(j, i) = basis_i[P_j]
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) mt(j, i) = basis_[i][pivot_coords_[j]];
  }
  inv_ = inverse(mt);
}

std::optional<Vec> CoordinateSolver::coordinates(
    std::span<const Scalar> v) const {
  const int k = dim();
  if (k == 0) {
    if (satake::is_zero(v)) return Vec{};
    return std::nullopt;
  }
  Vec rhs(k);
  for (int j = 0; j < k; ++j) rhs[j] = v[pivot_coords_[j]];
  Vec c = inv_.apply(rhs);
  Vec back = combine(c);
  for (int i = 0; i < ambient_; ++i) {
    if (!(back[i] == v[i])) return std::nullopt;
  }
  return c;
}

Vec CoordinateSolver::solve(std::span<const Scalar> v) const {
  auto c = coordinates(v);
  if (!c) throw LinalgError("vector is not in the span");
  return *c;
}

Vec CoordinateSolver::combine(std::span<const Scalar> coords) const {
  Vec out(ambient_);
  for (int i = 0; i < dim(); ++i) axpy(out, coords[i], basis_[i]);
  return out;
}

}  // namespace satake
