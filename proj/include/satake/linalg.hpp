#ifndef SATAKE_LINALG_HPP
#define SATAKE_LINALG_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "satake/scalar.hpp"

namespace satake {

using Vec = std::vector<Scalar>;

/// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Vec zero_vec(int n);
Vec unit_vec(int n, int i);
bool is_zero(std::span<const Scalar> v);
Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(const Scalar& s, const Vec& x);
/// y += s * x
void axpy(Vec& y, const Scalar& s, const Vec& x);
void axpy(Vec& y, const Scalar& s, const SparseVec& x);

SparseVec to_sparse(std::span<const Scalar> v);
Vec to_dense(const SparseVec& v, int n);
Scalar sparse_at(const SparseVec& v, int index);

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(int n);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(int r) const {
    return {data_.data() + r * cols_, static_cast<size_t>(cols_)};
  }
  Vec column(int c) const;
  Vec flatten() const { return data_; }
  static Matrix unflatten(const Vec& v, int rows, int cols);

  Matrix transpose() const;
  bool is_zero() const;
  Vec apply(std::span<const Scalar> v) const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Scalar& s, const Matrix& x);
  friend bool operator==(const Matrix& x, const Matrix& y) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  Vec data_;
};

Matrix commutator(const Matrix& x, const Matrix& y);

struct SignatureReport {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;
  int signature() const { return n_plus - n_minus; }
  friend bool operator==(const SignatureReport&,
                         const SignatureReport&) = default;
};

/// Sylvester signature of a real symmetric matrix by congruence
/// elimination. Throws LinalgError on non-real or non-symmetric input.
SignatureReport signature(const Matrix& m);

/// Incremental reduced row echelon form. Rows are inserted one at a time
/// and kept fully reduced against each other.
class Echelon {
 public:
  explicit Echelon(int cols) : cols_(cols) {}

  /// Reduces v in place against the current pivots.
  void reduce(Vec& v) const;
  /// Returns true when v was independent and has been added.
  bool insert(Vec v);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Nullspace basis of the inserted rows, one vector per free column in
  /// increasing column order.
  std::vector<Vec> kernel() const;
  std::vector<int> free_columns() const;

 private:
  int cols_;
  std::vector<Vec> rows_;    // pivot entry normalized to 1
  std::vector<int> pivots_;  // parallel to rows_
};

/// Nullspace of a sparse homogeneous system. Columns are partitioned into
/// connected components of the row/column incidence graph and each block
/// is eliminated separately; the result equals the global RREF kernel.
std::vector<Vec> nullspace(const std::vector<SparseVec>& rows, int cols);
std::vector<Vec> nullspace(const Matrix& m);

int rank(const std::vector<Vec>& vectors);
int rank(const Matrix& m);

/// Inverse of a square matrix; throws LinalgError when singular.
Matrix inverse(const Matrix& m);

/// Coordinates with respect to a fixed list of independent vectors.
///
/// Picks pivot coordinates where the basis restricted is invertible; each
/// query reads the pivots, multiplies by the cached inverse and verifies the
/// reconstruction, so non-members are detected exactly.
class CoordinateSolver {
 public:
  CoordinateSolver() = default;
  /// Throws LinalgError if the vectors are dependent.
  explicit CoordinateSolver(std::vector<Vec> basis);

  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient() const { return ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }

  std::optional<Vec> coordinates(std::span<const Scalar> v) const;
  /// Like coordinates() but throws LinalgError for non-members.
  Vec solve(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const {
    return coordinates(v).has_value();
  }
  Vec combine(std::span<const Scalar> coords) const;

 private:
  int ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<int> pivot_coords_;
  Matrix inv_;  // dim x dim
};

}  // namespace satake

#endif  // SATAKE_LINALG_HPP
