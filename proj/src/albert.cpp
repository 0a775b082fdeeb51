#include "satake/algebra.hpp"

namespace satake {

namespace {

std::vector<std::string> albert_labels(const std::vector<std::string>& s) {
  std::vector<std::string> labels{"E0", "E1", "E2"};
  for (int i = 0; i < 3; ++i) {
    for (const auto& l : s) labels.push_back("i" + std::to_string(i) + "(" + l + ")");
  }
  return labels;
}

// 3x3 matrices with octonion entries, each entry a coordinate vector.
using OctMatrix = std::array<Vec, 9>;

const int kSlotRow[3] = {1, 2, 0};
const int kSlotCol[3] = {2, 0, 1};

OctMatrix zero_oct_matrix() {
  OctMatrix m;
  for (auto& e : m) e = Vec(8);
  return m;
}

OctMatrix oct_mul(const AlgebraTable& o, const OctMatrix& x,
                  const OctMatrix& y) {
  OctMatrix z = zero_oct_matrix();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      for (int k = 0; k < 3; ++k) {
        if (is_zero(x[3 * r + k]) || is_zero(y[3 * k + c])) continue;
        z[3 * r + c] = z[3 * r + c] + o.multiply(x[3 * r + k], y[3 * k + c]);
      }
    }
  }
  return z;
}

}  // namespace

AlgebraTable albert(const AlgebraTable& s, const EpsilonTriple& eps) {
  if (s.dim != 8) {
    throw AlgebraError("Albert algebra needs an 8-dimensional S, got " +
                       std::to_string(s.dim));
  }
  if (!s.form) throw AlgebraError("Albert algebra needs a normed S");
  AlgebraTable a("A" + std::string("(") + eps.str() + ")(" + s.name + ")",
                 albert_labels(s.labels));
  auto half = Scalar::rational(1, 2);
  for (int i = 0; i < 3; ++i) a.set_product(i, i, SparseVec{{i, Scalar(1)}});
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      // E_j iota_i(x) = 1/2 (delta_{j,i+1} + delta_{j,i+2}) iota_i(x)
      if (j == i) continue;
      for (int k = 0; k < 8; ++k) {
        SparseVec v{{albert_iota(i, k), half}};
        a.set_product(j, albert_iota(i, k), v);
        a.set_product(albert_iota(i, k), j, v);
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    for (int x = 0; x < 8; ++x) {
      for (int y = 0; y < 8; ++y) {
        SparseVec xy;
        for (const auto& [k, c] : s.product(x, y)) {
          xy.emplace_back(albert_iota(i2, k), eps[i2] * c);
        }
        a.set_product(albert_iota(i, x), albert_iota(i1, y), xy);
        a.set_product(albert_iota(i1, y), albert_iota(i, x), xy);
        const Scalar q = (*s.form)(x, y);
        if (!q.is_zero()) {
          Scalar c = 2 * eps[i1] * eps[i2] * q;
          SparseVec v{{std::min(i1, i2), c}, {std::max(i1, i2), c}};
          a.set_product(albert_iota(i, x), albert_iota(i, y), v);
        }
      }
    }
  }
  Vec unit(27);
  unit[0] = unit[1] = unit[2] = 1;
  a.unit = unit;
  a.trace = unit;
  return a;
}

std::vector<Vec> zero_trace_basis(const AlgebraTable& a) {
  if (!a.trace) throw AlgebraError(a.name + ": no trace functional");
  return nullspace(std::vector<SparseVec>{to_sparse(*a.trace)}, a.dim);
}

AlgebraTable h3_octonions() {
  const AlgebraTable o = hurwitz(HurwitzKind::O);
  std::vector<std::string> labels{"D0", "D1", "D2"};
  for (int i = 0; i < 3; ++i) {
    for (const auto& l : o.labels) {
      labels.push_back("F" + std::to_string(i) + "(" + l + ")");
    }
  }
  AlgebraTable h("H3(O)", labels);
  std::vector<OctMatrix> basis;
  for (int i = 0; i < 3; ++i) {
    OctMatrix m = zero_oct_matrix();
    m[4 * i][0] = 1;
    basis.push_back(m);
  }
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 8; ++k) {
      OctMatrix m = zero_oct_matrix();
      m[3 * kSlotRow[i] + kSlotCol[i]] = o.basis(k);
      m[3 * kSlotCol[i] + kSlotRow[i]] = o.bar(o.basis(k));
      basis.push_back(m);
    }
  }
  auto coords = [&](const OctMatrix& m) {
    Vec v(27);
    for (int i = 0; i < 3; ++i) {
      const Vec& d = m[4 * i];
      for (int k = 1; k < 8; ++k) {
        if (!d[k].is_zero()) throw AlgebraError("H3(O): non-real diagonal");
      }
      v[i] = d[0];
    }
    for (int i = 0; i < 3; ++i) {
      const Vec& e = m[3 * kSlotRow[i] + kSlotCol[i]];
      if (!(o.bar(e) == m[3 * kSlotCol[i] + kSlotRow[i]])) {
        throw AlgebraError("H3(O): product is not hermitian");
      }
      for (int k = 0; k < 8; ++k) v[3 + 8 * i + k] = e[k];
    }
    return v;
  };
  const auto half = Scalar::rational(1, 2);
  for (int p = 0; p < 27; ++p) {
    for (int q = 0; q < 27; ++q) {
      OctMatrix xy = oct_mul(o, basis[p], basis[q]);
      OctMatrix yx = oct_mul(o, basis[q], basis[p]);
      OctMatrix sym;
      for (int e = 0; e < 9; ++e) sym[e] = half * (xy[e] + yx[e]);
      h.set_product(p, q, coords(sym));
    }
  }
  Vec unit(27);
  unit[0] = unit[1] = unit[2] = 1;
  h.unit = unit;
  h.trace = unit;
  return h;
}

Matrix albert_to_h3(bool conjugate_entries) {
  const AlgebraTable o = hurwitz(HurwitzKind::O);
  Matrix m(27, 27);
  for (int i = 0; i < 3; ++i) m(i, i) = 1;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 8; ++k) {
      Vec entry = o.basis(k);
      if (conjugate_entries) entry = o.bar(entry);
      for (int r = 0; r < 8; ++r) m(albert_iota(i, r), albert_iota(i, k)) = 2 * entry[r];
    }
  }
  return m;
}

CheckReport check_algebra_homomorphism(const AlgebraTable& from,
                                       const AlgebraTable& to,
                                       const Matrix& map) {
  CheckReport rep{"homomorphism " + from.name + " -> " + to.name};
  if (map.rows() != to.dim || map.cols() != from.dim) {
    throw AlgebraError("homomorphism matrix has the wrong shape");
  }
  std::vector<Vec> images(from.dim);
  for (int j = 0; j < from.dim; ++j) images[j] = map.column(j);
  for (int x = 0; x < from.dim; ++x) {
    for (int y = 0; y < from.dim; ++y) {
      ++rep.checked;
      Vec lhs = map.apply(to_dense(from.product(x, y), from.dim));
      Vec rhs = to.multiply(images[x], images[y]);
      if (!(lhs == rhs)) {
        rep.fail("f(xy) != f(x)f(y) at (" + from.labels[x] + "," +
                 from.labels[y] + ")");
      }
    }
  }
  ++rep.checked;
  if (rank(map) != std::min(from.dim, to.dim)) rep.fail("map is not bijective");
  return rep;
}

CheckReport check_albert_matrix_iso() {
  AlgebraTable a = albert(para(hurwitz(HurwitzKind::O)), EpsilonTriple(1, 1, 1));
  CheckReport rep = check_algebra_homomorphism(a, h3_octonions(), albert_to_h3(true));
  rep.check = "Albert algebra A(1,1,1)(pO) ~ H3(O)";
  return rep;
}

}  // namespace satake
