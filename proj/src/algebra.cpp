#include "satake/algebra.hpp"

#include <random>
#include <sstream>

namespace satake {

namespace {

constexpr size_t kMaxWitnesses = 10;

std::string vec_str(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + v[i].str() + ")" + labels[i];
  }
  return out.empty() ? "0" : out;
}

const Matrix& require_form(const AlgebraTable& a) {
  if (!a.form) throw AlgebraError(a.name + ": no bilinear form");
  return *a.form;
}

}  // namespace

void CheckReport::fail(std::string witness) {
  passed = false;
  if (violations.size() < kMaxWitnesses) violations.push_back(std::move(witness));
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << check << ": " << (passed ? "pass" : "FAIL") << " (" << checked
     << " cases";
  if (!passed) os << ", first: " << violations.front();
  os << ")";
  return os.str();
}

AlgebraTable::AlgebraTable(std::string name_, std::vector<std::string> labels_)
    : name(std::move(name_)),
      dim(static_cast<int>(labels_.size())),
      labels(std::move(labels_)),
      products(static_cast<size_t>(dim) * dim) {}

void AlgebraTable::set_product(int i, int j, const Vec& value) {
  products[i * dim + j] = to_sparse(value);
}

void AlgebraTable::set_product(int i, int j, SparseVec value) {
  products[i * dim + j] = std::move(value);
}

int AlgebraTable::index_of(std::string_view label) const {
  for (int i = 0; i < dim; ++i) {
    if (labels[i] == label) return i;
  }
  throw AlgebraError(name + ": no basis label '" + std::string(label) + "'");
}

Vec AlgebraTable::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const auto& p = product(i, j);
      if (p.empty()) continue;
      axpy(out, x[i] * y[j], p);
    }
  }
  return out;
}

SparseVec AlgebraTable::multiply(const SparseVec& x, const SparseVec& y) const {
  Vec out(dim);
  bool any = false;
  for (const auto& [i, xi] : x) {
    for (const auto& [j, yj] : y) {
      const auto& p = product(i, j);
      if (p.empty()) continue;
      axpy(out, xi * yj, p);
      any = true;
    }
  }
  return any ? to_sparse(out) : SparseVec{};
}

Scalar AlgebraTable::bilinear(const Vec& x, const Vec& y) const {
  const Matrix& q = require_form(*this);
  Scalar s;
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero() || q(i, j).is_zero()) continue;
      s += x[i] * q(i, j) * y[j];
    }
  }
  return s;
}

Scalar AlgebraTable::norm(const Vec& x) const {
  return bilinear(x, x) / 2;
}

Vec AlgebraTable::bar(const Vec& x) const {
  if (!involution) throw AlgebraError(name + ": no involution");
  return involution->apply(x);
}

Matrix AlgebraTable::left_mult(const Vec& x) const {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col = multiply(x, basis(j));
    for (int i = 0; i < dim; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix AlgebraTable::right_mult(const Vec& x) const {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col = multiply(basis(j), x);
    for (int i = 0; i < dim; ++i) m(i, j) = col[i];
  }
  return m;
}

EpsilonTriple::EpsilonTriple(int e0, int e1, int e2) : e_{e0, e1, e2} {
  for (int e : e_) {
    if (e != 1 && e != -1) {
      throw AlgebraError("epsilon entries must be +1 or -1");
    }
  }
}

EpsilonTriple EpsilonTriple::parse(std::string_view text) {
  std::array<int, 3> v{};
  int k = 0;
  std::string cur;
  auto flush = [&] {
    if (k >= 3) throw AlgebraError("epsilon needs three entries");
    try {
      size_t used = 0;
      v[k++] = std::stoi(cur, &used);
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::exception&) {
      throw AlgebraError("bad epsilon entry '" + cur + "'");
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (c != ' ' && c != '(' && c != ')') {
      cur += c;
    }
  }
  flush();
  if (k != 3) throw AlgebraError("epsilon needs three entries");
  return EpsilonTriple(v[0], v[1], v[2]);
}

std::string EpsilonTriple::str() const {
  return std::to_string(e_[0]) + "," + std::to_string(e_[1]) + "," +
         std::to_string(e_[2]);
}

AlgebraTable cayley_dickson(const AlgebraTable& a, const Scalar& alpha,
                            const std::string& new_label) {
  if (!a.involution || !a.unit || !a.form) {
    throw AlgebraError("Cayley-Dickson needs a unital algebra with form and "
                       "involution: " + a.name);
  }
  if (alpha.is_zero()) throw AlgebraError("Cayley-Dickson with alpha = 0");
  const int n = a.dim;
  std::vector<std::string> labels = a.labels;
  for (const auto& l : a.labels) {
    labels.push_back(l == "1" ? new_label : l + new_label);
  }
  AlgebraTable out("CD(" + a.name + "," + alpha.str() + ")", labels);
  const Matrix& inv = *a.involution;
  auto shifted = [n](const Vec& v) {
    SparseVec s;
    for (int k = 0; k < n; ++k) {
      if (!v[k].is_zero()) s.emplace_back(k + n, v[k]);
    }
    return s;
  };
  for (int i = 0; i < n; ++i) {
    Vec ei = a.basis(i);
    Vec bi = inv.column(i);
    for (int j = 0; j < n; ++j) {
      Vec ej = a.basis(j);
      Vec bj = inv.column(j);
      // (a,b)(c,d) = (ac + alpha bar(d) b, da + b bar(c))
      out.set_product(i, j, a.multiply(ei, ej));
      out.set_product(i, n + j, shifted(a.multiply(ej, ei)));
      out.set_product(n + i, j, shifted(a.multiply(ei, bj)));
      out.set_product(n + i, n + j, alpha * a.multiply(bj, ei));
    }
  }
  Matrix form(2 * n, 2 * n);
  Matrix invol(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      form(i, j) = (*a.form)(i, j);
      form(n + i, n + j) = -alpha * (*a.form)(i, j);
      invol(i, j) = inv(i, j);
      invol(n + i, n + j) = -Scalar(i == j ? 1 : 0);
    }
  }
  out.form = form;
  out.involution = invol;
  Vec unit(2 * n);
  for (int i = 0; i < n; ++i) unit[i] = (*a.unit)[i];
  out.unit = unit;
  return out;
}

namespace {

AlgebraTable reals() {
  AlgebraTable r("R", {"1"});
  r.set_product(0, 0, Vec{1});
  Matrix f(1, 1);
  f(0, 0) = 2;
  r.form = f;
  r.unit = Vec{1};
  r.involution = Matrix::identity(1);
  return r;
}

AlgebraTable split_octonions() {
  AlgebraTable o("Os", {"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"});
  const int e1 = 0, e2 = 1;
  auto u = [](int i) { return 2 + ((i % 3) + 3) % 3; };
  auto v = [](int i) { return 5 + ((i % 3) + 3) % 3; };
  auto put = [&](int x, int y, int z, int s) {
    o.set_product(x, y, SparseVec{{z, Scalar(s)}});
  };
  put(e1, e1, e1, 1);
  put(e2, e2, e2, 1);
  for (int i = 0; i < 3; ++i) {
    put(e1, u(i), u(i), 1);
    put(u(i), e2, u(i), 1);
    put(e2, v(i), v(i), 1);
    put(v(i), e1, v(i), 1);
    put(u(i), v(i), e1, -1);
    put(v(i), u(i), e2, -1);
    put(u(i), u(i + 1), v(i + 2), 1);
    put(u(i + 1), u(i), v(i + 2), -1);
    put(v(i), v(i + 1), u(i + 2), 1);
    put(v(i + 1), v(i), u(i + 2), -1);
  }
  Matrix f(8, 8);
  f(e1, e2) = f(e2, e1) = 1;
  for (int i = 0; i < 3; ++i) f(u(i), v(i)) = f(v(i), u(i)) = 1;
  o.form = f;
  Vec one(8);
  one[e1] = one[e2] = 1;
  o.unit = one;
  // bar(x) = n(x,1) 1 - x
  Matrix inv(8, 8);
  for (int j = 0; j < 8; ++j) {
    Scalar t = f(j, e1) + f(j, e2);
    for (int i = 0; i < 8; ++i) inv(i, j) = t * one[i];
    inv(j, j) -= 1;
  }
  o.involution = inv;
  return o;
}

}  // namespace

AlgebraTable hurwitz(HurwitzKind kind) {
  AlgebraTable out;
  switch (kind) {
    case HurwitzKind::R:
      return reals();
    case HurwitzKind::RplusR:
      out = cayley_dickson(reals(), 1, "u");
      out.name = "RR";
      return out;
    case HurwitzKind::C:
      out = cayley_dickson(reals(), -1, "i");
      out.name = "C";
      return out;
    case HurwitzKind::Mat2:
      out = cayley_dickson(hurwitz(HurwitzKind::C), 1, "u");
      out.name = "Mat2";
      return out;
    case HurwitzKind::H:
      out = cayley_dickson(hurwitz(HurwitzKind::C), -1, "j");
      out.labels[3] = "k";
      out.name = "H";
      return out;
    case HurwitzKind::O:
      out = cayley_dickson(hurwitz(HurwitzKind::H), -1, "l");
      out.name = "O";
      return out;
    case HurwitzKind::Osplit:
      return split_octonions();
  }
  throw AlgebraError("unknown Hurwitz kind");
}

std::optional<HurwitzKind> hurwitz_kind(std::string_view name) {
  if (name == "R") return HurwitzKind::R;
  if (name == "RR" || name == "RplusR") return HurwitzKind::RplusR;
  if (name == "C") return HurwitzKind::C;
  if (name == "Mat2") return HurwitzKind::Mat2;
  if (name == "H") return HurwitzKind::H;
  if (name == "O") return HurwitzKind::O;
  if (name == "Os" || name == "Osplit") return HurwitzKind::Osplit;
  return std::nullopt;
}

std::vector<HurwitzKind> all_hurwitz_kinds() {
  return {HurwitzKind::R,    HurwitzKind::RplusR, HurwitzKind::C,
          HurwitzKind::Mat2, HurwitzKind::H,      HurwitzKind::O,
          HurwitzKind::Osplit};
}

AlgebraTable para(const AlgebraTable& a) {
  if (!a.involution) throw AlgebraError("para needs an involution: " + a.name);
  AlgebraTable out(a.name == "R" ? "R" : "p" + a.name, a.labels);
  for (int i = 0; i < a.dim; ++i) {
    Vec bi = a.involution->column(i);
    for (int j = 0; j < a.dim; ++j) {
      out.set_product(i, j, a.multiply(bi, a.involution->column(j)));
    }
  }
  out.form = a.form;
  if (a.dim == 1) {
    out.unit = a.unit;
    out.involution = a.involution;
  }
  return out;
}

AlgebraTable symmetric_composition(std::string_view name) {
  if (name == "R" || name == "pR") return para(hurwitz(HurwitzKind::R));
  if (name == "Ok") return okubo(false);
  if (name == "Oks") return okubo(true);
  if (name.size() > 1 && name.front() == 'p') {
    if (auto k = hurwitz_kind(name.substr(1))) return para(hurwitz(*k));
  }
  throw AlgebraError("unknown symmetric composition algebra '" +
                     std::string(name) + "'");
}

std::vector<std::string> symmetric_composition_names() {
  return {"R", "pRR", "pC", "pMat2", "pH", "pO", "pOs", "Ok", "Oks"};
}

CheckReport check_composition(const AlgebraTable& a) {
  CheckReport rep{"composition"};
  const Matrix& q = require_form(a);
  const int n = a.dim;
  std::vector<Vec> prod(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) prod[i * n + j] = to_dense(a.product(i, j), n);
  }
  // g[(x,y),(z,w)] = q(xy, zw)
  Matrix g(n * n, n * n);
  for (int p = 0; p < n * n; ++p) {
    for (int r = p; r < n * n; ++r) {
      g(p, r) = g(r, p) = a.bilinear(prod[p], prod[r]);
    }
  }
  for (int x = 0; x < n; ++x) {
    const Scalar nx = q(x, x) / 2;
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        ++rep.checked;
        if (!(g(x * n + y, x * n + z) == nx * q(y, z))) {
          rep.fail("n(xy,xz) != n(x)n(y,z) at (" + a.labels[x] + "," +
                   a.labels[y] + "," + a.labels[z] + ")");
        }
        for (int w = 0; w < n; ++w) {
          ++rep.checked;
          if (!(g(x * n + y, z * n + w) + g(z * n + y, x * n + w) ==
                q(x, z) * q(y, w))) {
            rep.fail("n(xy,zw) + n(zy,xw) != n(x,z)n(y,w) at (" +
                     a.labels[x] + "," + a.labels[y] + "," + a.labels[z] +
                     "," + a.labels[w] + ")");
          }
        }
      }
    }
  }
  return rep;
}

CheckReport check_symmetric(const AlgebraTable& a) {
  CheckReport rep{"symmetric composition"};
  require_form(a);
  const int n = a.dim;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      Vec xy = to_dense(a.product(x, y), n);
      for (int z = 0; z < n; ++z) {
        ++rep.checked;
        Vec yz = to_dense(a.product(y, z), n);
        if (!(a.bilinear(xy, a.basis(z)) == a.bilinear(a.basis(x), yz))) {
          rep.fail("n(x*y,z) != n(x,y*z) at (" + a.labels[x] + "," +
                   a.labels[y] + "," + a.labels[z] + ")");
        }
      }
    }
  }
  return rep;
}

CheckReport check_unit(const AlgebraTable& a) {
  CheckReport rep{"unit"};
  if (!a.unit) {
    rep.fail("no unit");
    return rep;
  }
  for (int i = 0; i < a.dim; ++i) {
    ++rep.checked;
    Vec e = a.basis(i);
    if (!(a.multiply(*a.unit, e) == e) || !(a.multiply(e, *a.unit) == e)) {
      rep.fail("1 x != x or x 1 != x at " + a.labels[i]);
    }
  }
  return rep;
}

CheckReport check_quadratic_equation(const AlgebraTable& a) {
  CheckReport rep{"quadratic equation"};
  if (!a.unit) throw AlgebraError(a.name + ": no unit");
  for (int i = 0; i < a.dim; ++i) {
    ++rep.checked;
    Vec x = a.basis(i);
    Scalar t = a.bilinear(x, *a.unit);
    Vec r = a.multiply(x, x) - t * x + a.norm(x) * *a.unit;
    if (!is_zero(r)) {
      rep.fail("x^2 - t(x)x + n(x)1 = " + vec_str(r, a.labels) + " at " +
               a.labels[i]);
    }
  }
  return rep;
}

CheckReport check_commutative(const AlgebraTable& a) {
  CheckReport rep{"commutative"};
  for (int i = 0; i < a.dim; ++i) {
    for (int j = i + 1; j < a.dim; ++j) {
      ++rep.checked;
      if (!(a.product(i, j) == a.product(j, i))) {
        rep.fail("xy != yx at (" + a.labels[i] + "," + a.labels[j] + ")");
      }
    }
  }
  return rep;
}

CheckReport check_jordan_sampled(const AlgebraTable& a, int trials,
                                 std::uint64_t seed) {
  CheckReport rep{"Jordan identity (sampled, seed " + std::to_string(seed) +
                  ")"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  auto random_vec = [&] {
    Vec v(a.dim);
    for (auto& c : v) c = Scalar::rational(num(rng), den(rng));
    return v;
  };
  for (int t = 0; t < trials; ++t) {
    ++rep.checked;
    Vec x = random_vec();
    Vec y = random_vec();
    Vec x2 = a.multiply(x, x);
    Vec lhs = a.multiply(a.multiply(x2, y), x);
    Vec rhs = a.multiply(x2, a.multiply(y, x));
    if (!(lhs == rhs)) rep.fail("trial " + std::to_string(t));
  }
  return rep;
}

CheckReport check_jordan_exhaustive(const AlgebraTable& a) {
  CheckReport rep{"Jordan identity (linearized, exhaustive)"};
  const int n = a.dim;
  std::vector<SparseVec> e(n);
  for (int i = 0; i < n; ++i) e[i] = SparseVec{{i, Scalar(1)}};
  auto mul = [&](const SparseVec& x, const SparseVec& y) {
    return a.multiply(x, y);
  };
  // Sum over the three ways of splitting {p, q, r} into a pair and a single
  // of ((x_p x_q) y) x_r - (x_p x_q)(y x_r).
  for (int p = 0; p < n; ++p) {
    for (int q = p; q < n; ++q) {
      for (int r = q; r < n; ++r) {
        const std::array<std::array<int, 3>, 3> splits{
            {{p, q, r}, {q, r, p}, {r, p, q}}};
        for (int y = 0; y < n; ++y) {
          ++rep.checked;
          Vec acc(n);
          for (const auto& [s0, s1, s2] : splits) {
            SparseVec pq = mul(e[s0], e[s1]);
            if (pq.empty()) continue;
            axpy(acc, 1, mul(mul(pq, e[y]), e[s2]));
            axpy(acc, -1, mul(pq, mul(e[y], e[s2])));
          }
          if (!is_zero(acc)) {
            rep.fail("at (" + a.labels[p] + "," + a.labels[q] + "," +
                     a.labels[r] + "; " + a.labels[y] + ")");
          }
        }
      }
    }
  }
  return rep;
}

bool norm_is_definite(const AlgebraTable& a) {
  SignatureReport s = signature(require_form(a));
  return s.n_zero == 0 && (s.n_plus == 0 || s.n_minus == 0);
}

std::vector<Vec> commutative_center(const AlgebraTable& a) {
  const int n = a.dim;
  std::vector<SparseVec> rows;
  for (int x = 0; x < n; ++x) {
    // sum_i c_i (e_i e_x - e_x e_i) = 0, one row per output coordinate
    std::vector<Vec> cols(n, Vec(n));
    for (int i = 0; i < n; ++i) {
      cols[i] = to_dense(a.product(i, x), n) - to_dense(a.product(x, i), n);
    }
    for (int k = 0; k < n; ++k) {
      Vec row(n);
      for (int i = 0; i < n; ++i) row[i] = cols[i][k];
      if (!is_zero(row)) rows.push_back(to_sparse(row));
    }
  }
  return nullspace(rows, n);
}

}  // namespace satake
