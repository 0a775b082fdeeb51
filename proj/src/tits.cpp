#include "satake/constructions.hpp"

namespace satake {

RhoMap rho_map(const MagicSquareAlgebra& g) {
  if (g.s_prime().dim != 1 || g.swapped) {
    throw ConstructionError("rho needs g_eps(S, R)");
  }
  RhoMap out;
  out.albert = albert(g.s(), g.eps);
  const AlgebraTable& a = out.albert;
  const int n = g.lie.dim();
  for (int k = 0; k < n; ++k) {
    const BasisTag& tag = g.tags[k];
    Matrix m(a.dim, a.dim);
    if (tag.kind == Component::Tri) {
      for (int i = 0; i < 3; ++i) {
        const Matrix& di = g.tri.basis_component(tag.index, i);
        for (int x = 0; x < 8; ++x) {
          for (int r = 0; r < 8; ++r) m(albert_iota(i, r), albert_iota(i, x)) = di(r, x);
        }
      }
    } else {
      const int i = tag.block;
      Matrix lx = a.left_mult(a.basis(albert_iota(i, tag.x)));
      Matrix le = a.left_mult(a.basis((i + 1) % 3));
      m = 2 * commutator(lx, le);
    }
    out.images.push_back(std::move(m));
  }
  out.der = derivations(a);
  out.matrix = Matrix(out.der.algebra.dim(), n);
  for (int k = 0; k < n; ++k) {
    auto c = out.der.coordinates(out.images[k]);
    if (!c) {
      throw ConstructionError("rho(" + g.lie.labels()[k] +
                              ") is not a derivation");
    }
    for (int r = 0; r < out.der.algebra.dim(); ++r) out.matrix(r, k) = (*c)[r];
  }
  return out;
}

CheckReport check_rho(const MagicSquareAlgebra& g, const RhoMap& rho) {
  CheckReport rep = check_lie_homomorphism(g.lie, rho.der.algebra, rho.matrix);
  rep.check = "rho homomorphism and bijectivity";
  ++rep.checked;
  if (rho.matrix.rows() != rho.matrix.cols() || rank(rho.matrix) != g.lie.dim()) {
    rep.fail("rho is not bijective (rank " + std::to_string(rank(rho.matrix)) + ")");
  }
  return rep;
}

Vec TitsModel::embed_der(const Vec& coords) const {
  Vec v(lie.dim());
  for (int k = 0; k < der_dim(); ++k) v[k] = coords[k];
  return v;
}

Vec TitsModel::embed_a0(const Vec& x) const {
  auto c = CoordinateSolver(a0_basis).coordinates(x);
  if (!c) throw ConstructionError("element is not trace zero");
  Vec v(lie.dim());
  for (size_t k = 0; k < c->size(); ++k) v[der_dim() + k] = (*c)[k];
  return v;
}

TitsModel tits_model(const AlgebraTable& s, const EpsilonTriple& eps) {
  TitsModel t;
  t.f4 = magic_square(s, symmetric_composition("R"), eps);
  RhoMap rho = rho_map(t.f4);
  t.albert = rho.albert;
  t.der_basis = rho.images;
  t.a0_basis = zero_trace_basis(t.albert);
  const AlgebraTable& a = t.albert;
  const int nd = t.der_dim();
  const int na = static_cast<int>(t.a0_basis.size());
  const int n = nd + na;

  std::vector<Vec> flat;
  for (const auto& m : t.der_basis) flat.push_back(m.flatten());
  CoordinateSolver der_solver(std::move(flat));
  CoordinateSolver a0_solver(t.a0_basis);
  std::vector<Matrix> lmul;
  for (const auto& x : t.a0_basis) lmul.push_back(a.left_mult(x));

  std::vector<SparseVec> table(static_cast<size_t>(n) * n);
  auto set = [&](int i, int j, SparseVec v) {
    SparseVec neg = v;
    for (auto& [k, c] : neg) c = -c;
    table[i * n + j] = std::move(v);
    table[j * n + i] = std::move(neg);
  };
  auto der_coords = [&](const Matrix& m, const char* what) {
    auto c = der_solver.coordinates(m.flatten());
    if (!c) throw ConstructionError(std::string("Tits model: ") + what);
    return to_sparse(*c);
  };
  for (int i = 0; i < nd; ++i) {
    for (int j = i + 1; j < nd; ++j) {
      set(i, j, der_coords(commutator(t.der_basis[i], t.der_basis[j]),
                           "Der is not closed"));
    }
    for (int j = 0; j < na; ++j) {
      auto c = a0_solver.coordinates(t.der_basis[i].apply(t.a0_basis[j]));
      if (!c) throw ConstructionError("Tits model: Der does not preserve A0");
      SparseVec v;
      for (const auto& [k, x] : to_sparse(*c)) v.emplace_back(nd + k, x);
      set(i, nd + j, std::move(v));
    }
  }
  for (int i = 0; i < na; ++i) {
    for (int j = i + 1; j < na; ++j) {
      set(nd + i, nd + j, der_coords(commutator(lmul[i], lmul[j]),
                                     "[l_x, l_y] is not a derivation"));
    }
  }
  std::vector<std::string> labels;
  for (int k = 0; k < nd; ++k) labels.push_back("rho(" + t.f4.lie.labels()[k] + ")");
  for (int k = 0; k < na; ++k) labels.push_back("a0_" + std::to_string(k));
  t.lie = LieAlgebra("Der(A)+A0", std::move(labels), std::move(table));
  return t;
}

TitsModel tits_model() {
  return tits_model(symmetric_composition("pO"), EpsilonTriple(1, 1, 1));
}

}  // namespace satake
