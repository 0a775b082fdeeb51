#include "satake/eii.hpp"

namespace satake {

Matrix psi_matrix(const MagicSquareAlgebra& g, int i) {
  if (g.s_prime().dim != 2) throw RootError("Psi needs a two-dimensional S'");
  const int n = g.lie.dim();
  Matrix m(n, n);
  for (int b = 0; b < n; ++b) {
    const BasisTag& tag = g.tags[b];
    if (tag.kind != Component::Iota) {
      m(b, b) = 1;
    } else if (tag.block == i) {
      m(b, b) = -1;
    } else {
      const int target = g.iota_index(tag.block, tag.x, (tag.xp + 1) % 2);
      m(target, b) = tag.xp == 0 ? -1 : 1;
    }
  }
  return m;
}

Matrix psi_automorphism(const MagicSquareAlgebra& g, int i) {
  Matrix m = psi_matrix(g, i);
  CheckReport rep = check_lie_homomorphism(g.lie, g.lie, m);
  if (!rep.passed) {
    throw RootError("Psi" + std::to_string(i) + " is not an automorphism: " +
                    rep.summary());
  }
  return m;
}

EiiAssembly assemble_eii_cartan_decomposition(const MagicSquareAlgebra& g,
                                              const CartanSpec& h) {
  const int n = g.lie.dim();
  EiiAssembly out;
  std::vector<Vec> basis;
  for (int k = 0; k < g.tri_dim(); ++k) basis.push_back(unit_vec(n, k));
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < g.s().dim; ++x) basis.push_back(unit_vec(n, g.iota_index(i, x, 0)));
  }
  out.g0 = restrict_to(g.lie, basis, "g0");

  CartanSpec h0;
  h0.label = "h0";
  for (int j = 0; j < 4; ++j) {
    auto c = out.g0.solver.coordinates(h.h[j]);
    if (!c) throw RootError("h" + std::to_string(j + 1) + " is not in g0");
    h0.h.push_back(*c);
    h0.a_indices.push_back(j);
  }
  out.roots0 = root_decomposition(out.g0.algebra, h0);

  for (int r = 0; r < out.roots0.size(); ++r) {
    for (const auto& v : out.roots0.roots[r].values) {
      const int s = sign(v);
      if (s == 0) continue;
      if (s > 0) out.positive.push_back(r);
      break;
    }
  }

  for (int r : out.positive) {
    Sl2Triple local = sl2_triple(out.g0.algebra, out.roots0, r);
    out.k0.push_back(out.g0.algebra.killing(local.e, local.f));
    Sl2Triple amb{out.g0.solver.combine(local.e), out.g0.solver.combine(local.f),
                  out.g0.solver.combine(local.h)};
    int block = -2;
    for (int k = 0; k < n; ++k) {
      if (amb.e[k].is_zero()) continue;
      const BasisTag& tag = g.tags[k];
      const int b = tag.kind == Component::Iota ? tag.block : -1;
      if (block != -2 && block != b) {
        throw RootError("root vector spans several components");
      }
      block = b;
    }
    out.block.push_back(block);
    out.sl2.push_back(std::move(amb));
  }

  for (int k = 0; k < g.tri_prime_dim(); ++k) {
    out.t.push_back(unit_vec(n, g.tri_dim() + k));
  }
  for (int j = 0; j < 4; ++j) out.p.push_back(h.h[j]);
  for (const auto& s : out.sl2) {
    out.t.push_back(s.e - s.f);
    out.p.push_back(s.e + s.f);
  }
  for (int i = 0; i < 3; ++i) {
    const Matrix psi = psi_automorphism(g, i);
    for (size_t a = 0; a < out.sl2.size(); ++a) {
      if (out.block[a] != (i + 1) % 3) continue;
      const auto& s = out.sl2[a];
      out.t.push_back(psi.apply(s.e - s.f));
      out.p.push_back(psi.apply(s.e + s.f));
    }
  }
  return out;
}

}  // namespace satake
