#include "satake/models.hpp"

#include "satake/eii.hpp"

namespace satake {

namespace {

Scalar q(long num, long den = 1) { return Scalar::rational(num, den); }
Scalar qi(long num, long den = 1) { return Scalar::imag() * q(num, den); }

const MagicSquareAlgebra& magic_of(const Model& m) {
  if (!m.magic) throw ModelError(m.info.name + " is not a magic square model");
  return *m.magic;
}

void expect(const Model& m, const std::string& s, const std::string& sp,
            const EpsilonTriple& eps) {
  const MagicSquareAlgebra& g = magic_of(m);
  if (g.swapped || g.s().name != s || g.s_prime().name != sp || !(g.eps == eps)) {
    throw ModelError("Cartan preset expects g(" + eps.str() + ")(" + s + "," +
                     sp + "), got " + m.lie.name());
  }
}

CartanSpec cartan_e6m26(const Model& m) {
  if (!m.tits) throw ModelError("e6m26 preset needs the Tits model");
  const TitsModel& t = *m.tits;
  const AlgebraTable& s = t.f4.s();
  CartanSpec h;
  for (int k = 0; k < 4; ++k) {
    h.h.push_back(t.embed_der(q(1, 2) * t.f4.t(s.basis(2 * k), s.basis(2 * k + 1))));
  }
  const AlgebraTable& a = t.albert;
  h.h.push_back(t.embed_a0(a.basis(2) - a.basis(0)));
  h.h.push_back(t.embed_a0(a.basis(0) - a.basis(1)));
  h.a_indices = {4, 5};
  h.t_indices = {0, 1, 2, 3};
  return h;
}

CartanSpec cartan_e6m14(const Model& m) {
  expect(m, "pO", "pC", EpsilonTriple(1, -1, 1));
  const MagicSquareAlgebra& g = *m.magic;
  const AlgebraTable& s = g.s();
  const AlgebraTable& sp = g.s_prime();
  CartanSpec h;
  for (int k = 1; k <= 3; ++k) {
    h.h.push_back(q(1, 2) * g.t(s.basis(2 * k), s.basis(2 * k + 1)));
  }
  const Matrix sig = sigma(sp, sp.basis(0), sp.basis(1));
  const Matrix zero(sp.dim, sp.dim);
  h.h.push_back(q(1, 4) * g.embed_tri_prime(g.tri_prime.solve({zero, sig, q(-1) * sig})));
  h.h.push_back(q(1, 2) * g.iota(0, s.basis(0), sp.basis(1)));
  h.h.push_back(q(1, 2) * g.iota(0, s.basis(1), sp.basis(0)));
  h.a_indices = {4, 5};
  h.t_indices = {0, 1, 2, 3};
  return h;
}

CartanSpec cartan_e6p2(const Model& m) {
  expect(m, "pOs", "pC", EpsilonTriple(1, 1, 1));
  const MagicSquareAlgebra& g = *m.magic;
  const AlgebraTable& s = g.s();
  const AlgebraTable& sp = g.s_prime();
  auto e = [&](const char* label) { return s.basis(s.index_of(label)); };
  CartanSpec h;
  h.h.push_back(g.t(e("e1"), e("e2")));
  h.h.push_back(g.t(e("u1"), e("v1")));
  h.h.push_back(g.t(e("u2"), e("v2")));
  h.h.push_back(g.t(e("u3"), e("v3")));
  const Matrix sig = sigma(sp, sp.basis(0), sp.basis(1));
  const Matrix two = q(-2) * sig;
  h.h.push_back(q(1, 4) * g.embed_tri_prime(g.tri_prime.solve({sig, sig, two})));
  h.h.push_back(q(1, 4) * g.embed_tri_prime(g.tri_prime.solve({sig, two, sig})));
  h.a_indices = {0, 1, 2, 3};
  h.t_indices = {4, 5};
  return h;
}

std::vector<Vec> unit_block(int n, int from, int count) {
  std::vector<Vec> out;
  for (int k = 0; k < count; ++k) out.push_back(unit_vec(n, from + k));
  return out;
}

}  // namespace

const std::vector<ModelInfo>& model_catalog() {
  static const std::vector<ModelInfo> catalog = {
      {"e6m78", "e6(-78)", "pO", "pC", EpsilonTriple(1, 1, 1), false, 78, -78},
      {"e6m26", "e6(-26)", "pO", "R", EpsilonTriple(1, 1, 1), true, 78, -26},
      {"e6m14", "e6(-14)", "pO", "pC", EpsilonTriple(1, -1, 1), false, 78, -14},
      {"e6p2", "e6(2)", "pOs", "pC", EpsilonTriple(1, 1, 1), false, 78, 2},
      {"e6p6", "e6(6)", "pOs", "pRR", EpsilonTriple(1, 1, 1), false, 78, 6},
      {"f4m52", "f4(-52)", "pO", "R", EpsilonTriple(1, 1, 1), false, 52, -52},
      {"f4m20", "f4(-20)", "pO", "R", EpsilonTriple(1, -1, 1), false, 52, -20},
      {"f4p4", "f4(4)", "pOs", "R", EpsilonTriple(1, 1, 1), false, 52, 4},
  };
  return catalog;
}

const ModelInfo& model_info(const std::string& name) {
  for (const auto& m : model_catalog()) {
    if (m.name == name) return m;
  }
  throw ModelError("unknown model: " + name);
}

Model build_model(const std::string& name) {
  const ModelInfo& info = model_info(name);
  Model m;
  if (info.tits) {
    m.tits = tits_model(symmetric_composition(info.s), info.eps);
    m.lie = m.tits->lie;
  } else {
    m = build_magic_model(info.s, info.s_prime, info.eps);
  }
  m.info = info;
  return m;
}

Model build_magic_model(const std::string& s, const std::string& s_prime,
                        const EpsilonTriple& eps) {
  Model m;
  m.magic = magic_square(symmetric_composition(s), symmetric_composition(s_prime), eps);
  m.lie = m.magic->lie;
  m.info.name = m.lie.name();
  m.info.s = s;
  m.info.s_prime = s_prime;
  m.info.eps = eps;
  m.info.dim = m.lie.dim();
  return m;
}

const std::vector<std::string>& satake_models() {
  static const std::vector<std::string> names = {"e6m26", "e6m14", "e6p2"};
  return names;
}

bool has_cartan_preset(const std::string& name) {
  for (const auto& n : satake_models()) {
    if (n == name) return true;
  }
  return false;
}

CartanSpec preset_cartan(const Model& m) {
  CartanSpec h;
  if (m.info.name == "e6m26") {
    h = cartan_e6m26(m);
  } else if (m.info.name == "e6m14") {
    h = cartan_e6m14(m);
  } else if (m.info.name == "e6p2") {
    h = cartan_e6p2(m);
  } else {
    throw ModelError("no Cartan preset for " + m.info.name);
  }
  h.label = m.info.name;
  for (int i = 0; i < h.rank(); ++i) {
    for (int j = i + 1; j < h.rank(); ++j) {
      if (!is_zero(m.lie.bracket(h.h[i], h.h[j]))) {
        throw ModelError(m.info.name + ": preset h" + std::to_string(i + 1) +
                         ", h" + std::to_string(j + 1) + " do not commute");
      }
    }
  }
  return h;
}

std::vector<Vec> paper_basis_literal(const std::string& name) {
  if (name == "e6m26") {
    return {
        {qi(1, 2), qi(-1, 2), qi(-1, 2), qi(-1, 2), q(1, 2), q(-1)},
        {qi(1), qi(1), 0, 0, 0, 0},
        {qi(-1), qi(1), 0, 0, 0, 0},
        {0, qi(-1), qi(1), 0, 0, 0},
        {0, 0, qi(-1), qi(1), 0, 0},
        {0, 0, 0, qi(-1), q(1, 2), q(1, 2)},
    };
  }
  if (name == "e6m14") {
    return {
        {qi(-1, 2), qi(-1, 2), qi(-1, 2), qi(-1, 2), q(-1, 2), q(1, 2)},
        {qi(-1), 0, 0, 0, q(1), 0},
        {0, qi(1), qi(1), 0, 0, 0},
        {qi(1), qi(-1), 0, 0, 0, 0},
        {0, qi(1), qi(-1), 0, 0, 0},
        {qi(-1, 2), qi(-1, 2), qi(1, 2), qi(1, 2), q(-1, 2), q(1, 2)},
    };
  }
  if (name == "e6p2") {
    return {
        {q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2), qi(1), qi(-1, 2)},
        {0, q(1), q(-1), 0, 0, 0},
        {0, 0, 0, q(1), qi(-1, 2), qi(-1, 2)},
        {0, 0, q(1), q(-1), 0, 0},
        {0, 0, 0, q(1), qi(1, 2), qi(1, 2)},
        {q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2), qi(-1), qi(1, 2)},
    };
  }
  throw ModelError("no preset basis for " + name);
}

std::vector<Vec> preset_basis(const std::string& name) {
  std::vector<Vec> b = paper_basis_literal(name);
  const int flip = name == "e6m26" ? 3 : name == "e6m14" ? 2 : -1;
  if (flip >= 0) {
    for (auto& v : b) v[flip] = -v[flip];
  }
  return b;
}

DecompositionBases preset_cartan_decomposition(const Model& m,
                                               const CartanSpec& h) {
  const int n = m.lie.dim();
  DecompositionBases out;
  if (m.info.name == "e6m26") {
    const int nd = m.tits->der_dim();
    out.t = unit_block(n, 0, nd);
    out.p = unit_block(n, nd, n - nd);
  } else if (m.info.name == "e6m14") {
    const MagicSquareAlgebra& g = magic_of(m);
    const int block = g.s().dim * g.s_prime().dim;
    out.t = unit_block(n, 0, g.iota_offset(0));
    for (auto& v : unit_block(n, g.iota_offset(1), block)) out.t.push_back(v);
    out.p = unit_block(n, g.iota_offset(0), block);
    for (auto& v : unit_block(n, g.iota_offset(2), block)) out.p.push_back(v);
  } else if (m.info.name == "e6p2") {
    EiiAssembly a = assemble_eii_cartan_decomposition(magic_of(m), h);
    out.t = std::move(a.t);
    out.p = std::move(a.p);
  } else {
    throw ModelError("no Cartan decomposition preset for " + m.info.name);
  }
  return out;
}

}  // namespace satake
