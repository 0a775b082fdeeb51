#include <array>

#include "satake/algebra.hpp"

namespace satake {

namespace {

using M3 = std::array<Scalar, 9>;

M3 mul(const M3& x, const M3& y) {
  M3 z;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      for (int k = 0; k < 3; ++k) z[3 * r + c].add_product(x[3 * r + k], y[3 * k + c]);
    }
  }
  return z;
}

Scalar trace(const M3& x) { return x[0] + x[4] + x[8]; }

M3 elem(std::initializer_list<std::tuple<int, int, Scalar>> entries) {
  M3 m;
  for (const auto& [r, c, v] : entries) m[3 * r + c] = v;
  return m;
}

std::vector<M3> compact_basis() {
  const Scalar i = Scalar::imag();
  return {
      elem({{0, 0, i}, {1, 1, -i}}),
      elem({{1, 1, i}, {2, 2, -i}}),
      elem({{0, 1, 1}, {1, 0, -1}}),
      elem({{0, 1, i}, {1, 0, i}}),
      elem({{0, 2, 1}, {2, 0, -1}}),
      elem({{0, 2, i}, {2, 0, i}}),
      elem({{1, 2, 1}, {2, 1, -1}}),
      elem({{1, 2, i}, {2, 1, i}}),
  };
}

// Antihermitian for x* = p conj(x)^t p with p swapping the last two indices.
std::vector<M3> split_basis() {
  const Scalar i = Scalar::imag();
  return {
      elem({{1, 1, 1}, {2, 2, -1}}),
      elem({{0, 0, -2 * i}, {1, 1, i}, {2, 2, i}}),
      elem({{0, 1, 1}, {2, 0, -1}}),
      elem({{0, 1, i}, {2, 0, i}}),
      elem({{0, 2, 1}, {1, 0, -1}}),
      elem({{0, 2, i}, {1, 0, i}}),
      elem({{1, 2, i}}),
      elem({{2, 1, i}}),
  };
}

}  // namespace

AlgebraTable okubo(bool split) {
  const std::vector<M3> basis = split ? split_basis() : compact_basis();
  std::vector<std::string> labels =
      split ? std::vector<std::string>{"h1", "h2", "a1", "b1", "a2", "b2",
                                       "c1", "c2"}
            : std::vector<std::string>{"h1", "h2", "x01", "y01", "x02", "y02",
                                       "x12", "y12"};
  AlgebraTable out(split ? "Oks" : "Ok", labels);
  std::vector<Vec> flat;
  for (const auto& m : basis) flat.emplace_back(m.begin(), m.end());
  CoordinateSolver solver(flat);

  const Scalar w = Scalar::omega();
  const Scalar w2 = w * w;
  const Scalar c = (w - w2) / 3;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      M3 xy = mul(basis[a], basis[b]);
      M3 yx = mul(basis[b], basis[a]);
      Scalar t = trace(xy);
      Vec prod(9);
      for (int k = 0; k < 9; ++k) prod[k] = w * xy[k] - w2 * yx[k];
      for (int d = 0; d < 3; ++d) prod[4 * d] -= c * t;
      auto coords = solver.coordinates(prod);
      if (!coords) throw AlgebraError("Okubo product left the algebra");
      for (const auto& s : *coords) {
        if (!s.is_real()) throw AlgebraError("Okubo product is not real");
      }
      out.set_product(a, b, *coords);
    }
  }
  Matrix form(8, 8);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      Scalar t = -trace(mul(basis[a], basis[b]));
      if (!t.is_real()) throw AlgebraError("Okubo norm is not real");
      form(a, b) = t;
    }
  }
  out.form = form;
  return out;
}

}  // namespace satake
