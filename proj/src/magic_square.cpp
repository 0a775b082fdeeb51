#include "satake/constructions.hpp"

namespace satake {

namespace {

void put(std::vector<SparseVec>& table, int n, int a, int b, const Vec& v) {
  table[a * n + b] = to_sparse(v);
}

void put_antisym(std::vector<SparseVec>& table, int n, int a, int b,
                 const Vec& v) {
  table[a * n + b] = to_sparse(v);
  SparseVec neg = table[a * n + b];
  for (auto& [k, c] : neg) c = -c;
  table[b * n + a] = std::move(neg);
}

}  // namespace

Vec MagicSquareAlgebra::embed_tri(const Vec& coords) const {
  Vec v(lie.dim());
  for (int k = 0; k < tri_dim(); ++k) v[k] = coords[k];
  return v;
}

Vec MagicSquareAlgebra::embed_tri_prime(const Vec& coords) const {
  Vec v(lie.dim());
  for (int k = 0; k < tri_prime_dim(); ++k) v[tri_dim() + k] = coords[k];
  return v;
}

Vec MagicSquareAlgebra::iota(int i, const Vec& x, const Vec& xp) const {
  Vec v(lie.dim());
  for (int a = 0; a < s().dim; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < s_prime().dim; ++b) {
      if (!xp[b].is_zero()) v[iota_index(i, a, b)] = x[a] * xp[b];
    }
  }
  return v;
}

Vec MagicSquareAlgebra::t(const Vec& x, const Vec& y) const {
  return embed_tri(t_element(tri, x, y));
}

Vec MagicSquareAlgebra::t_prime(const Vec& x, const Vec& y) const {
  return embed_tri_prime(t_element(tri_prime, x, y));
}

MagicSquareAlgebra magic_square(const AlgebraTable& s_in,
                                const AlgebraTable& sp_in,
                                const EpsilonTriple& eps) {
  const bool swapped = s_in.dim < sp_in.dim;
  const AlgebraTable& s = swapped ? sp_in : s_in;
  const AlgebraTable& sp = swapped ? s_in : sp_in;
  if (s.dim != 8 || (sp.dim != 1 && sp.dim != 2)) {
    throw ConstructionError("magic square supports dimensions (8,1), (8,2), "
                            "(1,8), (2,8); got (" + std::to_string(s_in.dim) +
                            "," + std::to_string(sp_in.dim) + ")");
  }
  if (!s.form || !sp.form) throw ConstructionError("factors need norms");

  MagicSquareAlgebra g;
  g.tri = triality_algebra(s);
  g.tri_prime = triality_algebra(sp);
  g.eps = eps;
  g.swapped = swapped;
  const int n1 = g.tri.dim(), n2 = g.tri_prime.dim();
  const int ds = s.dim, dp = sp.dim;
  const int n = n1 + n2 + 3 * ds * dp;

  std::vector<std::string> labels;
  for (int k = 0; k < n1; ++k) {
    labels.push_back("tri" + std::to_string(k));
    g.tags.push_back({Component::Tri, k});
  }
  for (int k = 0; k < n2; ++k) {
    labels.push_back("tri'" + std::to_string(k));
    g.tags.push_back({Component::TriPrime, k});
  }
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < ds; ++x) {
      for (int xp = 0; xp < dp; ++xp) {
        const std::string& a = swapped ? sp.labels[xp] : s.labels[x];
        const std::string& b = swapped ? s.labels[x] : sp.labels[xp];
        labels.push_back("i" + std::to_string(i) + "(" + a + "|" + b + ")");
        g.tags.push_back({Component::Iota, 0, i, x, xp});
      }
    }
  }

  std::vector<SparseVec> table(static_cast<size_t>(n) * n);
  auto iota_idx = [&](int i, int x, int xp) {
    return n1 + n2 + i * ds * dp + x * dp + xp;
  };

  // tri(S) + tri(S') subalgebra
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < n1; ++b) {
      for (const auto& [k, c] : g.tri.lie().bracket(a, b)) {
        table[a * n + b].emplace_back(k, c);
      }
    }
  }
  for (int a = 0; a < n2; ++a) {
    for (int b = 0; b < n2; ++b) {
      for (const auto& [k, c] : g.tri_prime.lie().bracket(a, b)) {
        table[(n1 + a) * n + n1 + b].emplace_back(n1 + k, c);
      }
    }
  }

  // [d, iota_i(x (x) x')] = iota_i(d_i(x) (x) x')
  for (int k = 0; k < n1; ++k) {
    for (int i = 0; i < 3; ++i) {
      const Matrix& di = g.tri.basis_component(k, i);
      for (int x = 0; x < ds; ++x) {
        for (int xp = 0; xp < dp; ++xp) {
          Vec v(n);
          for (int a = 0; a < ds; ++a) v[iota_idx(i, a, xp)] = di(a, x);
          put_antisym(table, n, k, iota_idx(i, x, xp), v);
        }
      }
    }
  }
  for (int k = 0; k < n2; ++k) {
    for (int i = 0; i < 3; ++i) {
      const Matrix& di = g.tri_prime.basis_component(k, i);
      for (int x = 0; x < ds; ++x) {
        for (int xp = 0; xp < dp; ++xp) {
          Vec v(n);
          for (int b = 0; b < dp; ++b) v[iota_idx(i, x, b)] = di(b, xp);
          put_antisym(table, n, n1 + k, iota_idx(i, x, xp), v);
        }
      }
    }
  }

  // [iota_i(x (x) x'), iota_{i+1}(y (x) y')] = eps_{i+2} iota_{i+2}(x*y (x) x'*y')
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, l = (i + 2) % 3;
    for (int x = 0; x < ds; ++x) {
      for (int y = 0; y < ds; ++y) {
        const SparseVec& xy = s.product(x, y);
        for (int xp = 0; xp < dp; ++xp) {
          for (int yp = 0; yp < dp; ++yp) {
            Vec v(n);
            for (const auto& [a, ca] : xy) {
              for (const auto& [b, cb] : sp.product(xp, yp)) {
                v[iota_idx(l, a, b)] += eps[l] * ca * cb;
              }
            }
            put_antisym(table, n, iota_idx(i, x, xp), iota_idx(j, y, yp), v);
          }
        }
      }
    }
  }

  // [iota_i(x (x) x'), iota_i(y (x) y')]
  //   = eps_{i+1} eps_{i+2} (q'(x',y') theta^i(t_{x,y}) + q(x,y) theta'^i(t'_{x',y'}))
  std::vector<Vec> ts(ds * ds), tps(dp * dp);
  for (int x = 0; x < ds; ++x) {
    for (int y = 0; y < ds; ++y) ts[x * ds + y] = t_element(g.tri, s.basis(x), s.basis(y));
  }
  for (int x = 0; x < dp; ++x) {
    for (int y = 0; y < dp; ++y) {
      tps[x * dp + y] = t_element(g.tri_prime, sp.basis(x), sp.basis(y));
    }
  }
  for (int i = 0; i < 3; ++i) {
    const Scalar e = eps[i + 1] * eps[i + 2];
    std::vector<Vec> th(ds * ds), thp(dp * dp);
    for (int k = 0; k < ds * ds; ++k) th[k] = g.tri.theta(ts[k], i);
    for (int k = 0; k < dp * dp; ++k) thp[k] = g.tri_prime.theta(tps[k], i);
    for (int x = 0; x < ds; ++x) {
      for (int xp = 0; xp < dp; ++xp) {
        for (int y = 0; y < ds; ++y) {
          for (int yp = 0; yp < dp; ++yp) {
            const Scalar qp = (*sp.form)(xp, yp);
            const Scalar q = (*s.form)(x, y);
            Vec v(n);
            if (!qp.is_zero()) {
              for (int k = 0; k < n1; ++k) v[k] = e * qp * th[x * ds + y][k];
            }
            if (!q.is_zero()) {
              for (int k = 0; k < n2; ++k) {
                v[n1 + k] = e * q * thp[xp * dp + yp][k];
              }
            }
            put(table, n, iota_idx(i, x, xp), iota_idx(i, y, yp), v);
          }
        }
      }
    }
  }

  std::string name = "g(" + eps.str() + ")(" + s_in.name + "," + sp_in.name + ")";
  g.lie = LieAlgebra(std::move(name), std::move(labels), std::move(table));
  return g;
}

}  // namespace satake
