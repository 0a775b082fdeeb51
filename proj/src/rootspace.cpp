#include "satake/rootspace.hpp"

#include <algorithm>
#include <random>

namespace satake {

namespace {

using Poly = std::vector<Scalar>;  // coefficients, low degree first

constexpr int kHeightCap = 16;
constexpr int kKrylovAttempts = 3;
constexpr int kOrderingAttempts = 8;

Scalar eval(const Poly& p, const Scalar& x) {
  Scalar r;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

Poly deflate(const Poly& p, const Scalar& x) {
  const int d = static_cast<int>(p.size()) - 1;
  Poly q(d);
  Scalar carry;
  for (int k = d; k >= 1; --k) {
    carry = p[k] + carry * x;
    q[k - 1] = carry;
  }
  return q;
}

// Minimal polynomial of v under m.
Poly krylov_poly(const Matrix& m, const Vec& v) {
  Echelon ech(m.rows());
  std::vector<Vec> chain;
  Vec w = v;
  while (ech.insert(w)) {
    chain.push_back(w);
    w = m.apply(w);
  }
  Vec c = CoordinateSolver(chain).solve(w);
  Poly p(chain.size() + 1);
  for (size_t j = 0; j < chain.size(); ++j) p[j] = -c[j];
  p.back() = 1;
  return p;
}

mpq_class quarter(long n) {
  mpq_class q(n, 4);
  q.canonicalize();
  return q;
}

int height_bound(const Matrix& m) {
  mpq_class mx = 0;
  for (int r = 0; r < m.rows(); ++r) {
    for (const auto& x : m.row(r)) mx = std::max(mx, magnitude_bound(x));
  }
  mpq_class b = 4 * mx * m.rows();
  mpz_class c = b.get_num() / b.get_den() + 1;
  return c > kHeightCap ? kHeightCap : static_cast<int>(c.get_si());
}

// Roots of p in the quarter lattice, by increasing height.
std::vector<Scalar> lattice_roots(Poly p, int hmax) {
  std::vector<Scalar> out;
  auto test = [&](long a, long b, long c, long d) {
    Scalar x(quarter(a), quarter(b), quarter(c), quarter(d));
    bool hit = false;
    while (p.size() > 1 && eval(p, x).is_zero()) {
      p = deflate(p, x);
      hit = true;
    }
    if (hit) out.push_back(x);
  };
  for (long h = 0; h <= hmax && p.size() > 1; ++h) {
    for (long a = -h; a <= h; ++a) {
      for (long b = -h; b <= h; ++b) {
        for (long c = -h; c <= h; ++c) {
          for (long d = -h; d <= h; ++d) {
            if (std::max({std::labs(a), std::labs(b), std::labs(c),
                          std::labs(d)}) != h) {
              continue;
            }
            test(a, b, c, d);
            if (p.size() <= 1) return out;
          }
        }
      }
    }
  }
  return out;
}

Vec combine(const std::vector<Vec>& basis, const Vec& coords, int n) {
  Vec v(n);
  for (size_t j = 0; j < basis.size(); ++j) {
    if (!coords[j].is_zero()) axpy(v, coords[j], basis[j]);
  }
  return v;
}

bool is_integer(const Scalar& x) {
  return x.is_rational() && x.a().get_den() == 1;
}

Scalar stripped_imag(const Scalar& x) {
  if (!x.real_part().is_zero()) {
    throw RootError("root value on a compact Cartan element is not imaginary");
  }
  return x.imag_part();
}

}  // namespace

bool VecLess::operator()(const Vec& x, const Vec& y) const {
  if (x.size() != y.size()) return x.size() < y.size();
  for (size_t k = 0; k < x.size(); ++k) {
    auto c = lex_compare(x[k], y[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::optional<int> RootDatum::find(const Vec& values) const {
  auto it = index.find(values);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Vec RootDatum::restrict(const Vec& values) const {
  Vec out;
  for (int a : cartan.a_indices) out.push_back(values[a]);
  return out;
}

bool RootDatum::is_compact(int root) const {
  return is_zero(restrict(roots[root].values));
}

std::vector<int> RootDatum::compact_roots() const {
  std::vector<int> out;
  for (int r = 0; r < size(); ++r) {
    if (is_compact(r)) out.push_back(r);
  }
  return out;
}

std::vector<Eigenspace> lattice_eigenspaces(const Matrix& m) {
  const int n = m.rows();
  if (n == 1) return {{m(0, 0), {Vec{Scalar(1)}}}};
  std::vector<Eigenspace> out;
  int found = 0;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int attempt = 0; attempt < kKrylovAttempts && found < n; ++attempt) {
    Vec v(n);
    for (auto& x : v) x = dist(rng);
    if (is_zero(v)) v[0] = 1;
    for (const Scalar& x : lattice_roots(krylov_poly(m, v), height_bound(m))) {
      bool seen = false;
      for (const auto& e : out) seen = seen || e.value == x;
      if (seen) continue;
      Matrix shifted = m;
      for (int k = 0; k < n; ++k) shifted(k, k) -= x;
      auto ker = nullspace(shifted);
      if (ker.empty()) continue;
      found += static_cast<int>(ker.size());
      out.push_back({x, std::move(ker)});
    }
  }
  return out;
}

RootDatum root_decomposition(const LieAlgebra& l, const CartanSpec& cs) {
  const int n = l.dim();
  const int r = cs.rank();
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(cs.h[i].size()) != n) {
      throw RootError("h" + std::to_string(i + 1) + " has the wrong length");
    }
    for (int j = i + 1; j < r; ++j) {
      if (!is_zero(l.bracket(cs.h[i], cs.h[j]))) {
        throw RootError("h" + std::to_string(i + 1) + " and h" +
                        std::to_string(j + 1) + " do not commute");
      }
    }
  }
  struct Block {
    std::vector<Vec> basis;
    Vec values;
  };
  std::vector<Block> blocks(1);
  for (int k = 0; k < n; ++k) blocks[0].basis.push_back(unit_vec(n, k));
  for (int i = 0; i < r; ++i) {
    const Matrix ad = l.ad(cs.h[i]);
    std::vector<Block> next;
    for (const Block& b : blocks) {
      const int k = static_cast<int>(b.basis.size());
      Matrix m = ad;
      if (i > 0) {
        m = Matrix(k, k);
        CoordinateSolver solver(b.basis);
        for (int j = 0; j < k; ++j) {
          auto c = solver.coordinates(ad.apply(b.basis[j]));
          if (!c) {
            throw RootError("ad h" + std::to_string(i + 1) +
                            " does not preserve a joint eigenspace");
          }
          for (int s = 0; s < k; ++s) m(s, j) = (*c)[s];
        }
      }
      int total = 0;
      for (auto& sp : lattice_eigenspaces(m)) {
        total += static_cast<int>(sp.vectors.size());
        Block nb;
        nb.values = b.values;
        nb.values.push_back(sp.value);
        for (const auto& v : sp.vectors) nb.basis.push_back(combine(b.basis, v, n));
        next.push_back(std::move(nb));
      }
      if (total != k) {
        throw RootError("eigenvalue discovery incomplete for h" +
                        std::to_string(i + 1) + ": found " +
                        std::to_string(total) + " of " + std::to_string(k) +
                        " dimensions");
      }
    }
    blocks = std::move(next);
  }
  RootDatum d;
  d.cartan = cs;
  d.ambient_dim = n;
  for (Block& b : blocks) {
    Echelon ech(n);
    for (auto& v : b.basis) ech.insert(std::move(v));
    if (is_zero(b.values)) {
      d.zero_space = ech.rows();
    } else {
      d.roots.push_back({std::move(b.values), ech.rows()});
    }
  }
  std::sort(d.roots.begin(), d.roots.end(), [](const Root& x, const Root& y) {
    return VecLess{}(x.values, y.values);
  });
  for (int k = 0; k < d.size(); ++k) d.index[d.roots[k].values] = k;
  return d;
}

BasisReport verify_basis(const RootDatum& d, const std::vector<int>& basis) {
  BasisReport rep;
  if (static_cast<int>(basis.size()) != d.rank()) {
    rep.witness = "expected " + std::to_string(d.rank()) + " roots, got " +
                  std::to_string(basis.size());
    return rep;
  }
  std::vector<Vec> cov;
  for (int b : basis) cov.push_back(d.roots[b].values);
  std::optional<CoordinateSolver> solver;
  try {
    solver.emplace(cov);
  } catch (const LinalgError&) {
    rep.witness = "basis covectors are dependent";
    return rep;
  }
  for (int r = 0; r < d.size(); ++r) {
    auto c = solver->coordinates(d.roots[r].values);
    if (!c) {
      rep.witness = "root " + std::to_string(r) + " outside the span";
      rep.coords.clear();
      return rep;
    }
    std::vector<long> row;
    int pos = 0, neg = 0;
    for (const auto& x : *c) {
      if (!is_integer(x)) {
        rep.witness = "root " + std::to_string(r) + " has coefficient " + x.str();
        rep.coords.clear();
        return rep;
      }
      const long v = x.a().get_num().get_si();
      pos += v > 0;
      neg += v < 0;
      row.push_back(v);
    }
    if (pos > 0 && neg > 0) {
      rep.witness = "root " + std::to_string(r) + " has mixed signs";
      rep.coords.clear();
      return rep;
    }
    rep.coords.push_back(std::move(row));
  }
  rep.passed = true;
  return rep;
}

std::vector<int> roots_from_values(const RootDatum& d,
                                   const std::vector<Vec>& values) {
  std::vector<int> out;
  for (const auto& v : values) {
    auto k = d.find(v);
    if (!k) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ", ") + x.str();
      throw RootError("not a root: (" + s + ")");
    }
    out.push_back(*k);
  }
  return out;
}

std::vector<int> auto_adapted_basis(const RootDatum& d) {
  const auto& ai = d.cartan.a_indices;
  const auto& ti = d.cartan.t_indices;
  for (int attempt = 0; attempt < kOrderingAttempts; ++attempt) {
    const long base = 10 + 7 * attempt;
    auto weights = [&](size_t m) {
      std::vector<Scalar> w(m);
      Scalar p(1);
      for (size_t j = m; j-- > 0;) {
        w[j] = p;
        p *= Scalar(base);
      }
      return w;
    };
    const auto wa = weights(ai.size()), wt = weights(ti.size());
    std::vector<std::pair<int, int>> keys;
    bool degenerate = false;
    for (const Root& root : d.roots) {
      Scalar ka, kt;
      for (size_t j = 0; j < ai.size(); ++j) ka += wa[j] * root.values[ai[j]];
      for (size_t j = 0; j < ti.size(); ++j) {
        kt += wt[j] * stripped_imag(root.values[ti[j]]);
      }
      const int sa = sign(ka), st = sign(kt);
      const bool compact = is_zero(d.restrict(root.values));
      if ((sa == 0 && !compact) || (sa == 0 && st == 0)) degenerate = true;
      keys.emplace_back(sa, st);
    }
    if (degenerate) continue;
    std::vector<bool> positive(d.size());
    for (int r = 0; r < d.size(); ++r) {
      positive[r] = keys[r].first > 0 || (keys[r].first == 0 && keys[r].second > 0);
    }
    std::vector<int> simple;
    for (int r = 0; r < d.size(); ++r) {
      if (!positive[r]) continue;
      bool decomposable = false;
      for (int s = 0; s < d.size() && !decomposable; ++s) {
        if (!positive[s] || s == r) continue;
        auto rest = d.find(d.roots[r].values - d.roots[s].values);
        decomposable = rest && positive[*rest];
      }
      if (!decomposable) simple.push_back(r);
    }
    if (static_cast<int>(simple.size()) != d.rank()) {
      throw RootError("ordering produced " + std::to_string(simple.size()) +
                      " simple roots for rank " + std::to_string(d.rank()));
    }
    auto type = classify(cartan_matrix(d, simple));
    if (!type) throw RootError("simple roots do not form a Dynkin diagram");
    std::vector<int> ordered;
    for (const auto& c : type->components) {
      for (int node : c.nodes) ordered.push_back(simple[node]);
    }
    return ordered;
  }
  throw RootError("no nondegenerate ordering functional found");
}

std::vector<int> positive_roots(const RootDatum& d,
                                const std::vector<int>& basis) {
  BasisReport rep = verify_basis(d, basis);
  if (!rep.passed) throw RootError("not a basis: " + rep.witness);
  std::vector<int> out;
  for (int r = 0; r < d.size(); ++r) {
    bool pos = false;
    for (long c : rep.coords[r]) pos = pos || c > 0;
    if (pos) out.push_back(r);
  }
  return out;
}

std::pair<int, int> root_string(const RootDatum& d, int alpha, int beta) {
  const Vec& a = d.roots[alpha].values;
  const Vec& b = d.roots[beta].values;
  int p = 0, q = 0;
  for (Vec x = a - b; d.find(x); x = x - b) ++p;
  for (Vec x = a + b; d.find(x); x = x + b) ++q;
  return {p, q};
}

IntMatrix cartan_matrix(const RootDatum& d, const std::vector<int>& basis) {
  const int n = static_cast<int>(basis.size());
  IntMatrix a(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto [p, q] = root_string(d, basis[i], basis[j]);
      a[i][j] = p - q;
      if (std::abs(a[i][j]) > 3) {
        throw RootError("Cartan integer out of range: " + std::to_string(a[i][j]));
      }
    }
  }
  return a;
}

CheckReport check_root_axioms(const RootDatum& d) {
  CheckReport rep("root system axioms " + d.cartan.label);
  for (int a = 0; a < d.size(); ++a) {
    const Vec& va = d.roots[a].values;
    ++rep.checked;
    auto neg = d.find(Scalar(-1) * va);
    if (!neg) rep.fail("-root missing for root " + std::to_string(a));
    for (int b = 0; b < d.size(); ++b) {
      if (b == a || (neg && b == *neg)) continue;
      ++rep.checked;
      const Vec& vb = d.roots[b].values;
      auto [p, q] = root_string(d, a, b);
      const int c = p - q;
      if (c < -3 || c > 3 || p + q > 3) {
        rep.fail("string of " + std::to_string(b) + " through " +
                 std::to_string(a) + " has p=" + std::to_string(p) +
                 " q=" + std::to_string(q));
      }
      for (int k = 1; k <= 4; ++k) {
        if (d.find(va + Scalar(q + 1 + k) * vb) ||
            d.find(va - Scalar(p + 1 + k) * vb)) {
          rep.fail("broken string of " + std::to_string(b) + " through " +
                   std::to_string(a));
          break;
        }
      }
    }
  }
  return rep;
}

std::vector<int> compact_part(const RootDatum& d, const std::vector<int>& basis) {
  std::vector<int> out;
  for (int b : basis) {
    if (d.is_compact(b)) out.push_back(b);
  }
  return out;
}

int root_count(const DynkinType& t) {
  int total = 0;
  for (const auto& c : t.components) {
    const int n = c.rank;
    switch (c.family) {
      case 'A': total += n * (n + 1); break;
      case 'B':
      case 'C': total += 2 * n * n; break;
      case 'D': total += 2 * n * (n - 1); break;
      case 'E': total += n == 6 ? 72 : n == 7 ? 126 : 240; break;
      case 'F': total += 48; break;
      case 'G': total += 12; break;
    }
  }
  return total;
}

std::optional<int> RestrictedSystem::find(const Vec& lambda) const {
  for (size_t k = 0; k < roots.size(); ++k) {
    if (roots[k].lambda == lambda) return static_cast<int>(k);
  }
  return std::nullopt;
}

int RestrictedSystem::multiplicity(const Vec& lambda) const {
  auto k = find(lambda);
  return k ? roots[*k].multiplicity : 0;
}

int RestrictedSystem::total_multiplicity() const {
  int s = 0;
  for (const auto& r : roots) s += r.multiplicity;
  return s;
}

RestrictedSystem restricted_system(const RootDatum& d,
                                   const std::vector<int>& basis) {
  RestrictedSystem out;
  std::map<Vec, int, VecLess> mult;
  for (int r = 0; r < d.size(); ++r) {
    Vec lambda = d.restrict(d.roots[r].values);
    if (is_zero(lambda)) continue;
    mult[lambda] += static_cast<int>(d.roots[r].space.size());
  }
  for (auto& [lambda, m] : mult) out.roots.push_back({lambda, m});
  std::vector<bool> indivisible(out.roots.size(), true);
  for (size_t k = 0; k < out.roots.size(); ++k) {
    if (mult.count(Scalar(2) * out.roots[k].lambda)) out.reduced = false;
    if (mult.count(Scalar::rational(1, 2) * out.roots[k].lambda)) {
      indivisible[k] = false;
    }
  }
  for (size_t j = 0; j < basis.size(); ++j) {
    if (d.is_compact(basis[j])) continue;
    const int k = *out.find(d.restrict(d.roots[basis[j]].values));
    auto it = std::find(out.basis.begin(), out.basis.end(), k);
    if (it == out.basis.end()) {
      out.basis.push_back(k);
      out.sources.push_back({static_cast<int>(j)});
    } else {
      out.sources[it - out.basis.begin()].push_back(static_cast<int>(j));
    }
  }
  auto in_reduced = [&](const Vec& v) {
    auto k = out.find(v);
    return k && indivisible[*k];
  };
  const int n = static_cast<int>(out.basis.size());
  out.cartan.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Vec& a = out.roots[out.basis[i]].lambda;
      const Vec& b = out.roots[out.basis[j]].lambda;
      int p = 0, q = 0;
      for (Vec x = a - b; in_reduced(x); x = x - b) ++p;
      for (Vec x = a + b; in_reduced(x); x = x + b) ++q;
      out.cartan[i][j] = p - q;
    }
  }
  auto type = classify(out.cartan);
  if (!type) {
    out.type = "unknown";
  } else if (out.reduced) {
    out.type = type->name();
  } else if (type->components.size() == 1 &&
             (type->components[0].family == 'B' ||
              (type->components[0].family == 'A' && type->rank() == 1))) {
    out.type = "BC" + std::to_string(type->rank());
  } else {
    out.type = "nonreduced " + type->name();
  }
  return out;
}

CartanDecompositionReport verify_cartan_decomposition(
    const LieAlgebra& l, const std::vector<Vec>& t, const std::vector<Vec>& p) {
  CartanDecompositionReport rep;
  rep.dim_t = static_cast<int>(t.size());
  rep.dim_p = static_cast<int>(p.size());
  std::vector<Vec> all = t;
  all.insert(all.end(), p.begin(), p.end());
  rep.spans = rep.dim_t + rep.dim_p == l.dim() && rank(all) == l.dim();
  if (!rep.spans) rep.failures.push_back("t + p is not a direct sum equal to L");
  std::optional<CoordinateSolver> st, sp;
  try {
    if (!t.empty()) st.emplace(t);
    if (!p.empty()) sp.emplace(p);
  } catch (const LinalgError&) {
    rep.failures.push_back("dependent basis vectors");
    return rep;
  }
  auto inside = [](const std::optional<CoordinateSolver>& s, const Vec& v) {
    return is_zero(v) || (s && s->contains(v));
  };
  auto closed = [&](const std::vector<Vec>& x, const std::vector<Vec>& y,
                    const std::optional<CoordinateSolver>& target,
                    bool same) {
    for (size_t i = 0; i < x.size(); ++i) {
      for (size_t j = same ? i + 1 : 0; j < y.size(); ++j) {
        if (!inside(target, l.bracket(x[i], y[j]))) return false;
      }
    }
    return true;
  };
  rep.tt = closed(t, t, st, true);
  rep.tp = closed(t, p, sp, false);
  rep.pp = closed(p, p, st, true);
  if (!rep.tt) rep.failures.push_back("[t,t] not in t");
  if (!rep.tp) rep.failures.push_back("[t,p] not in p");
  if (!rep.pp) rep.failures.push_back("[p,p] not in t");
  const Matrix& k = l.killing();
  auto gram = [&](const std::vector<Vec>& x) {
    std::vector<Vec> kx;
    for (const auto& v : x) kx.push_back(k.apply(v));
    Matrix g(x.size(), x.size());
    for (size_t i = 0; i < x.size(); ++i) {
      for (size_t j = 0; j < x.size(); ++j) {
        Scalar s;
        for (int c = 0; c < l.dim(); ++c) {
          if (!x[i][c].is_zero()) s.add_product(x[i][c], kx[j][c]);
        }
        g(i, j) = s;
      }
    }
    return g;
  };
  try {
    rep.killing_t = signature(gram(t));
    rep.killing_p = signature(gram(p));
  } catch (const LinalgError& e) {
    rep.failures.push_back(std::string("Killing form restriction: ") + e.what());
    return rep;
  }
  if (rep.killing_t->n_minus != rep.dim_t) {
    rep.failures.push_back("Killing form not negative definite on t");
  }
  if (rep.killing_p->n_plus != rep.dim_p) {
    rep.failures.push_back("Killing form not positive definite on p");
  }
  return rep;
}

Sl2Triple sl2_triple(const LieAlgebra& l, const RootDatum& d, int root) {
  const Root& ra = d.roots[root];
  auto neg = d.find(Scalar(-1) * ra.values);
  if (!neg) throw RootError("-alpha is not a root");
  const Root& rb = d.roots[*neg];
  if (ra.space.size() != 1 || rb.space.size() != 1) {
    throw RootError("sl2 triple needs one-dimensional root spaces");
  }
  const Vec& e = ra.space[0];
  Vec h0 = l.bracket(e, rb.space[0]);
  auto c = CoordinateSolver(d.cartan.h).coordinates(h0);
  if (!c) throw RootError("[e_alpha, e_-alpha] is not in the Cartan subalgebra");
  Scalar a;
  for (int j = 0; j < d.rank(); ++j) a += (*c)[j] * ra.values[j];
  if (a.is_zero()) throw RootError("alpha vanishes on [e_alpha, e_-alpha]");
  const Scalar s = Scalar(2) / a;
  return {e, s * rb.space[0], s * h0};
}

std::vector<std::pair<int, int>> arrow_pairs(const RootDatum& d,
                                             const std::vector<int>& basis) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i) {
    if (d.is_compact(basis[i])) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!d.is_compact(basis[j]) &&
          d.restrict(d.roots[basis[i]].values) ==
              d.restrict(d.roots[basis[j]].values)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

RankIdentity rank_identity_check(const RootDatum& d,
                                 const std::vector<int>& basis) {
  RankIdentity r;
  r.rank = d.rank();
  std::vector<Vec> a;
  for (int i : d.cartan.a_indices) a.push_back(d.cartan.h[i]);
  r.real_rank = a.empty() ? 0 : rank(a);
  r.arrows = static_cast<int>(arrow_pairs(d, basis).size());
  r.black = static_cast<int>(compact_part(d, basis).size());
  return r;
}

}  // namespace satake
