#ifndef SATAKE_CONSTRUCTIONS_HPP
#define SATAKE_CONSTRUCTIONS_HPP

#include "satake/triality.hpp"

namespace satake {

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Component { Tri, TriPrime, Iota };

/// Where a basis vector of g_eps(S,S') lives. For Iota, `block` is i and
/// (x, xp) index the S and S' bases.
struct BasisTag {
  Component kind;
  int index = 0;  // position inside tri(S) or tri(S')
  int block = 0;
  int x = 0;
  int xp = 0;
};

/// g_eps(S,S') = tri(S) + tri(S') + iota_0 + iota_1 + iota_2 (S x S').
///
/// Basis order: tri(S), tri(S'), then the iota_i blocks with S-major,
/// S'-minor tensor order. When the caller passes the smaller algebra first
/// the construction is carried out for (S', S) and `swapped` is set.
struct MagicSquareAlgebra {
  LieAlgebra lie;
  TrialityAlgebra tri;        // of the 8-dim factor
  TrialityAlgebra tri_prime;  // of the small factor
  EpsilonTriple eps;
  std::vector<BasisTag> tags;
  bool swapped = false;

  const AlgebraTable& s() const { return tri.s(); }
  const AlgebraTable& s_prime() const { return tri_prime.s(); }
  int tri_dim() const { return tri.dim(); }
  int tri_prime_dim() const { return tri_prime.dim(); }
  int iota_offset(int i) const {
    return tri_dim() + tri_prime_dim() + i * s().dim * s_prime().dim;
  }
  int iota_index(int i, int x, int xp) const {
    return iota_offset(i) + x * s_prime().dim + xp;
  }

  Vec embed_tri(const Vec& coords) const;
  Vec embed_tri_prime(const Vec& coords) const;
  /// iota_i(x (x) x') for coordinate vectors x in S and x' in S'.
  Vec iota(int i, const Vec& x, const Vec& xp) const;
  /// Coordinates of t_{x,y} in tri(S), embedded.
  Vec t(const Vec& x, const Vec& y) const;
  Vec t_prime(const Vec& x, const Vec& y) const;
};

MagicSquareAlgebra magic_square(const AlgebraTable& s, const AlgebraTable& sp,
                                const EpsilonTriple& eps);

/// rho : g_eps(S, R) -> Der(A_eps(S)).
struct RhoMap {
  AlgebraTable albert;
  LinearLieAlgebra der;
  std::vector<Matrix> images;  // rho of each basis vector, 27 x 27
  Matrix matrix;               // images in Der coordinates
};

RhoMap rho_map(const MagicSquareAlgebra& g);
/// Homomorphism on basis pairs plus bijectivity.
CheckReport check_rho(const MagicSquareAlgebra& g, const RhoMap& rho);

/// Der(A) + A_0 with [x,y] = [l_x, l_y] on A_0. The Der part uses the
/// rho-images of the g_eps(S,R) basis, so its coordinates coincide with
/// those of g_eps(S,R).
struct TitsModel {
  LieAlgebra lie;
  MagicSquareAlgebra f4;
  AlgebraTable albert;
  std::vector<Matrix> der_basis;
  std::vector<Vec> a0_basis;

  int der_dim() const { return static_cast<int>(der_basis.size()); }
  /// g_eps(S,R) coordinates -> model coordinates.
  Vec embed_der(const Vec& coords) const;
  /// Albert coordinates of a trace-zero element -> model coordinates.
  Vec embed_a0(const Vec& x) const;
};

TitsModel tits_model(const AlgebraTable& s, const EpsilonTriple& eps);
TitsModel tits_model();

}  // namespace satake

#endif  // SATAKE_CONSTRUCTIONS_HPP
