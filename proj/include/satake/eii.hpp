#ifndef SATAKE_EII_HPP
#define SATAKE_EII_HPP

#include "satake/constructions.hpp"
#include "satake/rootspace.hpp"

namespace satake {

/// Psi_i on g_eps(S, pC): identity on tri + tri', -1 on iota_i and
/// iota_j(x (x) e_k) -> (-1)^(k+1) iota_j(x (x) e_(k+1)) for j != i.
Matrix psi_matrix(const MagicSquareAlgebra& g, int i);

/// psi_matrix after an exhaustive automorphism check; throws RootError
/// when some basis pair fails.
Matrix psi_automorphism(const MagicSquareAlgebra& g, int i);

struct EiiAssembly {
  Subalgebra g0;  // g_eps(S, R e0)
  RootDatum roots0;
  std::vector<int> positive;     // Phi+ in roots0
  std::vector<int> block;        // -1 for roots in tri(S), else the iota index
  std::vector<Sl2Triple> sl2;    // ambient coordinates, parallel to positive
  std::vector<Scalar> k0;        // k0(e_alpha, f_alpha)
  std::vector<Vec> t;
  std::vector<Vec> p;
};

/// Compact-form assembly for g_(1,1,1)(pOs, pC) with h0 = h_1..h_4.
EiiAssembly assemble_eii_cartan_decomposition(const MagicSquareAlgebra& g,
                                              const CartanSpec& h);

}  // namespace satake

#endif  // SATAKE_EII_HPP
