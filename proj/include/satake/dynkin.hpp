#ifndef SATAKE_DYNKIN_HPP
#define SATAKE_DYNKIN_HPP

#include <optional>
#include <string>
#include <vector>

namespace satake {

/// a[i][j] = <alpha_i, alpha_j^vee>.
using IntMatrix = std::vector<std::vector<int>>;

/// Bourbaki-numbered Cartan matrix of a finite type; family is one of
/// A, B, C, D, E, F, G. Throws std::invalid_argument for unknown types.
IntMatrix catalog_cartan(char family, int rank);

struct DynkinComponent {
  char family = 'A';
  int rank = 0;
  /// nodes[k] is the input index playing the role of Bourbaki node k+1.
  std::vector<int> nodes;
  std::string name() const;
};

struct DynkinType {
  std::vector<DynkinComponent> components;
  /// e.g. "E6", "D4", "A1+A1"; "0" for the empty diagram.
  std::string name() const;
  int rank() const;
};

/// Matches each connected component against the catalog (rank <= 8).
/// B2 is reported as B2, never C2. Returns nullopt if some component is
/// not a finite-type Cartan matrix.
std::optional<DynkinType> classify(const IntMatrix& a);

/// Bond multiplicity a_ij * a_ji between two nodes.
int bond(const IntMatrix& a, int i, int j);

}  // namespace satake

#endif  // SATAKE_DYNKIN_HPP
