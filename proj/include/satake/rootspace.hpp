#ifndef SATAKE_ROOTSPACE_HPP
#define SATAKE_ROOTSPACE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satake/dynkin.hpp"
#include "satake/lie.hpp"

namespace satake {

class RootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Commuting elements h_1..h_r of a Lie algebra, split into the
/// noncompact part (a) and the compact part (h cap t).
struct CartanSpec {
  std::string label;
  std::vector<Vec> h;
  std::vector<int> a_indices;
  std::vector<int> t_indices;

  int rank() const { return static_cast<int>(h.size()); }
};

struct VecLess {
  bool operator()(const Vec& x, const Vec& y) const;
};

struct Root {
  Vec values;              // lambda(h_1), ..., lambda(h_r)
  std::vector<Vec> space;  // reduced echelon basis of the root space
};

struct RootDatum {
  CartanSpec cartan;
  int ambient_dim = 0;
  std::vector<Vec> zero_space;
  std::vector<Root> roots;  // lexicographic on values
  std::map<Vec, int, VecLess> index;

  int rank() const { return cartan.rank(); }
  int size() const { return static_cast<int>(roots.size()); }
  std::optional<int> find(const Vec& values) const;
  /// Restriction to the a-indices.
  Vec restrict(const Vec& values) const;
  bool is_compact(int root) const;
  /// Indices of the roots vanishing on a.
  std::vector<int> compact_roots() const;
};

/// Successive refinement of joint eigenspaces of ad h_1, ..., ad h_r.
/// Throws RootError when the h_i do not commute or some ad h_i is not
/// diagonalizable with eigenvalues in the quarter lattice.
RootDatum root_decomposition(const LieAlgebra& l, const CartanSpec& h);

/// Eigenvalues of a square matrix in (1/4)(Z + Z r3 + (Z + Z r3) i),
/// with the eigenspaces; the dimensions may fall short of the size when
/// the matrix is not diagonalizable over the lattice.
struct Eigenspace {
  Scalar value;
  std::vector<Vec> vectors;
};
std::vector<Eigenspace> lattice_eigenspaces(const Matrix& m);

struct BasisReport {
  bool passed = false;
  /// coords[r][j]: coefficient of basis[j] in root r.
  std::vector<std::vector<long>> coords;
  std::string witness;
};

/// Every root must be an integer combination of `basis` (root indices)
/// with coefficients of one sign.
BasisReport verify_basis(const RootDatum& d, const std::vector<int>& basis);

/// Root indices for a list of covectors; throws RootError for non-roots.
std::vector<int> roots_from_values(const RootDatum& d,
                                   const std::vector<Vec>& values);

/// Basis from an ordering that compares the a-part first and the
/// i-stripped t-part second. Returned in Bourbaki order of the
/// classified Dynkin diagram.
std::vector<int> auto_adapted_basis(const RootDatum& d);

/// Roots with nonnegative coordinates over a verified basis.
std::vector<int> positive_roots(const RootDatum& d,
                                const std::vector<int>& basis);

/// Largest p, q with alpha - p beta, ..., alpha + q beta all roots.
std::pair<int, int> root_string(const RootDatum& d, int alpha, int beta);

/// a[i][j] = p - q for the basis[j]-string through basis[i].
IntMatrix cartan_matrix(const RootDatum& d, const std::vector<int>& basis);

/// Root strings unbroken and Cartan integers in {0, +-1, +-2, +-3} for all
/// non-proportional pairs; -Delta = Delta.
CheckReport check_root_axioms(const RootDatum& d);

/// Basis elements vanishing on a.
std::vector<int> compact_part(const RootDatum& d, const std::vector<int>& basis);

int root_count(const DynkinType& t);

struct RestrictedRoot {
  Vec lambda;
  int multiplicity = 0;
};

struct RestrictedSystem {
  std::vector<RestrictedRoot> roots;  // lexicographic on lambda
  /// Restrictions of B \ B0, deduplicated, in order of first appearance.
  std::vector<int> basis;
  /// For each basis entry, the B positions restricting to it.
  std::vector<std::vector<int>> sources;
  IntMatrix cartan;
  bool reduced = true;
  std::string type;

  std::optional<int> find(const Vec& lambda) const;
  int multiplicity(const Vec& lambda) const;
  int total_multiplicity() const;
};

RestrictedSystem restricted_system(const RootDatum& d,
                                   const std::vector<int>& basis);

struct CartanDecompositionReport {
  int dim_t = 0;
  int dim_p = 0;
  bool spans = false;
  bool tt = false;
  bool tp = false;
  bool pp = false;
  std::optional<SignatureReport> killing_t;
  std::optional<SignatureReport> killing_p;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  int signature() const { return dim_p - dim_t; }
};

CartanDecompositionReport verify_cartan_decomposition(
    const LieAlgebra& l, const std::vector<Vec>& t, const std::vector<Vec>& p);

struct Sl2Triple {
  Vec e, f, h;
};

/// e is the stored root vector, h in [g_alpha, g_-alpha] with alpha(h) = 2
/// and [e, f] = h. Throws RootError when the root space is not 1-dim.
Sl2Triple sl2_triple(const LieAlgebra& l, const RootDatum& d, int root);

struct RankIdentity {
  int rank = 0;
  int real_rank = 0;
  int arrows = 0;
  int black = 0;
  bool holds() const { return rank == real_rank + arrows + black; }
};

/// Unordered pairs of positions in `basis` of white nodes with equal
/// restriction.
std::vector<std::pair<int, int>> arrow_pairs(const RootDatum& d,
                                             const std::vector<int>& basis);

RankIdentity rank_identity_check(const RootDatum& d,
                                 const std::vector<int>& basis);

}  // namespace satake

#endif  // SATAKE_ROOTSPACE_HPP
