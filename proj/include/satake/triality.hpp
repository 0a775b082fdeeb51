#ifndef SATAKE_TRIALITY_HPP
#define SATAKE_TRIALITY_HPP

#include <array>

#include "satake/algebra.hpp"
#include "satake/lie.hpp"

namespace satake {

class TrialityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// o(S, q): endomorphisms skew for the polar form.
LinearLieAlgebra orthogonal_lie(const AlgebraTable& s);

using Triple = std::array<Matrix, 3>;

/// tri(S) = {(d0,d1,d2) in o(S,q)^3 : d0(x*y) = d1(x)*y + x*d2(y)}.
/// Elements are coordinate vectors over a fixed solved basis; each basis
/// element is stored as the block-diagonal matrix diag(d0, d1, d2).
class TrialityAlgebra {
 public:
  TrialityAlgebra() = default;
  explicit TrialityAlgebra(AlgebraTable s);

  const AlgebraTable& s() const { return s_; }
  const LieAlgebra& lie() const { return lie_.algebra; }
  int dim() const { return lie_.algebra.dim(); }

  Triple components(const Vec& coords) const;
  /// d_i of a basis element (cached).
  const Matrix& basis_component(int k, int i) const { return comps_[k][i]; }
  std::optional<Vec> coordinates(const Triple& d) const;
  /// Throws TrialityError when the triple is not in tri(S).
  Vec solve(const Triple& d) const;

  /// (d0, d1, d2) -> (d2, d0, d1) in coordinates; power taken mod 3.
  Vec theta(const Vec& coords, int power = 1) const;
  const Matrix& theta_matrix() const { return theta_; }

 private:
  AlgebraTable s_;
  LinearLieAlgebra lie_;
  std::vector<Triple> comps_;
  Matrix theta_;
};

TrialityAlgebra triality_algebra(const AlgebraTable& s);

/// sigma_{x,y}(z) = q(x,z) y - q(y,z) x
Matrix sigma(const AlgebraTable& s, const Vec& x, const Vec& y);
Matrix left_op(const AlgebraTable& s, const Vec& x);   // z -> x*z
Matrix right_op(const AlgebraTable& s, const Vec& x);  // z -> z*x

/// (sigma_{x,y}, q(x,y)/2 id - r_x l_y, q(x,y)/2 id - l_x r_y)
Triple t_components(const AlgebraTable& s, const Vec& x, const Vec& y);
/// Coordinates of t_{x,y}; throws TrialityError if it is not in tri(S).
Vec t_element(const TrialityAlgebra& t, const Vec& x, const Vec& y);

/// Checks the triality constraint for a triple on all basis pairs.
bool satisfies_triality(const AlgebraTable& s, const Triple& d);

}  // namespace satake

#endif  // SATAKE_TRIALITY_HPP
