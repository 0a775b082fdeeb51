#ifndef SATAKE_ALGEBRA_HPP
#define SATAKE_ALGEBRA_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satake/linalg.hpp"

namespace satake {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of an exhaustive or sampled identity check.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string name) : check(std::move(name)) {}

  std::string check;
  bool passed = true;
  std::int64_t checked = 0;
  std::vector<std::string> violations;  // first few witnesses only

  void fail(std::string witness);
  std::string summary() const;
};

/// Finite-dimensional algebra given by structure constants on a basis.
///
/// `form` is the polar form n(x,y) = n(x+y) - n(x) - n(y) of the norm, so
/// n(x) = form(x,x)/2. The unit is a coordinate vector since some standard
/// bases (split octonions) do not contain it. `involution` columns are the
/// images of basis vectors.
struct AlgebraTable {
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<SparseVec> products;  // products[i * dim + j] = e_i e_j
  std::optional<Matrix> form;
  std::optional<Vec> unit;
  std::optional<Matrix> involution;
  std::optional<Vec> trace;  // linear functional, Jordan algebras only

  AlgebraTable() = default;
  AlgebraTable(std::string name, std::vector<std::string> labels);

  const SparseVec& product(int i, int j) const {
    return products[i * dim + j];
  }
  void set_product(int i, int j, const Vec& value);
  void set_product(int i, int j, SparseVec value);

  Vec basis(int i) const { return unit_vec(dim, i); }
  int index_of(std::string_view label) const;

  Vec multiply(const Vec& x, const Vec& y) const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  Scalar bilinear(const Vec& x, const Vec& y) const;
  Scalar norm(const Vec& x) const;
  Vec bar(const Vec& x) const;
  Matrix left_mult(const Vec& x) const;
  Matrix right_mult(const Vec& x) const;
};

/// Sign vector (eps0, eps1, eps2) with entries +-1, indexed mod 3.
class EpsilonTriple {
 public:
  EpsilonTriple() = default;
  EpsilonTriple(int e0, int e1, int e2);
  static EpsilonTriple parse(std::string_view text);  // "1,-1,1"

  int operator[](int i) const { return e_[((i % 3) + 3) % 3]; }
  std::string str() const;
  friend bool operator==(const EpsilonTriple&, const EpsilonTriple&) = default;

 private:
  std::array<int, 3> e_{1, 1, 1};
};

AlgebraTable cayley_dickson(const AlgebraTable& a, const Scalar& alpha,
                            const std::string& new_label = "u");

enum class HurwitzKind { R, RplusR, C, Mat2, H, O, Osplit };

AlgebraTable hurwitz(HurwitzKind kind);
std::optional<HurwitzKind> hurwitz_kind(std::string_view name);
std::vector<HurwitzKind> all_hurwitz_kinds();

/// Para-Hurwitz algebra: same space and norm, product x*y = bar(x) bar(y).
AlgebraTable para(const AlgebraTable& a);

/// Okubo algebra on traceless 3x3 matrices antihermitian for the involution
/// x* = p conj(x)^t p^-1, with p = I (compact) or the 2<->3 swap (split).
AlgebraTable okubo(bool split);

/// Symmetric composition algebras by short name: R, pR, pRR, pC, pH, pO,
/// pOs, Ok, Oks.
AlgebraTable symmetric_composition(std::string_view name);
std::vector<std::string> symmetric_composition_names();

CheckReport check_composition(const AlgebraTable& a);
CheckReport check_symmetric(const AlgebraTable& a);
CheckReport check_unit(const AlgebraTable& a);
/// x^2 - t(x) x + n(x) 1 = 0 on basis vectors.
CheckReport check_quadratic_equation(const AlgebraTable& a);
CheckReport check_commutative(const AlgebraTable& a);
/// Jordan identity (x^2 y) x = x^2 (y x) on seeded random rational vectors.
CheckReport check_jordan_sampled(const AlgebraTable& a, int trials,
                                 std::uint64_t seed);
/// Fully linearized Jordan identity on all basis 4-tuples.
CheckReport check_jordan_exhaustive(const AlgebraTable& a);

/// +1 definite (either sign), 0 isotropic; throws if no form.
bool norm_is_definite(const AlgebraTable& a);

/// Subspace {c : c x = x c for all x}.
std::vector<Vec> commutative_center(const AlgebraTable& a);

/// Index of iota_i(s_k) in an Albert table built from an 8-dim S.
inline int albert_iota(int i, int k) { return 3 + 8 * i + k; }

/// R^3 + iota_0(S) + iota_1(S) + iota_2(S) with the twisted products.
AlgebraTable albert(const AlgebraTable& s, const EpsilonTriple& eps);
std::vector<Vec> zero_trace_basis(const AlgebraTable& a);

/// Hermitian 3x3 octonion matrices with x.y = (xy + yx)/2. Basis: the three
/// diagonal idempotents, then for slot 0 = (1,2), 1 = (2,0), 2 = (0,1) the
/// octonion basis placed at that slot (conjugate at the mirror).
AlgebraTable h3_octonions();

/// Linear map A_(1,1,1)(pO) -> H3(O) taking (a0,a1,a2) to diag(a0,a1,a2)
/// and iota_i(x) to the slot-i hermitian matrix with entry 2x. With
/// `conjugate_entries` the slot entry is 2 conj(x) instead.
/// With the Cayley-Dickson product used here only the conjugated variant is
/// multiplicative; the plain one is an isomorphism onto H3 of the opposite
/// octonions.
Matrix albert_to_h3(bool conjugate_entries);
CheckReport check_algebra_homomorphism(const AlgebraTable& from,
                                       const AlgebraTable& to,
                                       const Matrix& map);
/// Exhaustive check of albert_to_h3(true) on all basis pairs plus rank.
CheckReport check_albert_matrix_iso();

}  // namespace satake

#endif  // SATAKE_ALGEBRA_HPP
