#ifndef SATAKE_LIE_HPP
#define SATAKE_LIE_HPP

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "satake/algebra.hpp"
#include "satake/linalg.hpp"

namespace satake {

class LieError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lie algebra over Scalar given by bracket structure constants.
/// Copies share the lazily computed Killing matrix.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// `brackets[i * n + j]` = [e_i, e_j]; throws LieError unless
  /// antisymmetric.
  LieAlgebra(std::string name, std::vector<std::string> labels,
             std::vector<SparseVec> brackets);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<SparseVec>& table() const { return table_; }

  const SparseVec& bracket(int i, int j) const { return table_[i * dim_ + j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
  /// Matrix of ad x; column j is [x, e_j].
  Matrix ad(const Vec& x) const;

  /// Killing matrix k(e_i, e_j), computed once with the parallel kernel.
  const Matrix& killing() const;
  Scalar killing(const Vec& x, const Vec& y) const;

 private:
  struct Cache {
    std::once_flag once;
    Matrix killing;
  };

  std::string name_;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct JacobiReport {
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  std::optional<std::array<int, 3>> first;  // smallest violating triple
  bool passed() const { return failures == 0; }
};

/// Exhaustive Jacobi identity on basis triples i < j < k.
JacobiReport certify_jacobi(const LieAlgebra& l);
CheckReport jacobi_report(const LieAlgebra& l);

SignatureReport killing_signature(const LieAlgebra& l);

/// k([x,y],z) + k(y,[x,z]) = 0 on all basis triples.
CheckReport check_killing_invariance(const LieAlgebra& l);

/// A Lie algebra realized by matrices under the commutator.
struct LinearLieAlgebra {
  LieAlgebra algebra;
  std::vector<Matrix> basis;
  CoordinateSolver solver;  // over flattened matrices

  std::optional<Vec> coordinates(const Matrix& m) const {
    return solver.coordinates(m.flatten());
  }
  Matrix element(const Vec& coords) const;
};

/// Brackets of the span of `basis` (must be closed under commutators).
LinearLieAlgebra linear_lie_algebra(std::string name,
                                    std::vector<Matrix> basis,
                                    std::vector<std::string> labels = {});

/// Der(A) as the nullspace of d(xy) = d(x)y + x d(y) over basis pairs.
LinearLieAlgebra derivations(const AlgebraTable& a);

/// A subalgebra spanned by vectors of an ambient algebra, with induced
/// brackets.
struct Subalgebra {
  LieAlgebra algebra;
  std::vector<Vec> basis;  // ambient coordinates
  CoordinateSolver solver;
};

/// Spans the generators and their iterated brackets to a fixpoint.
Subalgebra subalgebra_closure(const LieAlgebra& l,
                              const std::vector<Vec>& generators);
/// Induced algebra on a subspace; throws LieError if not closed.
Subalgebra restrict_to(const LieAlgebra& l, const std::vector<Vec>& basis,
                       std::string name = {});

/// {x : [x, s] = 0 for all s in set}.
std::vector<Vec> centralizer(const LieAlgebra& l, const std::vector<Vec>& set);
std::vector<Vec> center(const LieAlgebra& l);

/// map columns are images of basis vectors of `from` in `to`.
CheckReport check_lie_homomorphism(const LieAlgebra& from, const LieAlgebra& to,
                                   const Matrix& map);

}  // namespace satake

#endif  // SATAKE_LIE_HPP
