#ifndef SATAKE_TESTS_SUPPORT_HPP
#define SATAKE_TESTS_SUPPORT_HPP

#include <Eigen/Dense>

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "satake/pipeline.hpp"

namespace test_support {

using namespace satake;

/// One pipeline run per model and process.
inline const PipelineResult& pipeline(const std::string& model) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<PipelineResult>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[model];
  if (!slot) slot = std::make_unique<PipelineResult>(run_satake_pipeline(model));
  return *slot;
}

inline const Model& model(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Model>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<Model>(build_model(name));
  return *slot;
}

/// Positive roots of a Cartan matrix generated from the simple roots by
/// root strings, as coefficient vectors.
inline std::set<std::vector<int>> oracle_positive_roots(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * a[j][i];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          --down[i];
          if (!roots.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          ++up[i];
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  return roots;
}

inline int oracle_root_count(const IntMatrix& a) {
  return 2 * static_cast<int>(oracle_positive_roots(a).size());
}

inline double to_double(const Scalar& x) {
  return x.a().get_d() + x.b().get_d() * 1.7320508075688772;
}

/// Inertia of a real symmetric matrix from floating point eigenvalues.
inline std::pair<int, int> numeric_inertia(const Matrix& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) d(r, c) = to_double(m(r, c));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d, Eigen::EigenvaluesOnly);
  const double tol = 1e-8 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  int plus = 0, minus = 0;
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    if (es.eigenvalues()(k) > tol) ++plus;
    if (es.eigenvalues()(k) < -tol) ++minus;
  }
  return {plus, minus};
}

inline Vec combination(const RootDatum& d, const std::vector<int>& basis,
                       const std::vector<int>& coeffs) {
  Vec v = zero_vec(d.rank());
  for (size_t k = 0; k < basis.size(); ++k) {
    v = v + Scalar(coeffs[k]) * d.roots[basis[k]].values;
  }
  return v;
}

}  // namespace test_support

#endif  // SATAKE_TESTS_SUPPORT_HPP
