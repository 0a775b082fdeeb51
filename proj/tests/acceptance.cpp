#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "satake/eii.hpp"
#include "satake/lie.hpp"
#include "satake/pipeline.hpp"
#include "support.hpp"

using namespace satake;
using test_support::pipeline;

namespace {

// All quantities are exact; every comparison below is equality.
constexpr const char* kTolerance = "exact";
constexpr std::uint64_t kSeed = 20240611;
constexpr int kJordanTrials = 100;
constexpr int kCongruences = 20;

struct Outcome {
  std::vector<std::string> failures;
  std::ostringstream info;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class T>
  void expect_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      failures.push_back(os.str());
    }
  }
};

struct Cell {
  const char* s;
  const char* sp;
  EpsilonTriple eps;
  int signature;
};

const std::vector<Cell>& signature_cells() {
  static const std::vector<Cell> cells = {
      {"pO", "R", EpsilonTriple(1, 1, 1), -52},     {"pO", "pC", EpsilonTriple(1, 1, 1), -78},
      {"pO", "pRR", EpsilonTriple(1, 1, 1), -26},   {"pOs", "R", EpsilonTriple(1, 1, 1), 4},
      {"pOs", "pC", EpsilonTriple(1, 1, 1), 2},     {"pOs", "pRR", EpsilonTriple(1, 1, 1), 6},
      {"pO", "R", EpsilonTriple(1, -1, 1), -20},    {"pO", "pC", EpsilonTriple(1, -1, 1), -14},
      {"pO", "pRR", EpsilonTriple(1, -1, 1), -26},  {"pOs", "R", EpsilonTriple(1, -1, 1), 4},
      {"pOs", "pC", EpsilonTriple(1, -1, 1), 2},    {"pOs", "pRR", EpsilonTriple(1, -1, 1), 6},
  };
  return cells;
}

const std::vector<Model>& cell_models() {
  static const std::vector<Model> models = [] {
    std::vector<Model> out;
    for (const Cell& c : signature_cells()) out.push_back(build_magic_model(c.s, c.sp, c.eps));
    return out;
  }();
  return models;
}

std::string cell_name(const Cell& c) {
  return std::string("g(") + c.eps.str() + ")(" + c.s + "," + c.sp + ")";
}

int black_count(const SatakeDiagram& d) {
  int n = 0;
  for (const auto& node : d.nodes) n += node.filled;
  return n;
}

void criterion1(Outcome& o) {
  int cells = 0;
  for (size_t k = 0; k < signature_cells().size(); ++k) {
    const Cell& c = signature_cells()[k];
    o.expect_eq(killing_signature(cell_models()[k].lie).signature(), c.signature,
                "signature " + cell_name(c));
    ++cells;
  }
  for (const auto& info : model_catalog()) {
    o.expect_eq(killing_signature(test_support::model(info.name).lie).signature(), info.signature,
                "signature " + info.name);
  }
  o.info << cells << " table cells and " << model_catalog().size() << " catalog models";
}

void criterion2(Outcome& o) {
  const PipelineResult& r = pipeline("e6m26");
  o.expect_eq(r.datum.size(), 72, "|Delta|");
  o.expect_eq(r.compact_type, std::string("D4"), "Delta0 type");
  o.expect_eq(r.compact_root_count, 24, "|Delta0|");
  o.expect_eq(black_count(r.diagram), 4, "black nodes");
  o.expect_eq(r.diagram.arrows.size(), size_t{0}, "arrows");
  o.expect_eq(r.restricted.type, std::string("A2"), "Sigma type");
  o.expect_eq(r.restricted.multiplicity(r.datum.restrict(r.datum.roots[r.basis[0]].values)), 8, "m(bar a1)");
  o.expect_eq(r.restricted.multiplicity(r.datum.restrict(r.datum.roots[r.basis[5]].values)), 8, "m(bar a6)");
  o.expect_eq(r.restricted.total_multiplicity(), 48, "multiplicity sum");
  o.info << "D4 / A2 / m 8,8 / sum " << r.restricted.total_multiplicity();
}

void criterion3(Outcome& o) {
  const PipelineResult& r = pipeline("e6m14");
  o.expect_eq(r.compact_type, std::string("A3"), "Delta0 type");
  o.expect_eq(black_count(r.diagram), 3, "black nodes");
  o.expect(r.diagram.arrows == std::vector<std::pair<int, int>>{{0, 5}}, "exactly the arrow (a1, a6)");
  o.expect_eq(r.restricted.type, std::string("BC2"), "Sigma type");
  o.expect(!r.restricted.reduced, "nonreduced detected");
  const Scalar half = Scalar::rational(1, 2);
  o.expect_eq(r.restricted.multiplicity({half, half}), 8, "m((w5+w6)/2)");
  o.expect_eq(r.restricted.multiplicity({1, 1}), 1, "m(w5+w6)");
  o.expect_eq(r.restricted.multiplicity({-1, 0}), 6, "m(-w5)");
  o.expect_eq(r.restricted.total_multiplicity(), 60, "multiplicity sum");
  const Vec top = test_support::combination(r.datum, r.basis, {1, 2, 2, 3, 2, 1});
  o.expect(r.datum.find(top).has_value(), "maximal root is a root");
  o.expect(r.datum.restrict(top) == Vec{1, 1}, "maximal root restricts to w5+w6");
  o.expect_eq(r.restricted.multiplicity(r.datum.restrict(top)), 1, "maximal root multiplicity");
  o.info << "A3 / BC2 / m 8,1,6 / sum " << r.restricted.total_multiplicity();
}

void criterion4(Outcome& o) {
  const PipelineResult& r = pipeline("e6p2");
  o.expect_eq(black_count(r.diagram), 0, "black nodes");
  o.expect_eq(r.diagram.arrows.size(), size_t{2}, "arrows");
  o.expect_eq(r.restricted.type, std::string("F4"), "Sigma type");
  std::map<std::string, int> want = {{"bar(a1)", 2}, {"bar(a2)", 1}, {"bar(a3)", 2}, {"bar(a4)", 1}};
  std::map<std::string, int> got;
  for (const auto& row : r.table.rows) {
    got[row.label] = row.m;
    o.expect_eq(row.m2, 0, "m2 of " + row.label);
  }
  o.expect(got == want, "multiplicities 2 on i=1,3 and 1 on i=2,4");
  o.expect_eq(r.restricted.total_multiplicity(), 72, "multiplicity sum");
  const DecompositionBases b = preset_cartan_decomposition(r.model, r.cartan);
  const CartanDecompositionReport rep = verify_cartan_decomposition(r.model.lie, b.t, b.p);
  o.expect(rep.passed(), "assembled (t, p) passes verify_cartan_decomposition");
  o.expect_eq(rep.dim_t, 38, "dim t");
  o.expect_eq(rep.dim_p, 36, "dim p");
  o.info << "F4 / m 2,1,2,1 / sum " << r.restricted.total_multiplicity()
         << " / (t, p) passes=" << (rep.passed() ? "yes" : "no") << " with dims (" << rep.dim_t
         << ", " << rep.dim_p << ")";
}

void criterion5(Outcome& o) {
  struct Case {
    const char* name;
    int real_rank, arrows, black;
  };
  for (const Case& c : {Case{"e6m26", 2, 0, 4}, Case{"e6m14", 2, 1, 3}, Case{"e6p2", 4, 2, 0}}) {
    const RankIdentity id = rank_identity(pipeline(c.name).diagram);
    o.expect(id.holds(), std::string(c.name) + " rank identity");
    o.expect_eq(id.rank, 6, std::string(c.name) + " rank");
    o.expect_eq(id.real_rank, c.real_rank, std::string(c.name) + " real rank");
    o.expect_eq(id.arrows, c.arrows, std::string(c.name) + " arrows");
    o.expect_eq(id.black, c.black, std::string(c.name) + " black");
    o.info << c.name << " 6=" << id.real_rank << "+" << id.arrows << "+" << id.black << " ";
  }
}

void criterion6(Outcome& o) {
  int lie = 0;
  auto jacobi = [&](const LieAlgebra& l) {
    o.expect(certify_jacobi(l).passed(), "Jacobi " + l.name());
    ++lie;
  };
  for (const Model& m : cell_models()) jacobi(m.lie);
  jacobi(test_support::model("e6m26").lie);
  for (const char* s : {"pO", "pOs", "Ok", "Oks", "pC", "pH"}) jacobi(triality_algebra(symmetric_composition(s)).lie());
  for (HurwitzKind k : all_hurwitz_kinds()) {
    const AlgebraTable a = hurwitz(k);
    o.expect(check_composition(a).passed, "composition " + a.name);
    o.expect(check_unit(a).passed && check_quadratic_equation(a).passed, "unit " + a.name);
  }
  for (const char* s : {"pO", "pOs", "Ok", "Oks"}) {
    o.expect(check_composition(symmetric_composition(s)).passed, std::string("composition ") + s);
  }
  for (const char* s : {"R", "pRR", "pC", "pMat2", "pH", "pO", "pOs", "Ok", "Oks"}) {
    o.expect(check_symmetric(symmetric_composition(s)).passed, std::string("symmetric ") + s);
  }
  int alberts = 0;
  for (const char* s : {"pO", "pOs", "Ok", "Oks"}) {
    for (EpsilonTriple eps : {EpsilonTriple(1, 1, 1), EpsilonTriple(1, -1, 1)}) {
      const AlgebraTable a = albert(symmetric_composition(s), eps);
      o.expect(check_jordan_sampled(a, kJordanTrials, kSeed).passed, "Jordan " + a.name);
      ++alberts;
    }
  }
  const CheckReport iso = check_albert_matrix_iso();
  o.expect(iso.passed, "Albert matrix isomorphism");
  o.info << lie << " Lie algebras, 7 Hurwitz, 9 symmetric, " << alberts << " Albert (seed " << kSeed
         << ", " << kJordanTrials << " trials), iso " << iso.checked << " pairs";
}

void criterion7(Outcome& o) {
  o.expect_eq(triality_algebra(symmetric_composition("pO")).dim(), 28, "dim tri(pO)");
  const TrialityAlgebra c = triality_algebra(symmetric_composition("pC"));
  o.expect_eq(c.dim(), 2, "dim tri(pC)");
  o.expect_eq(center(c.lie()).size(), size_t{2}, "tri(pC) abelian");
  const MagicSquareAlgebra& g = *test_support::model("f4m52").magic;
  const RhoMap rho = rho_map(g);
  o.expect_eq(derivations(rho.albert).algebra.dim(), 52, "dim Der(A)");
  o.expect_eq(rank(rho.matrix), 52, "dim rho image");
  o.expect(check_rho(g, rho).passed, "rho bijective homomorphism");
  o.info << "tri(pO) 28, tri(pC) 2 abelian, Der(A) 52, rho rank 52";
}

void criterion8(Outcome& o) {
  for (const char* name : {"f4m20", "e6m14"}) {
    o.expect(check_killing_invariance(test_support::model(name).lie).passed,
             std::string("Killing invariance ") + name);
  }
  const Matrix& k = test_support::model("e6m14").lie.killing();
  const SignatureReport base = signature(k);
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> idx(0, k.rows() - 1), mult(-2, 2);
  for (int t = 0; t < kCongruences; ++t) {
    Matrix p = Matrix::identity(k.rows());
    for (int step = 0; step < 3 * k.rows(); ++step) {
      const int i = idx(rng), j = idx(rng);
      if (i == j) continue;
      const Scalar c(mult(rng));
      for (int r = 0; r < k.rows(); ++r) p(r, i) += c * p(r, j);
    }
    o.expect(signature(p.transpose() * k * p) == base, "congruence " + std::to_string(t));
  }
  for (const char* name : {"e6m26", "e6m14", "e6p2"}) {
    const PipelineResult& r = pipeline(name);
    o.expect(r.axioms.passed, std::string("root strings ") + name);
    o.expect(isomorphic(r.diagram, r.auto_diagram), std::string("auto basis ") + name);
    o.expect(multiplicity_multiset(r.table) ==
                 multiplicity_multiset(build_restricted_table(r.auto_restricted)),
             std::string("auto restricted table ") + name);
  }
  o.info << "invariance f4m20+e6m14, " << kCongruences << " congruences, root axioms and auto basis x3";
}

const std::vector<std::function<void(Outcome&)>> kCriteria = {
    criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int k = 1; k < argc; ++k) which.push_back(std::atoi(argv[k]));
  if (which.empty()) {
    for (int k = 1; k <= static_cast<int>(kCriteria.size()); ++k) which.push_back(k);
  }
  int failed = 0;
  for (int n : which) {
    if (n < 1 || n > static_cast<int>(kCriteria.size())) {
      std::cerr << "no criterion " << n << "\n";
      return 64;
    }
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      kCriteria[n - 1](o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.failures.empty();
    failed += !ok;
    std::printf("criterion %d: %s  tol=%s  %.1fs  %s\n", n, ok ? "PASS" : "FAIL", kTolerance, secs,
                o.info.str().c_str());
    for (const auto& f : o.failures) std::printf("  failed: %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
