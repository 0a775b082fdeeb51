#include "satake/pipeline.hpp"

#include <algorithm>

#include "satake/lie.hpp"

namespace satake {

namespace {

template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what(), false);
  }
}

void require(const std::string& name, bool ok, const std::string& what) {
  if (!ok) throw StageError(name, what, true);
}

SatakeDiagram e6_reference(const std::string& name, std::vector<int> black,
                           std::vector<std::pair<int, int>> arrows, int real_rank) {
  SatakeDiagram d = compact_satake(catalog_cartan('E', 6), name);
  for (auto& n : d.nodes) n.filled = false;
  for (int b : black) d.nodes[b - 1].filled = true;
  for (auto [a, b] : arrows) d.arrows.push_back({a - 1, b - 1});
  d.real_rank = real_rank;
  return d;
}

}  // namespace

PipelineResult run_satake_pipeline(const std::string& model) {
  Model m = stage("construct", [&] { return build_model(model); });
  CartanSpec h = stage("cartan", [&] { return preset_cartan(m); });
  std::vector<Vec> basis = stage("basis", [&] { return preset_basis(model); });
  return run_satake_pipeline(std::move(m), std::move(h), basis);
}

PipelineResult run_satake_pipeline(Model model, CartanSpec h,
                                   const std::optional<std::vector<Vec>>& basis) {
  PipelineResult r;
  r.model = std::move(model);
  r.cartan = std::move(h);
  if (r.cartan.label.empty()) r.cartan.label = r.model.info.name;
  const std::string& name = r.model.info.name;
  r.signature = stage("signature", [&] { return killing_signature(r.model.lie); });
  r.datum = stage("decompose", [&] { return root_decomposition(r.model.lie, r.cartan); });
  r.axioms = stage("root-axioms", [&] { return check_root_axioms(r.datum); });
  require("root-axioms", r.axioms.passed, r.axioms.summary());

  r.auto_basis = stage("auto-basis", [&] { return auto_adapted_basis(r.datum); });
  if (basis) {
    r.basis = stage("basis", [&] { return roots_from_values(r.datum, *basis); });
    const BasisReport rep = verify_basis(r.datum, r.basis);
    require("basis", rep.passed, rep.witness);
  } else {
    r.basis = r.auto_basis;
  }

  const int sig = r.signature.signature();
  r.diagram = stage("satake", [&] { return build_satake(r.datum, r.basis, name, sig); });
  r.auto_diagram =
      stage("satake", [&] { return build_satake(r.datum, r.auto_basis, name, sig); });
  require("satake", rank_identity(r.diagram).holds(), "rank identity fails");

  r.restricted = stage("restricted", [&] { return restricted_system(r.datum, r.basis); });
  r.auto_restricted =
      stage("restricted", [&] { return restricted_system(r.datum, r.auto_basis); });
  r.table = build_restricted_table(r.restricted, name);

  const auto t = classify(cartan_matrix(r.datum, compact_part(r.datum, r.basis)));
  r.compact_type = t ? t->name() : "unknown";
  r.compact_root_count = static_cast<int>(r.datum.compact_roots().size());
  return r;
}

const std::vector<TableReference>& table_references() {
  static const std::vector<TableReference> refs = {
      {"EI", "", e6_reference("EI", {}, {}, 6), "E6",
       {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}},
      {"EII", "e6p2", e6_reference("EII", {}, {{1, 6}, {3, 5}}, 4), "F4",
       {{1, 0}, {1, 0}, {2, 0}, {2, 0}}},
      {"EIII", "e6m14", e6_reference("EIII", {3, 4, 5}, {{1, 6}}, 2), "BC2", {{6, 0}, {8, 1}}},
      {"EIV", "e6m26", e6_reference("EIV", {2, 3, 4, 5}, {}, 2), "A2", {{8, 0}, {8, 0}}},
  };
  return refs;
}

const TableReference& table_reference_for(const std::string& model) {
  for (const auto& r : table_references()) {
    if (r.model == model) return r;
  }
  throw ModelError("no reference row for " + model);
}

std::vector<std::pair<int, int>> multiplicity_multiset(const RestrictedTable& t) {
  std::vector<std::pair<int, int>> out;
  for (const auto& row : t.rows) out.push_back({row.m, row.m2});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> compare_to_reference(const PipelineResult& r,
                                              const TableReference& ref) {
  std::vector<std::string> out;
  if (!isomorphic(r.diagram, ref.diagram)) out.push_back("Satake diagram differs");
  if (r.diagram.real_rank != ref.diagram.real_rank) {
    out.push_back("real rank " + std::to_string(r.diagram.real_rank) + " != " +
                  std::to_string(ref.diagram.real_rank));
  }
  if (r.restricted.type != ref.restricted_type) {
    out.push_back("restricted type " + r.restricted.type + " != " + ref.restricted_type);
  }
  if (multiplicity_multiset(r.table) != ref.multiplicities) {
    out.push_back("restricted multiplicities differ");
  }
  return out;
}

}  // namespace satake
