#ifndef SATAKE_PIPELINE_HPP
#define SATAKE_PIPELINE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satake/models.hpp"
#include "satake/satake.hpp"

namespace satake {

/// Failure of one pipeline stage. `verification` distinguishes a failed
/// check from a construction error.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what, bool verification)
      : std::runtime_error(stage + ": " + what),
        stage_(std::move(stage)),
        verification_(verification) {}
  const std::string& stage() const { return stage_; }
  bool verification() const { return verification_; }

 private:
  std::string stage_;
  bool verification_;
};

struct PipelineResult {
  Model model;
  CartanSpec cartan;
  SignatureReport signature;
  RootDatum datum;
  CheckReport axioms;
  std::vector<int> basis;
  std::vector<int> auto_basis;
  SatakeDiagram diagram;
  SatakeDiagram auto_diagram;
  RestrictedSystem restricted;
  RestrictedSystem auto_restricted;
  RestrictedTable table;
  std::string compact_type;
  int compact_root_count = 0;
};

/// Preset Cartan subalgebra, decomposition, preset basis verification,
/// Satake diagram and restricted table, plus the auto basis for comparison.
PipelineResult run_satake_pipeline(const std::string& model);

/// Same stages for an arbitrary model and Cartan subalgebra. Without an
/// explicit basis the auto basis is used for both.
PipelineResult run_satake_pipeline(Model model, CartanSpec h,
                                   const std::optional<std::vector<Vec>>& basis);

/// Expected Satake data of one real form of e6.
struct TableReference {
  std::string cartan_label;  // EI, EII, EIII, EIV
  std::string model;         // empty when not computed
  SatakeDiagram diagram;     // Bourbaki numbering
  std::string restricted_type;
  std::vector<std::pair<int, int>> multiplicities;  // sorted (m, m2)
};

const std::vector<TableReference>& table_references();
const TableReference& table_reference_for(const std::string& model);

/// Empty when the computed result matches the reference.
std::vector<std::string> compare_to_reference(const PipelineResult& r,
                                              const TableReference& ref);

/// Sorted (m, m2) pairs of a restricted table.
std::vector<std::pair<int, int>> multiplicity_multiset(const RestrictedTable& t);

}  // namespace satake

#endif  // SATAKE_PIPELINE_HPP
