#ifndef SATAKE_MODELS_HPP
#define SATAKE_MODELS_HPP

#include <optional>
#include <string>
#include <vector>

#include "satake/constructions.hpp"
#include "satake/rootspace.hpp"

namespace satake {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A named real form built either as g_eps(S,S') or as the Tits model.
struct ModelInfo {
  std::string name;
  std::string real_form;  // e.g. "e6(-14)"
  std::string s;
  std::string s_prime;
  EpsilonTriple eps;
  bool tits = false;
  int dim = 0;
  int signature = 0;
};

const std::vector<ModelInfo>& model_catalog();
/// Throws ModelError for unknown names.
const ModelInfo& model_info(const std::string& name);

struct Model {
  ModelInfo info;
  LieAlgebra lie;
  std::optional<MagicSquareAlgebra> magic;
  std::optional<TitsModel> tits;
};

Model build_model(const std::string& name);
/// g_eps(S,S') from symmetric composition algebra names.
Model build_magic_model(const std::string& s, const std::string& s_prime,
                        const EpsilonTriple& eps);

/// Models with a Cartan subalgebra preset: e6m26, e6m14, e6p2.
const std::vector<std::string>& satake_models();
bool has_cartan_preset(const std::string& name);

/// The six generators of the adapted Cartan subalgebra. Throws ModelError
/// when the model does not match the preset.
CartanSpec preset_cartan(const Model& m);

/// Reference bases alpha_1..alpha_6 as covectors (values on h_1..h_6) in
/// their original sign convention. For e6m26 and e6m14 alpha_1 is not a
/// root of the algebra built from the product rules (nor alpha_6 for e6m14).
std::vector<Vec> paper_basis_literal(const std::string& name);

/// The reference bases with the sign of the t_{e6,e7} coordinate reversed
/// (h_4 for e6m26, h_3 for e6m14); e6p2 is unchanged.
std::vector<Vec> preset_basis(const std::string& name);

struct DecompositionBases {
  std::vector<Vec> t;
  std::vector<Vec> p;
};

/// e6m26: Der(A) + A0; e6m14: tri + tri' + iota_1 against iota_0 + iota_2;
/// e6p2: the assembly from the split F4 subalgebra.
DecompositionBases preset_cartan_decomposition(const Model& m,
                                               const CartanSpec& h);

}  // namespace satake

#endif  // SATAKE_MODELS_HPP
