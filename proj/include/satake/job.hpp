#ifndef SATAKE_JOB_HPP
#define SATAKE_JOB_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "satake/json_io.hpp"
#include "satake/models.hpp"
#include "satake/satake.hpp"

namespace satake {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A batch job read from JSON:
///   {"model": "e6m14" | {"S": "pO", "Sprime": "pC", "eps": "1,-1,1"}
///             | {"tits": true, "S": "pO", "eps": "1,1,1"},
///    "cartan": "preset" | {"h": [[[k, "c"], ...], ...],
///                          "a_indices": [...], "t_indices": [...]},
///    "basis": "preset" | "auto",
///    "checks": ["jacobi", "signature", "roots", "satake", "restricted",
///               "cartan-decomposition"],
///    "formats": ["ascii", "dot", "json"],
///    "out": "DIR"}
/// Scalars are strings parsed exactly.
struct JobConfig {
  std::string model;
  std::string s;
  std::string s_prime;
  EpsilonTriple eps;
  bool tits = false;
  bool preset_cartan = true;
  std::vector<SparseVec> h;
  std::vector<int> a_indices;
  std::vector<int> t_indices;
  bool preset_basis = true;
  std::vector<std::string> checks;
  std::vector<Format> formats;
  std::string out;

  bool wants(const std::string& check) const;
};

const std::vector<std::string>& job_checks();

/// Throws ConfigError on unknown keys, models, presets or checks.
JobConfig parse_job_config(const Json& j);

Model build_job_model(const JobConfig& c);

/// The preset or inline Cartan subalgebra. Inline vectors are validated to
/// commute; a failure throws StageError("cartan", ..., true).
CartanSpec job_cartan(const JobConfig& c, const Model& m);

}  // namespace satake

#endif  // SATAKE_JOB_HPP
