#include "satake/job.hpp"

#include <algorithm>
#include <set>

#include "satake/pipeline.hpp"

namespace satake {

namespace {

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

std::vector<int> index_list(const Json& j, const std::string& key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<int>>();
}

void parse_model(const Json& j, JobConfig& c) {
  if (j.is_string()) {
    c.model = j.get<std::string>();
    model_info(c.model);
    return;
  }
  if (!j.is_object()) throw ConfigError("model must be a name or an object");
  check_keys(j, {"S", "Sprime", "eps", "tits"}, "model");
  c.tits = j.value("tits", false);
  c.s = j.at("S").get<std::string>();
  c.s_prime = c.tits ? "R" : j.at("Sprime").get<std::string>();
  c.eps = EpsilonTriple::parse(j.value("eps", std::string("1,1,1")));
}

void parse_cartan(const Json& j, JobConfig& c) {
  if (j.is_string()) {
    if (j.get<std::string>() != "preset") throw ConfigError("cartan must be \"preset\" or inline");
    if (!has_cartan_preset(c.model)) throw ConfigError("no Cartan preset for '" + c.model + "'");
    c.preset_cartan = true;
    return;
  }
  check_keys(j, {"h", "a_indices", "t_indices"}, "cartan");
  c.preset_cartan = false;
  for (const auto& v : j.at("h")) c.h.push_back(sparse_from_json(v));
  c.a_indices = index_list(j, "a_indices");
  c.t_indices = index_list(j, "t_indices");
  std::vector<int> all = c.a_indices;
  all.insert(all.end(), c.t_indices.begin(), c.t_indices.end());
  std::sort(all.begin(), all.end());
  for (size_t k = 0; k < all.size(); ++k) {
    if (all[k] != static_cast<int>(k)) {
      throw ConfigError("a_indices and t_indices must partition 0.." +
                        std::to_string(c.h.size() - 1));
    }
  }
  if (all.size() != c.h.size()) throw ConfigError("a_indices and t_indices must cover h");
}

}  // namespace

bool JobConfig::wants(const std::string& check) const {
  return std::find(checks.begin(), checks.end(), check) != checks.end();
}

const std::vector<std::string>& job_checks() {
  static const std::vector<std::string> names = {
      "jacobi", "signature", "roots", "satake", "restricted", "cartan-decomposition"};
  return names;
}

JobConfig parse_job_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("job config must be an object");
  check_keys(j, {"model", "cartan", "basis", "checks", "formats", "out"}, "job");
  JobConfig c;
  try {
    parse_model(j.at("model"), c);
  } catch (const ModelError& e) {
    throw ConfigError(e.what());
  }
  if (j.contains("cartan")) {
    parse_cartan(j.at("cartan"), c);
  } else {
    c.preset_cartan = !c.model.empty() && has_cartan_preset(c.model);
  }
  const std::string basis = j.value("basis", std::string(c.preset_cartan ? "preset" : "auto"));
  if (basis != "preset" && basis != "auto") throw ConfigError("basis must be preset or auto");
  c.preset_basis = basis == "preset";
  if (c.preset_basis && !c.preset_cartan) {
    throw ConfigError("a preset basis needs the preset Cartan subalgebra");
  }
  c.checks = j.value("checks", std::vector<std::string>{"jacobi", "signature"});
  for (const auto& k : c.checks) {
    const auto& known = job_checks();
    if (std::find(known.begin(), known.end(), k) == known.end()) {
      throw ConfigError("unknown check '" + k + "'");
    }
  }
  const bool needs_cartan = c.wants("roots") || c.wants("satake") || c.wants("restricted") ||
                            c.wants("cartan-decomposition");
  if (needs_cartan && !c.preset_cartan && c.h.empty()) {
    throw ConfigError("root checks need a Cartan subalgebra");
  }
  if (c.wants("cartan-decomposition") && !c.preset_cartan) {
    throw ConfigError("cartan-decomposition needs the preset Cartan subalgebra");
  }
  for (const auto& f : j.value("formats", std::vector<std::string>{"json"})) {
    try {
      c.formats.push_back(parse_format(f));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  c.out = j.value("out", std::string());
  return c;
}

Model build_job_model(const JobConfig& c) {
  if (!c.model.empty()) return build_model(c.model);
  if (!c.tits) return build_magic_model(c.s, c.s_prime, c.eps);
  Model m;
  m.tits = tits_model(symmetric_composition(c.s), c.eps);
  m.lie = m.tits->lie;
  m.info.name = m.lie.name();
  m.info.s = c.s;
  m.info.s_prime = "R";
  m.info.eps = c.eps;
  m.info.tits = true;
  m.info.dim = m.lie.dim();
  return m;
}

CartanSpec job_cartan(const JobConfig& c, const Model& m) {
  if (c.preset_cartan) return preset_cartan(m);
  CartanSpec h;
  h.label = m.info.name;
  const int n = m.lie.dim();
  for (const auto& v : c.h) {
    if (!v.empty() && v.back().first >= n) {
      throw ConfigError("Cartan vector index out of range for dim " + std::to_string(n));
    }
    h.h.push_back(to_dense(v, n));
  }
  h.a_indices = c.a_indices;
  h.t_indices = c.t_indices;
  for (int i = 0; i < h.rank(); ++i) {
    for (int j = i + 1; j < h.rank(); ++j) {
      if (!is_zero(m.lie.bracket(h.h[i], h.h[j]))) {
        throw StageError("cartan", "h" + std::to_string(i + 1) + " and h" +
                                       std::to_string(j + 1) + " do not commute",
                         true);
      }
    }
  }
  return h;
}

}  // namespace satake
