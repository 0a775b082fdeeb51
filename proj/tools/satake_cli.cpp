#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "satake/job.hpp"
#include "satake/json_io.hpp"
#include "satake/kernels.hpp"
#include "satake/pipeline.hpp"

using namespace satake;

namespace {

constexpr int kVerification = 2;
constexpr int kConstruction = 3;
constexpr int kIo = 4;
constexpr std::uint64_t kJordanSeed = 20240611;
constexpr int kJordanTrials = 100;

class CliError : public std::runtime_error {
 public:
  CliError(int code, std::string stage, const std::string& what)
      : std::runtime_error(what), code_(code), stage_(std::move(stage)) {}
  int code() const { return code_; }
  const std::string& stage() const { return stage_; }

 private:
  int code_;
  std::string stage_;
};

struct Globals {
  std::string format = "ascii";
  std::string out;
};

Globals g_opts;

Format format() { return parse_format(g_opts.format); }

std::string sanitize(const std::string& name) {
  std::string s;
  for (char c : name) s += std::isalnum(static_cast<unsigned char>(c)) || c == '-' ? c : '_';
  return s;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) {
    throw CliError(kIo, "write", "cannot write " + path.string());
  }
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CliError(kIo, "read", "cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw CliError(kIo, "read", path + ": " + e.what());
  }
}

/// Writes to DIR/file when --out is set, stdout otherwise.
void emit(const std::string& text, const std::string& file) {
  if (g_opts.out.empty()) {
    std::cout << text;
  } else {
    write_file(std::filesystem::path(g_opts.out) / file, text);
  }
}

void emit_json(const Json& j, const std::string& file) { emit(j.dump(2) + "\n", file); }

void verify(bool ok, const std::string& stage, const std::string& what) {
  if (!ok) throw CliError(kVerification, stage, what);
}

AlgebraTable named_algebra(const std::string& name, const std::string& s,
                           const std::string& eps) {
  if (name == "albert") return albert(symmetric_composition(s), EpsilonTriple::parse(eps));
  if (name == "h3O") return h3_octonions();
  if (auto k = hurwitz_kind(name)) return hurwitz(*k);
  return symmetric_composition(name);
}

struct LieSource {
  std::string model;
  std::string file;
};

LieAlgebra load_lie(const LieSource& src) {
  if (!src.file.empty()) return lie_from_json(read_json(src.file));
  if (src.model.empty()) throw CliError(kConstruction, "input", "need --model or --file");
  return build_model(src.model).lie;
}

// algebra build / check

void cmd_algebra_build(const std::string& name, const std::string& s, const std::string& eps) {
  const AlgebraTable a = named_algebra(name, s, eps);
  emit_json(to_json(a), sanitize(a.name) + ".json");
}

void cmd_algebra_check(const std::string& name, const std::string& file, const std::string& s,
                       const std::string& eps, bool exhaustive, bool albert_iso) {
  const AlgebraTable a = file.empty() ? named_algebra(name, s, eps) : algebra_from_json(read_json(file));
  std::vector<CheckReport> reports;
  Json meta = Json::object();
  if (a.trace) {
    reports.push_back(check_commutative(a));
    if (exhaustive) {
      reports.push_back(check_jordan_exhaustive(a));
    } else {
      reports.push_back(check_jordan_sampled(a, kJordanTrials, kJordanSeed));
      meta["jordan_seed"] = kJordanSeed;
      meta["jordan_trials"] = kJordanTrials;
    }
  } else {
    reports.push_back(check_composition(a));
    if (a.unit) {
      reports.push_back(check_unit(a));
      reports.push_back(check_quadratic_equation(a));
    }
    if (!a.unit || a.dim == 1) reports.push_back(check_symmetric(a));
  }
  if (albert_iso) reports.push_back(check_albert_matrix_iso());
  Json out;
  out["algebra"] = a.name;
  out["dim"] = a.dim;
  out["checks"] = Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    out["checks"].push_back(to_json(r));
    ok = ok && r.passed;
  }
  out["passed"] = ok;
  out["meta"] = meta;
  emit_json(out, sanitize(a.name) + ".check.json");
  verify(ok, "algebra-check", a.name + " failed a check");
}

// lie check / killing / signature / derivations

void cmd_lie_check(const LieSource& src, bool invariance) {
  const LieAlgebra l = load_lie(src);
  Json out;
  out["name"] = l.name();
  out["dim"] = l.dim();
  const CheckReport jac = jacobi_report(l);
  out["jacobi"] = to_json(jac);
  bool ok = jac.passed;
  if (invariance) {
    const CheckReport inv = check_killing_invariance(l);
    out["killing_invariance"] = to_json(inv);
    ok = ok && inv.passed;
  }
  out["passed"] = ok;
  emit_json(out, sanitize(l.name()) + ".check.json");
  verify(ok, "lie-check", l.name() + " failed a check");
}

void cmd_lie_killing(const LieSource& src) {
  const LieAlgebra l = load_lie(src);
  Json out;
  out["name"] = l.name();
  out["dim"] = l.dim();
  out["killing"] = matrix_json(l.killing());
  emit_json(out, sanitize(l.name()) + ".killing.json");
}

void cmd_lie_signature(const LieSource& src) {
  const LieAlgebra l = load_lie(src);
  const SignatureReport s = killing_signature(l);
  Json out;
  out["name"] = l.name();
  out["dim"] = l.dim();
  out["killing"] = to_json(s);
  out["signature"] = s.signature();
  bool ok = true;
  if (!src.model.empty() && src.file.empty()) {
    const int expected = model_info(src.model).signature;
    out["expected_signature"] = expected;
    ok = expected == s.signature();
  }
  emit_json(out, sanitize(l.name()) + ".signature.json");
  verify(ok, "signature", "signature differs from the catalog value");
}

void cmd_lie_derivations(const std::string& name, const std::string& s, const std::string& eps) {
  const AlgebraTable a = named_algebra(name, s, eps);
  const LinearLieAlgebra d = derivations(a);
  Json out;
  out["algebra"] = a.name;
  out["dim"] = d.algebra.dim();
  out["lie"] = to_json(d.algebra);
  emit_json(out, sanitize(a.name) + ".der.json");
}

// construct magic / tits, build

Json certified_lie_json(const LieAlgebra& l, std::optional<int> expected) {
  const CheckReport jac = jacobi_report(l);
  const SignatureReport sig = killing_signature(l);
  Json out;
  out["name"] = l.name();
  out["dim"] = l.dim();
  out["signature"] = sig.signature();
  if (expected) out["expected_signature"] = *expected;
  out["killing"] = to_json(sig);
  out["jacobi"] = to_json(jac);
  out["lie"] = to_json(l);
  return out;
}

void finish_certified(const Json& out, const std::string& file) {
  emit_json(out, file);
  verify(out["jacobi"]["passed"].get<bool>(), "jacobi", "Jacobi identity fails");
  if (out.contains("expected_signature")) {
    verify(out["signature"] == out["expected_signature"], "signature",
           "signature differs from the catalog value");
  }
}

void cmd_construct_magic(const std::string& preset, const std::string& s, const std::string& sp,
                         const std::string& eps) {
  if (!preset.empty()) {
    const Model m = build_model(preset);
    finish_certified(certified_lie_json(m.lie, m.info.signature), preset + ".json");
    return;
  }
  const Model m = build_magic_model(s, sp, EpsilonTriple::parse(eps));
  finish_certified(certified_lie_json(m.lie, std::nullopt), sanitize(m.lie.name()) + ".json");
}

void cmd_construct_tits(const std::string& s, const std::string& eps, bool rho) {
  const TitsModel t = tits_model(symmetric_composition(s), EpsilonTriple::parse(eps));
  Json out = certified_lie_json(t.lie, std::nullopt);
  if (rho) out["rho"] = to_json(check_rho(t.f4, rho_map(t.f4)));
  finish_certified(out, sanitize(t.lie.name()) + ".json");
  if (rho) verify(out["rho"]["passed"].get<bool>(), "rho", "rho is not a bijective homomorphism");
}

void cmd_build(const std::string& name) {
  const Model m = build_model(name);
  Json out = certified_lie_json(m.lie, m.info.signature);
  out["model"] = name;
  out["real_form"] = m.info.real_form;
  finish_certified(out, name + ".json");
}

// roots

std::vector<int> select_basis(const RootDatum& d, const std::string& model, const std::string& which) {
  if (which == "auto") return auto_adapted_basis(d);
  const std::vector<int> b = roots_from_values(d, preset_basis(model));
  const BasisReport rep = verify_basis(d, b);
  verify(rep.passed, "basis", rep.witness);
  return b;
}

struct RootsRun {
  Model model;
  CartanSpec h;
  RootDatum datum;
};

RootsRun decompose(const std::string& model, const std::string& cartan) {
  if (cartan != "preset") throw CliError(kConstruction, "cartan", "only the preset Cartan subalgebra is named");
  RootsRun r{build_model(model), {}, {}};
  r.h = preset_cartan(r.model);
  r.datum = root_decomposition(r.model.lie, r.h);
  return r;
}

void cmd_roots_decompose(const std::string& model, const std::string& cartan, const std::string& basis) {
  const RootsRun r = decompose(model, cartan);
  emit_json(to_json(r.datum, select_basis(r.datum, model, basis)), model + ".roots.json");
}

void cmd_roots_restricted(const std::string& model, const std::string& cartan, const std::string& basis) {
  const RootsRun r = decompose(model, cartan);
  const RestrictedSystem rs = restricted_system(r.datum, select_basis(r.datum, model, basis));
  if (format() == Format::Json) {
    Json out = to_json(rs);
    out["table"] = to_json(build_restricted_table(rs, model));
    emit_json(out, model + ".restricted.json");
  } else {
    emit(render(build_restricted_table(rs, model), format()),
         model + ".restricted." + format_extension(format()));
  }
}

void cmd_roots_verify_cartan(const std::string& model, const std::string& cartan) {
  const RootsRun r = decompose(model, cartan);
  const DecompositionBases b = preset_cartan_decomposition(r.model, r.h);
  const CartanDecompositionReport rep = verify_cartan_decomposition(r.model.lie, b.t, b.p);
  Json out = to_json(rep);
  out["model"] = model;
  emit_json(out, model + ".cartan-decomposition.json");
  verify(rep.passed(), "cartan-decomposition", "Cartan decomposition check fails");
}

// satake, table

void emit_pipeline(const PipelineResult& r, const std::string& stem, const std::vector<Format>& formats) {
  for (Format f : formats) {
    const std::string ext = format_extension(f);
    if (f == Format::Json) {
      Json out;
      out["satake"] = to_json(r.diagram);
      out["restricted"] = to_json(r.table);
      write_file(std::filesystem::path(g_opts.out) / (stem + ".json"), out.dump(2) + "\n");
    } else {
      write_file(std::filesystem::path(g_opts.out) / (stem + ".satake." + ext), render(r.diagram, f));
      write_file(std::filesystem::path(g_opts.out) / (stem + ".restricted." + ext), render(r.table, f));
    }
  }
}

void print_pipeline(const PipelineResult& r) {
  if (format() == Format::Json) {
    Json out;
    out["satake"] = to_json(r.diagram);
    out["restricted"] = to_json(r.table);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render(r.diagram, format()) << render(r.table, format());
  }
}

void cmd_satake(const std::string& model, const std::string& basis) {
  PipelineResult r = run_satake_pipeline(model);
  if (basis == "auto") {
    r.basis = r.auto_basis;
    r.diagram = r.auto_diagram;
    r.restricted = r.auto_restricted;
    r.table = build_restricted_table(r.restricted, model);
  }
  if (g_opts.out.empty()) {
    print_pipeline(r);
  } else {
    emit_pipeline(r, model, {Format::Ascii, Format::Dot, Format::Json});
  }
}

std::string mult_text(const std::vector<std::pair<int, int>>& ms) {
  std::string s;
  for (auto [m, m2] : ms) s += (s.empty() ? "" : " ") + std::to_string(m) + "/" + std::to_string(m2);
  return s;
}

Json mult_json(const std::vector<std::pair<int, int>>& ms) {
  Json out = Json::array();
  for (auto [m, m2] : ms) out.push_back(Json::array({m, m2}));
  return out;
}

int cmd_table(const std::string& only, bool json) {
  Json rows = Json::array();
  std::ostringstream text;
  text << "row   model   computed  type  black  arrows  real_rank  Sigma  m/m2         match\n";
  bool all_ok = true;
  bool any = false;
  for (const auto& ref : table_references()) {
    if (!only.empty() && only != ref.model && only != ref.cartan_label) continue;
    any = true;
    const RankIdentity ri = rank_identity(ref.diagram);
    Json row;
    row["row"] = ref.cartan_label;
    row["model"] = ref.model.empty() ? Json(nullptr) : Json(ref.model);
    Json expected;
    expected["satake"] = to_json(ref.diagram);
    expected["restricted_type"] = ref.restricted_type;
    expected["multiplicities"] = mult_json(ref.multiplicities);
    char line[256];
    if (ref.model.empty()) {
      row["computed"] = false;
      row["status"] = "not computed";
      row["expected"] = expected;
      std::snprintf(line, sizeof line, "%-5s %-7s %-9s %-5s %-6d %-7d %-10d %-6s %-12s %s\n",
                    ref.cartan_label.c_str(), "-", "no", "E6", ri.black, ri.arrows,
                    ri.real_rank, ref.restricted_type.c_str(),
                    mult_text(ref.multiplicities).c_str(), "not computed");
    } else {
      const PipelineResult r = run_satake_pipeline(ref.model);
      const std::vector<std::string> diff = compare_to_reference(r, ref);
      const RankIdentity cr = rank_identity(r.diagram);
      const auto ms = multiplicity_multiset(r.table);
      row["computed"] = true;
      row["satake"] = to_json(r.diagram);
      row["restricted_type"] = r.restricted.type;
      row["multiplicities"] = mult_json(ms);
      row["restricted"] = to_json(r.table);
      row["expected"] = expected;
      row["match"] = diff.empty();
      row["mismatches"] = diff;
      all_ok = all_ok && diff.empty();
      std::snprintf(line, sizeof line, "%-5s %-7s %-9s %-5s %-6d %-7d %-10d %-6s %-12s %s\n",
                    ref.cartan_label.c_str(), ref.model.c_str(), "yes", r.diagram.type.c_str(),
                    cr.black, cr.arrows, cr.real_rank, r.restricted.type.c_str(),
                    mult_text(ms).c_str(), diff.empty() ? "yes" : "NO");
      for (const auto& d : diff) text << "      mismatch: " << d << "\n";
    }
    text << line;
    rows.push_back(std::move(row));
  }
  if (!any) throw CliError(kConstruction, "table", "no table row matches '" + only + "'");
  if (json) {
    Json out;
    out["rows"] = rows;
    out["passed"] = all_ok;
    emit_json(out, "table.json");
  } else {
    emit(text.str(), "table.txt");
  }
  return all_ok ? 0 : kVerification;
}

// run CONFIG

void cmd_run(const std::string& path) {
  JobConfig c;
  try {
    c = parse_job_config(read_json(path));
  } catch (const ConfigError& e) {
    throw CliError(kConstruction, "config", e.what());
  } catch (const Json::exception& e) {
    throw CliError(kIo, "config", e.what());
  }
  if (!c.out.empty() && g_opts.out.empty()) g_opts.out = c.out;
  Model m = build_job_model(c);
  const std::string stem = sanitize(m.info.name);
  Json out;
  out["model"] = m.info.name;
  out["dim"] = m.lie.dim();
  bool ok = true;
  if (c.wants("jacobi")) {
    const CheckReport jac = jacobi_report(m.lie);
    out["jacobi"] = to_json(jac);
    ok = ok && jac.passed;
  }
  if (c.wants("signature")) {
    const SignatureReport s = killing_signature(m.lie);
    out["killing"] = to_json(s);
    out["signature"] = s.signature();
    if (!c.model.empty()) {
      out["expected_signature"] = m.info.signature;
      ok = ok && s.signature() == m.info.signature;
    }
  }
  const bool roots = c.wants("roots") || c.wants("satake") || c.wants("restricted");
  if (roots) {
    CartanSpec h = job_cartan(c, m);
    std::optional<std::vector<Vec>> basis;
    if (c.preset_basis) basis = preset_basis(m.info.name);
    const PipelineResult r = run_satake_pipeline(m, h, basis);
    if (c.wants("roots")) out["roots"] = to_json(r.datum, r.basis);
    if (c.wants("satake")) out["satake"] = to_json(r.diagram);
    if (c.wants("restricted")) out["restricted"] = to_json(r.table);
    if (!g_opts.out.empty() && (c.wants("satake") || c.wants("restricted"))) {
      std::vector<Format> fs;
      for (Format f : c.formats) {
        if (f != Format::Json) fs.push_back(f);
      }
      emit_pipeline(r, stem, fs);
    }
  }
  if (c.wants("cartan-decomposition")) {
    const CartanSpec h = job_cartan(c, m);
    const DecompositionBases b = preset_cartan_decomposition(m, h);
    const CartanDecompositionReport rep = verify_cartan_decomposition(m.lie, b.t, b.p);
    out["cartan_decomposition"] = to_json(rep);
    ok = ok && rep.passed();
  }
  out["passed"] = ok;
  emit_json(out, stem + ".job.json");
  verify(ok, "run", "a requested check failed");
}

void report_error(int code, const std::string& stage, const std::string& what) {
  static const char* kinds[] = {"ok", "usage", "verification", "construction", "io"};
  Json err;
  err["error"] = {{"code", code}, {"kind", kinds[code]}, {"stage", stage}, {"message", what}};
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction of exceptional Lie algebras and their Satake diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g_opts.format, "Output format")
      ->check(CLI::IsMember({"ascii", "dot", "json"}));
  app.add_option("--out", g_opts.out, "Write artifacts into this directory");
  int threads = 0;
  app.add_option("--threads", threads, "Thread count (overrides SATAKE_THREADS)");

  std::string name, file, s = "pO", sp = "pC", eps = "1,1,1", model, cartan = "preset", basis = "preset";
  std::string preset, only;
  bool exhaustive = false, albert_iso = false, invariance = false, rho = false, json = false;
  std::function<int()> action;
  auto run = [&](std::function<void()> f) { action = [f] { f(); return 0; }; };

  auto* algebra = app.add_subcommand("algebra", "Composition and Jordan algebras")->require_subcommand(1);
  auto* a_build = algebra->add_subcommand("build", "Structure constants as JSON");
  a_build->add_option("name", name, "R, RR, C, Mat2, H, O, Os, pC, pO, pOs, Ok, Oks, albert, h3O")->required();
  a_build->add_option("--S", s, "Symmetric composition algebra for albert");
  a_build->add_option("--eps", eps, "Sign triple for albert");
  a_build->callback([&] { run([&] { cmd_algebra_build(name, s, eps); }); });
  auto* a_check = algebra->add_subcommand("check", "Identity checks");
  a_check->add_option("name", name, "Algebra name");
  a_check->add_option("--file", file, "AlgebraTable JSON");
  a_check->add_option("--S", s, "Symmetric composition algebra for albert");
  a_check->add_option("--eps", eps, "Sign triple for albert");
  a_check->add_flag("--exhaustive", exhaustive, "Fully linearized Jordan identity");
  a_check->add_flag("--albert-iso", albert_iso, "Also check the matrix model isomorphism");
  a_check->callback([&] {
    if (name.empty() && file.empty()) throw CLI::ValidationError("algebra check", "need a name or --file");
    run([&] { cmd_algebra_check(name, file, s, eps, exhaustive, albert_iso); });
  });

  LieSource src;
  auto* lie = app.add_subcommand("lie", "Lie algebra certificates")->require_subcommand(1);
  auto add_source = [&](CLI::App* c) {
    c->add_option("--model", src.model, "Catalog model");
    c->add_option("--file", src.file, "LieAlgebra JSON");
  };
  auto* l_check = lie->add_subcommand("check", "Exhaustive Jacobi identity");
  add_source(l_check);
  l_check->add_flag("--invariance", invariance, "Also check Killing invariance");
  l_check->callback([&] { run([&] { cmd_lie_check(src, invariance); }); });
  auto* l_killing = lie->add_subcommand("killing", "Killing matrix");
  add_source(l_killing);
  l_killing->callback([&] { run([&] { cmd_lie_killing(src); }); });
  auto* l_sig = lie->add_subcommand("signature", "Killing signature");
  add_source(l_sig);
  l_sig->callback([&] { run([&] { cmd_lie_signature(src); }); });
  auto* l_der = lie->add_subcommand("derivations", "Der(A) of an algebra");
  l_der->add_option("name", name, "Algebra name")->required();
  l_der->add_option("--S", s, "Symmetric composition algebra for albert");
  l_der->add_option("--eps", eps, "Sign triple for albert");
  l_der->callback([&] { run([&] { cmd_lie_derivations(name, s, eps); }); });

  auto* construct = app.add_subcommand("construct", "Magic square and Tits models")->require_subcommand(1);
  auto* c_magic = construct->add_subcommand("magic", "g_eps(S, S')");
  c_magic->add_option("--preset", preset, "Catalog model instead of S, S', eps");
  c_magic->add_option("--S", s, "Symmetric composition algebra");
  c_magic->add_option("--Sprime", sp, "Second symmetric composition algebra");
  c_magic->add_option("--eps", eps, "Sign triple, e.g. 1,-1,1");
  c_magic->callback([&] { run([&] { cmd_construct_magic(preset, s, sp, eps); }); });
  auto* c_tits = construct->add_subcommand("tits", "Der(A) + A0");
  c_tits->add_option("--S", s, "Symmetric composition algebra");
  c_tits->add_option("--eps", eps, "Sign triple");
  c_tits->add_flag("--rho", rho, "Also certify rho");
  c_tits->callback([&] { run([&] { cmd_construct_tits(s, eps, rho); }); });

  auto* roots = app.add_subcommand("roots", "Root decomposition")->require_subcommand(1);
  auto add_roots = [&](CLI::App* c, bool with_basis) {
    c->add_option("--model", model, "Model with a Cartan preset")
        ->required()
        ->check(CLI::IsMember(satake_models()));
    c->add_option("--cartan", cartan, "Cartan subalgebra")->check(CLI::IsMember({"preset"}));
    if (with_basis) c->add_option("--basis", basis, "Root basis")->check(CLI::IsMember({"preset", "auto"}));
  };
  auto* r_dec = roots->add_subcommand("decompose", "Roots, root spaces and basis");
  add_roots(r_dec, true);
  r_dec->callback([&] { run([&] { cmd_roots_decompose(model, cartan, basis); }); });
  auto* r_res = roots->add_subcommand("restricted", "Restricted roots and multiplicities");
  add_roots(r_res, true);
  r_res->callback([&] { run([&] { cmd_roots_restricted(model, cartan, basis); }); });
  auto* r_cd = roots->add_subcommand("verify-cartan-decomp", "Check the preset Cartan decomposition");
  add_roots(r_cd, false);
  r_cd->callback([&] { run([&] { cmd_roots_verify_cartan(model, cartan); }); });

  auto* sat = app.add_subcommand("satake", "Satake diagram and restricted table");
  sat->add_option("model", model, "Model")->required()->check(CLI::IsMember(satake_models()));
  sat->add_option("--basis", basis, "Root basis")->check(CLI::IsMember({"preset", "auto"}));
  sat->callback([&] { run([&] { cmd_satake(model, basis); }); });

  auto* table = app.add_subcommand("table", "Satake data of the real forms of e6");
  table->add_flag("--json", json, "Machine-readable rows");
  table->add_option("--only", only, "Restrict to one model or row");
  table->callback([&] { action = [&] { return cmd_table(only, json); }; });

  auto* build = app.add_subcommand("build", "Construct a model and certify it");
  std::vector<std::string> names;
  for (const auto& m : model_catalog()) names.push_back(m.name);
  build->add_option("model", model, "Model")->required()->check(CLI::IsMember(names));
  build->callback([&] { run([&] { cmd_build(model); }); });

  auto* job = app.add_subcommand("run", "Run a JSON job config");
  job->add_option("config", file, "Config file")->required();
  job->callback([&] { run([&] { cmd_run(file); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (threads > 0) setenv("SATAKE_THREADS", std::to_string(threads).c_str(), 1);

  try {
    return action();
  } catch (const CliError& e) {
    report_error(e.code(), e.stage(), e.what());
    return e.code();
  } catch (const StageError& e) {
    const int code = e.verification() ? kVerification : kConstruction;
    report_error(code, e.stage(), e.what());
    return code;
  } catch (const std::exception& e) {
    report_error(kConstruction, "construct", e.what());
    return kConstruction;
  }
}
