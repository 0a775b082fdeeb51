#include "satake/json_io.hpp"

#include <algorithm>

namespace satake {

namespace {

Json edges_json(const std::vector<SatakeEdge>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) {
    Json je = {{"a", e.a}, {"b", e.b}, {"bond", e.bond}};
    if (e.toward >= 0) je["toward"] = e.toward;
    out.push_back(std::move(je));
  }
  return out;
}

std::vector<SatakeEdge> edges_from_json(const Json& j) {
  std::vector<SatakeEdge> out;
  for (const auto& e : j) {
    out.push_back({e.at("a").get<int>(), e.at("b").get<int>(), e.at("bond").get<int>(),
                   e.value("toward", -1)});
  }
  return out;
}

}  // namespace

Json sparse_json(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& [k, c] : v) out.push_back(Json::array({k, c.str()}));
  return out;
}

SparseVec sparse_from_json(const Json& j) {
  SparseVec out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), Scalar::parse(e.at(1).get<std::string>()));
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : m.row(r)) row.push_back(x.str());
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = Scalar::parse(j.at(r).at(c).get<std::string>());
  }
  return m;
}

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Vec vec_from_json(const Json& j) {
  Vec out;
  for (const auto& x : j) out.push_back(Scalar::parse(x.get<std::string>()));
  return out;
}

Json to_json(const AlgebraTable& a) {
  Json out;
  out["name"] = a.name;
  out["dim"] = a.dim;
  out["labels"] = a.labels;
  Json sc = Json::array();
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      if (!a.product(i, j).empty()) sc.push_back(Json::array({i, j, sparse_json(a.product(i, j))}));
    }
  }
  out["sc"] = std::move(sc);
  out["form"] = a.form ? matrix_json(*a.form) : Json();
  out["unit"] = a.unit ? vec_json(*a.unit) : Json();
  out["involution"] = a.involution ? matrix_json(*a.involution) : Json();
  if (a.trace) out["trace"] = vec_json(*a.trace);
  return out;
}

AlgebraTable algebra_from_json(const Json& j) {
  AlgebraTable a(j.value("name", std::string("algebra")),
                 j.at("labels").get<std::vector<std::string>>());
  if (j.at("dim").get<int>() != a.dim) {
    throw std::invalid_argument("dim does not match the label count");
  }
  for (const auto& e : j.at("sc")) {
    a.set_product(e.at(0).get<int>(), e.at(1).get<int>(), sparse_from_json(e.at(2)));
  }
  if (j.contains("form") && !j["form"].is_null()) a.form = matrix_from_json(j["form"]);
  if (j.contains("unit") && !j["unit"].is_null()) a.unit = vec_from_json(j["unit"]);
  if (j.contains("involution") && !j["involution"].is_null()) {
    a.involution = matrix_from_json(j["involution"]);
  }
  if (j.contains("trace")) a.trace = vec_from_json(j["trace"]);
  return a;
}

Json to_json(const LieAlgebra& l) {
  Json out;
  out["name"] = l.name();
  out["dim"] = l.dim();
  out["labels"] = l.labels();
  Json sc = Json::array();
  for (int i = 0; i < l.dim(); ++i) {
    for (int j = i + 1; j < l.dim(); ++j) {
      if (!l.bracket(i, j).empty()) sc.push_back(Json::array({i, j, sparse_json(l.bracket(i, j))}));
    }
  }
  out["sc"] = std::move(sc);
  return out;
}

LieAlgebra lie_from_json(const Json& j) {
  auto labels = j.at("labels").get<std::vector<std::string>>();
  const int n = static_cast<int>(labels.size());
  if (j.at("dim").get<int>() != n) {
    throw std::invalid_argument("dim does not match the label count");
  }
  std::vector<SparseVec> table(static_cast<size_t>(n) * n);
  for (const auto& e : j.at("sc")) {
    const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      throw std::invalid_argument("bracket index out of range");
    }
    SparseVec v = sparse_from_json(e.at(2));
    SparseVec neg = v;
    for (auto& [k, c] : neg) c = -c;
    table[a * n + b] = std::move(v);
    table[b * n + a] = std::move(neg);
  }
  return LieAlgebra(j.value("name", std::string("lie")), std::move(labels), std::move(table));
}

Json to_json(const CheckReport& r) {
  return {{"check", r.check}, {"passed", r.passed}, {"checked", r.checked},
          {"violations", r.violations}};
}

Json to_json(const SignatureReport& s) {
  return {{"n_plus", s.n_plus}, {"n_minus", s.n_minus}, {"n_zero", s.n_zero},
          {"signature", s.signature()}};
}

Json to_json(const CartanDecompositionReport& r) {
  Json out = {{"passed", r.passed()}, {"dim_t", r.dim_t}, {"dim_p", r.dim_p},
              {"signature", r.signature()}, {"spans", r.spans},
              {"tt_in_t", r.tt}, {"tp_in_p", r.tp}, {"pp_in_t", r.pp},
              {"failures", r.failures}};
  out["killing_t"] = r.killing_t ? to_json(*r.killing_t) : Json();
  out["killing_p"] = r.killing_p ? to_json(*r.killing_p) : Json();
  return out;
}

Json to_json(const RootDatum& d, const std::vector<int>& basis) {
  Json out;
  out["label"] = d.cartan.label;
  out["rank"] = d.rank();
  Json h = Json::array();
  for (const auto& v : d.cartan.h) h.push_back(vec_json(v));
  out["cartan"] = {{"h", std::move(h)},
                   {"a_indices", d.cartan.a_indices},
                   {"t_indices", d.cartan.t_indices}};
  out["ambient_dim"] = d.ambient_dim;
  out["zero_space_dim"] = d.zero_space.size();
  Json roots = Json::array();
  for (int r = 0; r < d.size(); ++r) {
    Json vecs = Json::array();
    for (const auto& v : d.roots[r].space) vecs.push_back(sparse_json(to_sparse(v)));
    roots.push_back({{"index", r},
                     {"covector", vec_json(d.roots[r].values)},
                     {"compact", d.is_compact(r)},
                     {"vectors", std::move(vecs)}});
  }
  out["roots"] = std::move(roots);
  out["basis"] = basis;
  out["basis_compact"] = compact_part(d, basis);
  return out;
}

Json to_json(const RestrictedSystem& r) {
  Json roots = Json::array();
  for (const auto& x : r.roots) {
    roots.push_back({{"lambda", vec_json(x.lambda)}, {"multiplicity", x.multiplicity}});
  }
  return {{"type", r.type},
          {"reduced", r.reduced},
          {"roots", std::move(roots)},
          {"basis", r.basis},
          {"sources", r.sources},
          {"cartan", r.cartan},
          {"total_multiplicity", r.total_multiplicity()}};
}

Json to_json(const SatakeDiagram& d) {
  Json nodes = Json::array();
  for (const auto& n : d.nodes) {
    nodes.push_back({{"label", n.label}, {"filled", n.filled}, {"basis_index", n.basis_index}});
  }
  Json arrows = Json::array();
  for (const auto& [a, b] : d.arrows) arrows.push_back(Json::array({a, b}));
  Json meta = {{"name", d.name}, {"type", d.type}, {"real_rank", d.real_rank}};
  meta["signature"] = d.signature ? Json(*d.signature) : Json();
  return {{"nodes", std::move(nodes)},
          {"edges", edges_json(d.edges)},
          {"arrows", std::move(arrows)},
          {"meta", std::move(meta)}};
}

SatakeDiagram satake_from_json(const Json& j) {
  SatakeDiagram d;
  for (const auto& n : j.at("nodes")) {
    d.nodes.push_back({n.at("label").get<std::string>(), n.at("filled").get<bool>(),
                       n.value("basis_index", static_cast<int>(d.nodes.size()))});
  }
  d.edges = edges_from_json(j.at("edges"));
  for (const auto& a : j.at("arrows")) d.arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
  const Json& meta = j.at("meta");
  d.name = meta.value("name", std::string());
  d.type = meta.value("type", std::string());
  d.real_rank = meta.at("real_rank").get<int>();
  if (meta.contains("signature") && !meta["signature"].is_null()) {
    d.signature = meta["signature"].get<int>();
  }
  return d;
}

Json to_json(const RestrictedTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"label", r.label}, {"lambda", vec_json(r.lambda)}, {"m", r.m}, {"m2", r.m2}});
  }
  return {{"name", t.name}, {"type", t.type}, {"rows", std::move(rows)},
          {"edges", edges_json(t.edges)}};
}

RestrictedTable restricted_table_from_json(const Json& j) {
  RestrictedTable t;
  t.name = j.value("name", std::string());
  t.type = j.at("type").get<std::string>();
  for (const auto& r : j.at("rows")) {
    t.rows.push_back({r.at("label").get<std::string>(), vec_from_json(r.at("lambda")),
                      r.at("m").get<int>(), r.at("m2").get<int>()});
  }
  t.edges = edges_from_json(j.at("edges"));
  return t;
}

}  // namespace satake
