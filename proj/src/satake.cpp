#include "satake/satake.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "satake/json_io.hpp"

namespace satake {

namespace {

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
  return s + ")";
}

std::string bond_text(const SatakeEdge& e, const std::vector<std::string>& names) {
  if (e.bond == 1) return names[e.a] + "-" + names[e.b];
  const int from = e.toward == e.a ? e.b : e.a;
  const std::string link = e.bond == 2 ? "=>" : "=3=>";
  return names[from] + link + names[e.toward];
}

std::string ascii_edges(const std::vector<SatakeEdge>& edges,
                        const std::vector<std::string>& names) {
  if (edges.empty()) return "none";
  std::string s;
  for (const auto& e : edges) s += (s.empty() ? "" : "  ") + bond_text(e, names);
  return s;
}

std::string dot_id(const std::string& label) { return "\"" + label + "\""; }

void dot_edges(std::ostringstream& os, const std::vector<SatakeEdge>& edges,
               const std::vector<std::string>& names) {
  for (const auto& e : edges) {
    os << "  " << dot_id(names[e.a]) << " -- " << dot_id(names[e.b]);
    if (e.bond > 1) {
      os << " [penwidth=" << e.bond << ", label=\"" << e.bond << "\", dir="
         << (e.toward == e.b ? "forward" : "back") << "]";
    }
    os << ";\n";
  }
}

}  // namespace

std::vector<SatakeEdge> dynkin_edges(const IntMatrix& a) {
  std::vector<SatakeEdge> out;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a[i][j] == 0) continue;
      SatakeEdge e{i, j, bond(a, i, j), -1};
      if (e.bond > 1) e.toward = std::abs(a[i][j]) > std::abs(a[j][i]) ? j : i;
      out.push_back(e);
    }
  }
  return out;
}

SatakeDiagram build_satake(const RootDatum& d, const std::vector<int>& basis,
                           const std::string& name, std::optional<int> signature) {
  SatakeDiagram out;
  out.name = name.empty() ? d.cartan.label : name;
  for (size_t k = 0; k < basis.size(); ++k) {
    out.nodes.push_back({"a" + std::to_string(k + 1), d.is_compact(basis[k]), basis[k]});
  }
  const IntMatrix cm = cartan_matrix(d, basis);
  out.edges = dynkin_edges(cm);
  auto type = classify(cm);
  out.type = type ? type->name() : "unknown";
  out.arrows = arrow_pairs(d, basis);
  out.real_rank = rank_identity_check(d, basis).real_rank;
  out.signature = signature;
  return out;
}

SatakeDiagram compact_satake(const IntMatrix& cartan, const std::string& name) {
  SatakeDiagram out;
  out.name = name;
  for (size_t k = 0; k < cartan.size(); ++k) {
    out.nodes.push_back({"a" + std::to_string(k + 1), true, static_cast<int>(k)});
  }
  out.edges = dynkin_edges(cartan);
  auto type = classify(cartan);
  out.type = type ? type->name() : "unknown";
  return out;
}

std::string canonical_form(const SatakeDiagram& d) {
  const int n = static_cast<int>(d.nodes.size());
  std::vector<std::vector<int>> bond(n, std::vector<int>(n, 0));
  std::vector<std::vector<int>> toward(n, std::vector<int>(n, -1));
  std::vector<std::vector<bool>> arrow(n, std::vector<bool>(n, false));
  for (const auto& e : d.edges) {
    bond[e.a][e.b] = bond[e.b][e.a] = e.bond;
    toward[e.a][e.b] = toward[e.b][e.a] = e.toward;
  }
  for (const auto& [a, b] : d.arrows) arrow[a][b] = arrow[b][a] = true;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i) s += d.nodes[perm[i]].filled ? '*' : 'o';
    s += '|';
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int u = perm[i], v = perm[j];
        s += static_cast<char>('0' + bond[u][v]);
        s += toward[u][v] < 0 ? '.' : toward[u][v] == u ? '<' : '>';
        s += arrow[u][v] ? 'a' : '_';
      }
    }
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const SatakeDiagram& x, const SatakeDiagram& y) {
  return x.nodes.size() == y.nodes.size() && canonical_form(x) == canonical_form(y);
}

RankIdentity rank_identity(const SatakeDiagram& d) {
  RankIdentity r;
  r.rank = static_cast<int>(d.nodes.size());
  r.real_rank = d.real_rank;
  r.arrows = static_cast<int>(d.arrows.size());
  for (const auto& n : d.nodes) r.black += n.filled;
  return r;
}

RestrictedTable build_restricted_table(const RestrictedSystem& r,
                                       const std::string& name) {
  RestrictedTable t;
  t.name = name;
  t.type = r.type;
  for (size_t k = 0; k < r.basis.size(); ++k) {
    const Vec& lambda = r.roots[r.basis[k]].lambda;
    t.rows.push_back({"bar(a" + std::to_string(r.sources[k].front() + 1) + ")",
                      lambda, r.roots[r.basis[k]].multiplicity,
                      r.multiplicity(Scalar(2) * lambda)});
  }
  t.edges = dynkin_edges(r.cartan);
  return t;
}

Format parse_format(const std::string& name) {
  if (name == "ascii") return Format::Ascii;
  if (name == "dot") return Format::Dot;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format: " + name);
}

std::string format_extension(Format f) {
  switch (f) {
    case Format::Ascii: return "txt";
    case Format::Dot: return "dot";
    case Format::Json: return "json";
  }
  return "txt";
}

std::string render(const SatakeDiagram& d, Format f) {
  std::vector<std::string> names;
  for (const auto& n : d.nodes) names.push_back(n.label);
  std::ostringstream os;
  switch (f) {
    case Format::Json:
      return to_json(d).dump(2) + "\n";
    case Format::Ascii: {
      os << "satake " << d.name << "  type " << d.type << "  real_rank " << d.real_rank;
      if (d.signature) os << "  signature " << *d.signature;
      os << "\nnodes   ";
      for (size_t k = 0; k < d.nodes.size(); ++k) {
        os << (k ? "  " : "") << d.nodes[k].label << ":" << (d.nodes[k].filled ? '*' : 'o');
      }
      os << "\nbonds   " << ascii_edges(d.edges, names) << "\narrows  ";
      if (d.arrows.empty()) os << "none";
      for (size_t k = 0; k < d.arrows.size(); ++k) {
        os << (k ? "  " : "") << names[d.arrows[k].first] << "<~>" << names[d.arrows[k].second];
      }
      os << "\n";
      return os.str();
    }
    case Format::Dot: {
      os << "graph " << dot_id(d.name.empty() ? "satake" : d.name) << " {\n";
      os << "  node [shape=circle];\n";
      for (const auto& n : d.nodes) {
        os << "  " << dot_id(n.label) << " [label=" << dot_id(n.label);
        if (n.filled) os << ", style=filled, fillcolor=black, fontcolor=white";
        os << "];\n";
      }
      dot_edges(os, d.edges, names);
      for (const auto& [a, b] : d.arrows) {
        os << "  " << dot_id(names[a]) << " -- " << dot_id(names[b])
           << " [dir=both, style=dashed, constraint=false];\n";
      }
      os << "}\n";
      return os.str();
    }
  }
  throw std::invalid_argument("unknown format");
}

std::string render(const RestrictedTable& t, Format f) {
  std::vector<std::string> names;
  for (const auto& r : t.rows) names.push_back(r.label);
  std::ostringstream os;
  switch (f) {
    case Format::Json:
      return to_json(t).dump(2) + "\n";
    case Format::Ascii: {
      os << "restricted " << t.name << "  type " << t.type << "\n";
      for (const auto& r : t.rows) {
        os << "  " << r.label << "  lambda " << vec_text(r.lambda) << "  m " << r.m
           << "  m2 " << r.m2 << "\n";
      }
      os << "bonds   " << ascii_edges(t.edges, names) << "\n";
      return os.str();
    }
    case Format::Dot: {
      os << "graph " << dot_id(t.name.empty() ? "restricted" : t.name) << " {\n";
      os << "  node [shape=circle];\n";
      for (const auto& r : t.rows) {
        os << "  " << dot_id(r.label) << " [label=\"" << r.label << "\\nm=" << r.m
           << " m2=" << r.m2 << "\"];\n";
      }
      dot_edges(os, t.edges, names);
      os << "}\n";
      return os.str();
    }
  }
  throw std::invalid_argument("unknown format");
}

}  // namespace satake
