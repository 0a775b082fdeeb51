#include "satake/dynkin.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace satake {

namespace {

void link(IntMatrix& a, int i, int j, int aij = -1, int aji = -1) {
  a[i][j] = aij;
  a[j][i] = aji;
}

bool valid_type(char family, int n) {
  switch (family) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 3;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

std::optional<std::vector<int>> match(const IntMatrix& a,
                                      const std::vector<int>& nodes,
                                      const IntMatrix& c) {
  const int n = static_cast<int>(nodes.size());
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int k) {
    if (k == n) return true;
    for (int u = 0; u < n; ++u) {
      if (used[u]) continue;
      bool ok = true;
      for (int l = 0; l < k && ok; ++l) {
        ok = a[nodes[u]][nodes[perm[l]]] == c[k][l] &&
             a[nodes[perm[l]]][nodes[u]] == c[l][k];
      }
      if (!ok) continue;
      used[u] = true;
      perm[k] = u;
      if (place(k + 1)) return true;
      used[u] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  std::vector<int> out(n);
  for (int k = 0; k < n; ++k) out[k] = nodes[perm[k]];
  return out;
}

}  // namespace

IntMatrix catalog_cartan(char family, int n) {
  if (!valid_type(family, n)) {
    throw std::invalid_argument(std::string("no Dynkin type ") + family +
                                std::to_string(n));
  }
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -2, -1);
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -1, -2);
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 2);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2, -2, -1);
      link(a, 2, 3);
      break;
    case 'G':
      link(a, 0, 1, -1, -3);
      break;
  }
  return a;
}

std::string DynkinComponent::name() const {
  return std::string(1, family) + std::to_string(rank);
}

std::string DynkinType::name() const {
  if (components.empty()) return "0";
  std::string s;
  for (const auto& c : components) {
    if (!s.empty()) s += "+";
    s += c.name();
  }
  return s;
}

int DynkinType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

int bond(const IntMatrix& a, int i, int j) { return a[i][j] * a[j][i]; }

std::optional<DynkinType> classify(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n || a[i][i] != 2) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      if (i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0))) {
        return std::nullopt;
      }
    }
  }
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> parts;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes{s};
    comp[s] = static_cast<int>(parts.size());
    for (size_t k = 0; k < nodes.size(); ++k) {
      for (int t = 0; t < n; ++t) {
        if (comp[t] < 0 && a[nodes[k]][t] != 0) {
          comp[t] = comp[s];
          nodes.push_back(t);
        }
      }
    }
    std::sort(nodes.begin(), nodes.end());
    parts.push_back(std::move(nodes));
  }
  DynkinType out;
  for (const auto& nodes : parts) {
    const int r = static_cast<int>(nodes.size());
    if (r > 8) return std::nullopt;
    bool found = false;
    for (char f : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
      if (!valid_type(f, r)) continue;
      if (auto m = match(a, nodes, catalog_cartan(f, r))) {
        out.components.push_back({f, r, std::move(*m)});
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  std::stable_sort(out.components.begin(), out.components.end(),
                   [](const DynkinComponent& x, const DynkinComponent& y) {
                     if (x.family != y.family) return x.family < y.family;
                     return x.rank > y.rank;
                   });
  return out;
}

}  // namespace satake
