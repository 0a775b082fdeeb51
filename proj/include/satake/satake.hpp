#ifndef SATAKE_SATAKE_HPP
#define SATAKE_SATAKE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satake/rootspace.hpp"

namespace satake {

struct SatakeNode {
  std::string label;
  bool filled = false;
  int basis_index = 0;
  friend bool operator==(const SatakeNode&, const SatakeNode&) = default;
};

/// Bond between nodes a < b. For multiple bonds `toward` is the node of the
/// shorter root, otherwise -1.
struct SatakeEdge {
  int a = 0;
  int b = 0;
  int bond = 1;
  int toward = -1;
  friend bool operator==(const SatakeEdge&, const SatakeEdge&) = default;
};

struct SatakeDiagram {
  std::string name;
  std::string type;
  std::vector<SatakeNode> nodes;
  std::vector<SatakeEdge> edges;
  std::vector<std::pair<int, int>> arrows;  // a < b
  int real_rank = 0;
  std::optional<int> signature;
  friend bool operator==(const SatakeDiagram&, const SatakeDiagram&) = default;
};

/// Nodes follow the order of `basis`, labelled a1, a2, ...
SatakeDiagram build_satake(const RootDatum& d, const std::vector<int>& basis,
                           const std::string& name = {},
                           std::optional<int> signature = std::nullopt);

/// Dynkin diagram with every node black (compact real form).
SatakeDiagram compact_satake(const IntMatrix& cartan, const std::string& name = {});

/// Edges of the Dynkin graph of a Cartan matrix.
std::vector<SatakeEdge> dynkin_edges(const IntMatrix& cartan);

/// Minimal encoding over all node relabelings; equal exactly for
/// isomorphic decorated graphs.
std::string canonical_form(const SatakeDiagram& d);
bool isomorphic(const SatakeDiagram& x, const SatakeDiagram& y);

RankIdentity rank_identity(const SatakeDiagram& d);

struct RestrictedRow {
  std::string label;
  Vec lambda;
  int m = 0;
  int m2 = 0;
  friend bool operator==(const RestrictedRow&, const RestrictedRow&) = default;
};

struct RestrictedTable {
  std::string name;
  std::string type;
  std::vector<RestrictedRow> rows;
  std::vector<SatakeEdge> edges;
  friend bool operator==(const RestrictedTable&, const RestrictedTable&) = default;
};

/// One row per element of the restricted basis; the label names the first
/// basis root restricting to it.
RestrictedTable build_restricted_table(const RestrictedSystem& r,
                                       const std::string& name = {});

enum class Format { Ascii, Dot, Json };
/// Throws std::invalid_argument for unknown names.
Format parse_format(const std::string& name);
std::string format_extension(Format f);

std::string render(const SatakeDiagram& d, Format f);
std::string render(const RestrictedTable& t, Format f);

}  // namespace satake

#endif  // SATAKE_SATAKE_HPP
