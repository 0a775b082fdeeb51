#ifndef SATAKE_JSON_IO_HPP
#define SATAKE_JSON_IO_HPP

#include <json.hpp>

#include "satake/algebra.hpp"
#include "satake/lie.hpp"
#include "satake/rootspace.hpp"
#include "satake/satake.hpp"

namespace satake {

using Json = nlohmann::ordered_json;

Json vec_json(const Vec& v);
Vec vec_from_json(const Json& j);
/// [[k, c], ...] with nonzero entries only.
Json sparse_json(const SparseVec& v);
SparseVec sparse_from_json(const Json& j);
Json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {name, dim, labels, sc: [[i, j, [[k, c], ...]], ...], form, unit,
/// involution}. Only nonzero products are listed.
Json to_json(const AlgebraTable& a);
AlgebraTable algebra_from_json(const Json& j);

/// Same layout as AlgebraTable; sc holds the brackets [e_i, e_j], i < j.
Json to_json(const LieAlgebra& l);
LieAlgebra lie_from_json(const Json& j);

Json to_json(const CheckReport& r);
Json to_json(const SignatureReport& s);
Json to_json(const CartanDecompositionReport& r);

/// {label, rank, cartan: {h, a_indices, t_indices}, zero_space_dim,
/// roots: [{covector, vectors}], basis, basis_compact}.
Json to_json(const RootDatum& d, const std::vector<int>& basis);
Json to_json(const RestrictedSystem& r);

/// {nodes: [{label, filled}], edges: [{a, b, bond}], arrows: [[a, b]],
/// meta: {real_rank, signature}}.
Json to_json(const SatakeDiagram& d);
SatakeDiagram satake_from_json(const Json& j);

Json to_json(const RestrictedTable& t);
RestrictedTable restricted_table_from_json(const Json& j);

}  // namespace satake

#endif  // SATAKE_JSON_IO_HPP
