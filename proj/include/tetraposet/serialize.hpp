#pragma once

#include <string>

#include <json.hpp>

#include "tetraposet/array.hpp"
#include "tetraposet/ideal.hpp"
#include "tetraposet/multipoly.hpp"
#include "tetraposet/objects.hpp"
#include "tetraposet/poset.hpp"
#include "tetraposet/qpoly.hpp"

namespace tetraposet {

// All serialization is deterministic: object keys in fixed insertion order,
// arrays in canonical element/term order, big integers as decimal strings.
using Json = nlohmann::ordered_json;

// {n, kind, trapezoid_k?, colors, elements:[[c1,c2,c3]...],
//  edges:{color:[[tail,head]...]}}; element indices follow canonical order.
Json poset_to_json(const ColoredPoset& p);

// {n, variant, rows:[[...]...]}; row-major, column 0 included for Yplus.
Json array_to_json(const StaircaseArray& a);
StaircaseArray array_from_json(const Json& j);

// Bare n x n integer matrix.
Json asm_to_json(const Asm& m);
Asm asm_from_json(const Json& j);

// {n, rows:[[...]...]} with rows 1..n.
Json triangle_to_json(const MonotoneTriangle& m);
MonotoneTriangle triangle_from_json(const Json& j);

// {box:[a,b,c], heights:[[...]...]}.
Json pp_to_json(const PlanePartition& p);
PlanePartition pp_from_json(const Json& j);

// Bare upset list [[i,j],...] in increasing order; n travels separately.
Json tournament_to_json(const Tournament& t);
Tournament tournament_from_json(const Json& j, int n);

// {n, rows:[[...]...]} with rows 1..n-1.
Json tableau_to_json(const TournamentTableau& t);

// JSON string over {U,D}.
Json dyck_to_json(const DyckPath& d);
DyckPath dyck_from_json(const Json& j);

// {hex, size}; hex encodes the membership bits over nbits elements.
Json ideal_to_json(const OrderIdeal& ideal);
OrderIdeal ideal_from_json(const Json& j, int nbits);

// Ascending coefficient list as decimal strings: [c0, c1, ...].
Json qpoly_to_json(const QPolynomial& p);

// [{exps:[...], coeff:"..."}] sorted by exponent vector.
Json multipoly_to_json(const MultiPolynomial& p);

std::string json_to_string(const Json& j);  // 2-space indent, trailing newline

}  // namespace tetraposet
