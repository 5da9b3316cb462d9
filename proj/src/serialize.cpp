#include "tetraposet/serialize.hpp"

#include <stdexcept>

namespace tetraposet {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("parse error: " + what);
}

std::vector<std::vector<int>> int_matrix(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + ": expected an array of rows");
  std::vector<std::vector<int>> rows;
  for (const Json& r : j) {
    if (!r.is_array()) bad(std::string(what) + ": expected a row array");
    std::vector<int> row;
    for (const Json& v : r) {
      if (!v.is_number_integer()) bad(std::string(what) + ": expected integer entries");
      row.push_back(v.get<int>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json poset_to_json(const ColoredPoset& p) {
  Json j;
  j["n"] = p.n;
  j["kind"] = poset_kind_name(p.kind);
  if (p.kind == PosetKind::Trapezoid) j["trapezoid_k"] = p.trap_k;
  j["colors"] = p.colors.to_string();
  Json elems = Json::array();
  for (const ElementCoord& e : p.elements) elems.push_back(Json::array({e.c1, e.c2, e.c3}));
  j["elements"] = std::move(elems);
  Json edges = Json::object();
  for (Color c : p.colors.colors()) {
    Json list = Json::array();
    for (const Edge& e : p.edges[static_cast<int>(c)])
      list.push_back(Json::array({e.tail, e.head}));
    edges[std::string(1, color_char(c))] = std::move(list);
  }
  j["edges"] = std::move(edges);
  return j;
}

Json array_to_json(const StaircaseArray& a) {
  Json j;
  j["n"] = a.n;
  j["variant"] = variant_name(a.variant);
  j["rows"] = a.rows;
  return j;
}

StaircaseArray array_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("variant") || !j.contains("rows"))
    bad("array: expected {n, variant, rows}");
  if (!j["n"].is_number_integer()) bad("array: n must be an integer");
  StaircaseArray a;
  a.n = j["n"].get<int>();
  a.variant = variant_from_name(j["variant"].get<std::string>());
  a.rows = int_matrix(j["rows"], "array rows");
  std::string why;
  if (!well_shaped(a, &why)) bad("array: " + why);
  return a;
}

Json asm_to_json(const Asm& m) { return m.a; }

Asm asm_from_json(const Json& j) {
  Asm m;
  m.a = int_matrix(j, "asm");
  m.n = (int)m.a.size();
  std::string why;
  if (!is_asm(m, &why)) bad("asm: " + why);
  return m;
}

Json triangle_to_json(const MonotoneTriangle& m) {
  Json j;
  j["n"] = m.n;
  j["rows"] = m.rows;
  return j;
}

MonotoneTriangle triangle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
    bad("triangle: expected {n, rows}");
  MonotoneTriangle m;
  m.n = j["n"].get<int>();
  m.rows = int_matrix(j["rows"], "triangle rows");
  std::string why;
  if (!is_monotone_triangle(m, &why)) bad("triangle: " + why);
  return m;
}

Json pp_to_json(const PlanePartition& p) {
  Json j;
  j["box"] = Json::array({p.box[0], p.box[1], p.box[2]});
  j["heights"] = p.heights;
  return j;
}

PlanePartition pp_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("box") || !j.contains("heights"))
    bad("plane partition: expected {box, heights}");
  const Json& b = j["box"];
  if (!b.is_array() || b.size() != 3) bad("plane partition: box must be [a,b,c]");
  PlanePartition p;
  for (int i = 0; i < 3; ++i) {
    if (!b[i].is_number_integer()) bad("plane partition: box entries must be integers");
    p.box[i] = b[i].get<int>();
  }
  p.heights = int_matrix(j["heights"], "plane partition heights");
  std::string why;
  if (!is_plane_partition(p, &why)) bad("plane partition: " + why);
  return p;
}

Json tournament_to_json(const Tournament& t) {
  Json j = Json::array();
  for (const auto& [i, k] : t.upsets) j.push_back(Json::array({i, k}));
  return j;
}

Tournament tournament_from_json(const Json& j, int n) {
  if (!j.is_array()) bad("tournament: expected an upset list [[i,j],...]");
  Tournament t;
  t.n = n;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      bad("tournament: each upset must be an integer pair");
    t.upsets.insert({pair[0].get<int>(), pair[1].get<int>()});
  }
  std::string why;
  if (!is_tournament(t, &why)) bad("tournament: " + why);
  return t;
}

Json tableau_to_json(const TournamentTableau& t) {
  Json j;
  j["n"] = t.n;
  j["rows"] = t.rows;
  return j;
}

Json dyck_to_json(const DyckPath& d) { return d.steps; }

DyckPath dyck_from_json(const Json& j) {
  if (!j.is_string()) bad("dyck path: expected a string over {U,D}");
  DyckPath d{j.get<std::string>()};
  std::string why;
  if (!is_dyck(d, &why)) bad("dyck path: " + why);
  return d;
}

Json ideal_to_json(const OrderIdeal& ideal) {
  Json j;
  j["hex"] = ideal.bits.to_hex();
  j["size"] = ideal.size;
  return j;
}

OrderIdeal ideal_from_json(const Json& j, int nbits) {
  if (!j.is_object() || !j.contains("hex")) bad("ideal: expected {hex, size}");
  if (!j["hex"].is_string()) bad("ideal: hex must be a string");
  Bits128 bits;
  try {
    bits = Bits128::from_hex(j["hex"].get<std::string>(), nbits);
  } catch (const std::exception& e) {
    bad(std::string("ideal: ") + e.what());
  }
  OrderIdeal ideal = make_ideal(bits);
  if (j.contains("size") && j["size"].is_number_integer() &&
      j["size"].get<int>() != ideal.size)
    bad("ideal: size does not match the hex popcount");
  return ideal;
}

Json qpoly_to_json(const QPolynomial& p) {
  Json j = Json::array();
  for (const Int& c : p.coeffs()) j.push_back(c.str());
  return j;
}

Json multipoly_to_json(const MultiPolynomial& p) {
  Json j = Json::array();
  for (const auto& [exps, coeff] : p.terms()) {
    Json term;
    term["exps"] = exps;
    term["coeff"] = coeff.str();
    j.push_back(std::move(term));
  }
  return j;
}

std::string json_to_string(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tetraposet
