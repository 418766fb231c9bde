#include "rotarr/serialize.hpp"

#include <fstream>
#include <sstream>

namespace rotarr {

json to_json(const Rational& q) { return to_string(q); }

json to_json(const CycNum& a) {
  json coeffs = json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(to_string(c));
  return json{{"conductor", a.conductor()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const MatrixF& m) {
  json entries = json::array();
  for (const auto& e : m.entries()) entries.push_back(to_json(e));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json to_json(const Subspace& u) {
  json basis = json::array();
  for (std::size_t i = 0; i < u.dim(); ++i) {
    json row = json::array();
    for (const auto& e : u.basis_vector(i)) row.push_back(to_json(e));
    basis.push_back(std::move(row));
  }
  return json{{"ambient", u.ambient()}, {"basis", std::move(basis)}};
}

json to_json(const Provenance& p) {
  return json{{"source", p.source}, {"multiplicity", p.multiplicity}, {"witnesses", p.witnesses}};
}

json to_json(const Arrangement& a) {
  json subspaces = json::array();
  json provenance = json::array();
  for (const auto& u : a.subspaces()) subspaces.push_back(to_json(u));
  for (const auto& p : a.provenance()) provenance.push_back(to_json(p));
  return json{{"ambient", a.ambient()}, {"subspaces", std::move(subspaces)}, {"provenance", std::move(provenance)}};
}

json group_to_json(const MatrixGroup& g) {
  json gens = json::array();
  for (const auto& s : g.generators()) gens.push_back(to_json(s));
  return json{{"name", g.name()}, {"ambient", g.ambient()}, {"conductor", g.conductor()}, {"generators", gens}};
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t positive(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
    throw FormatError(std::string("field \"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw FormatError("rational must be a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

CycNum cycnum_from_json(const json& j) {
  const auto L = static_cast<unsigned>(positive(j, "conductor"));
  const json& c = field(j, "coeffs");
  if (!c.is_array() || c.size() != euler_phi(L)) throw FormatError("coeffs must have phi(conductor) entries");
  std::vector<Rational> coeffs;
  for (const auto& x : c) coeffs.push_back(rational_from_json(x));
  return CycNum::from_coeffs(L, coeffs);
}

MatrixF matrix_from_json(const json& j) {
  const std::size_t rows = positive(j, "rows");
  const std::size_t cols = positive(j, "cols");
  const json& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows * cols) throw FormatError("entries must have rows*cols items");
  std::vector<CycNum> entries;
  for (const auto& x : e) entries.push_back(cycnum_from_json(x));
  try {
    return MatrixF(rows, cols, std::move(entries));
  } catch (const std::invalid_argument& ex) {
    throw FormatError(ex.what());
  }
}

Subspace subspace_from_json(const json& j) {
  const std::size_t n = positive(j, "ambient");
  const json& b = field(j, "basis");
  if (!b.is_array()) throw FormatError("basis must be an array");
  std::vector<VectorF> rows;
  unsigned L = 1;
  for (const auto& r : b) {
    if (!r.is_array() || r.size() != n) throw FormatError("basis rows must have ambient entries");
    VectorF v;
    for (const auto& x : r) v.push_back(cycnum_from_json(x));
    L = v.front().conductor();
    rows.push_back(std::move(v));
  }
  try {
    return Subspace::span(n, L, rows);
  } catch (const std::invalid_argument& ex) {
    throw FormatError(ex.what());
  }
}

MatrixGroup group_from_json(const json& j, std::size_t cap) {
  const std::size_t n = positive(j, "ambient");
  const auto L = static_cast<unsigned>(positive(j, "conductor"));
  const json& g = field(j, "generators");
  if (!g.is_array()) throw FormatError("generators must be an array");
  std::vector<MatrixF> gens;
  for (const auto& x : g) {
    MatrixF m = matrix_from_json(x);
    if (m.conductor() != L) {
      if (L % m.conductor() != 0) throw FormatError("generator conductor does not divide the group conductor");
      m = embed(m, L);
    }
    gens.push_back(std::move(m));
  }
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
  try {
    return closure(n, L, std::move(gens), cap, std::move(name));
  } catch (const std::invalid_argument& ex) {
    throw FormatError(ex.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << dump(j);
}

}  // namespace rotarr
