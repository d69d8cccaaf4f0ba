#pragma once

// JSON persistence. Integers whose magnitude exceeds 2^53 are written as
// decimal strings; group-ring and cyclotomic coefficients always are.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyclo3/cyclotomic.hpp"
#include "cyclo3/cycpart.hpp"
#include "cyclo3/scheme.hpp"
#include "cyclo3/zmring.hpp"

namespace cyclo3 {

using Json = nlohmann::ordered_json;

namespace catalog {

inline const BigInt& safe_limit() {
  static const BigInt limit = BigInt(1) << 53;
  return limit;
}

inline Json integer(const BigInt& v) {
  if (abs(v) > safe_limit()) return v.str();
  return static_cast<std::int64_t>(v);
}

inline BigInt parse_integer(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw std::invalid_argument("expected an integer or decimal string");
}

inline Json integers(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer(x));
  return a;
}

inline std::vector<BigInt> parse_integers(const Json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(parse_integer(x));
  return out;
}

inline Json matrix(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(integers(m.row(i)));
  return a;
}

inline IntMatrix parse_matrix(const Json& j) {
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : j) rows.push_back(parse_integers(r));
  return IntMatrix::from_rows(rows);
}

inline Json decimal_strings(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

}  // namespace catalog

inline Json to_json(const CyclotomicPartition& p) {
  return Json{{"s", p.s}, {"M", p.M}, {"T1", p.T1}, {"T2", p.T2}, {"T3", p.T3}};
}

inline CyclotomicPartition partition_from_json(const Json& j) {
  CyclotomicPartition p;
  p.s = j.at("s").get<unsigned>();
  p.M = j.at("M").get<std::uint64_t>();
  p.T1 = j.at("T1").get<std::vector<std::uint64_t>>();
  p.T2 = j.at("T2").get<std::vector<std::uint64_t>>();
  p.T3 = j.at("T3").get<std::vector<std::uint64_t>>();
  return p;
}

inline Json to_json(const ZM& a) { return Json{{"M", a.modulus()}, {"coeffs", catalog::decimal_strings(a.coeffs())}}; }

inline ZM group_ring_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j.at("coeffs")) c.emplace_back(x.get<std::string>());
  return ZM(j.at("M").get<std::uint64_t>(), std::move(c));
}

inline Json to_json(const CyclotomicInteger& z) {
  return Json{{"M", z.M()}, {"coeffs", catalog::decimal_strings(z.coeffs())}};
}

inline CyclotomicInteger cyclotomic_from_json(const CyclotomicInteger::Ring& ring, const Json& j) {
  if (j.at("M").get<std::uint64_t>() != ring->M()) throw std::invalid_argument("cyclotomic modulus mismatch");
  std::vector<BigInt> c;
  for (const auto& x : j.at("coeffs")) c.emplace_back(x.get<std::string>());
  if (c.size() != ring->degree()) throw std::invalid_argument("cyclotomic coefficient count mismatch");
  return CyclotomicInteger::from_exponents(ring, c);
}

inline Json to_json(const SchemeRecord& r) {
  Json flags{{"is_scheme", r.flags.is_scheme},
             {"is_primitive", r.flags.is_primitive},
             {"is_self_dual", r.flags.is_self_dual},
             {"srg_relations", r.flags.srg_relations}};
  if (r.flags.p_squared_is_scalar) flags["p_squared_is_scalar"] = *r.flags.p_squared_is_scalar;
  Json B = Json::array();
  for (const auto& b : r.B) B.push_back(catalog::matrix(b));
  return Json{{"scheme", r.id},
              {"field", r.field},
              {"s", r.s},
              {"q", r.q()},
              {"M", r.M},
              {"order", catalog::integer(r.order)},
              {"blocks", r.blocks},
              {"dual_blocks", r.dual_blocks},
              {"dual_order", r.dual_order},
              {"degrees", catalog::integers(r.degrees)},
              {"multiplicities", catalog::integers(r.multiplicities)},
              {"P", catalog::matrix(r.P)},
              {"Q", catalog::matrix(r.Q)},
              {"B", B},
              {"flags", flags}};
}

inline SchemeRecord scheme_from_json(const Json& j) {
  SchemeRecord r;
  r.id = j.at("scheme");
  r.field = j.at("field");
  r.s = j.at("s");
  r.M = j.at("M");
  r.order = catalog::parse_integer(j.at("order"));
  r.blocks = j.at("blocks").get<std::vector<ResidueSet>>();
  r.dual_blocks = j.at("dual_blocks").get<std::vector<ResidueSet>>();
  r.dual_order = j.at("dual_order");
  r.degrees = catalog::parse_integers(j.at("degrees"));
  r.multiplicities = catalog::parse_integers(j.at("multiplicities"));
  r.P = catalog::parse_matrix(j.at("P"));
  r.Q = catalog::parse_matrix(j.at("Q"));
  for (const auto& b : j.at("B")) r.B.push_back(catalog::parse_matrix(b));
  const auto& f = j.at("flags");
  r.flags.is_scheme = f.at("is_scheme");
  r.flags.is_primitive = f.at("is_primitive");
  r.flags.is_self_dual = f.at("is_self_dual");
  r.flags.srg_relations = f.at("srg_relations").get<std::vector<bool>>();
  if (f.contains("p_squared_is_scalar")) r.flags.p_squared_is_scalar = f.at("p_squared_is_scalar").get<bool>();
  return r;
}

/// {"header": run metadata, "partition": ..., "schemes": [...]}.
struct Catalog {
  Json header = Json::object();
  std::optional<CyclotomicPartition> partition;
  std::vector<SchemeRecord> schemes;

  Json to_json() const {
    Json j{{"header", header}};
    j["partition"] = partition ? cyclo3::to_json(*partition) : Json(nullptr);
    Json arr = Json::array();
    for (const auto& r : schemes) arr.push_back(cyclo3::to_json(r));
    j["schemes"] = arr;
    return j;
  }

  std::string dump() const { return to_json().dump(2) + "\n"; }

  static Catalog parse(const std::string& text) {
    const auto j = Json::parse(text);
    Catalog c;
    c.header = j.at("header");
    if (!j.at("partition").is_null()) c.partition = partition_from_json(j.at("partition"));
    for (const auto& r : j.at("schemes")) c.schemes.push_back(scheme_from_json(r));
    return c;
  }
};

inline void export_catalog(const Catalog& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << c.dump();
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

inline Catalog import_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return Catalog::parse(ss.str());
}

}  // namespace cyclo3
