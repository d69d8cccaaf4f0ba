#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

#include "cyclo3/cycpart.hpp"
#include "cyclo3/errors.hpp"
#include "cyclo3/matrix.hpp"
#include "cyclo3/report.hpp"
#include "cyclo3/scheme.hpp"

#ifndef CYCLO3_DATA_DIR
#define CYCLO3_DATA_DIR "data"
#endif

namespace cyclo3 {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in q with rational coefficients; coeffs[i] multiplies q^i.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Rational& q) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

  /// Value at q; throws unless it is an integer.
  BigInt evaluate_integer(const BigInt& q) const {
    const Rational v = evaluate(Rational(q));
    if (boost::multiprecision::denominator(v) != 1) {
      throw InternalError("polynomial value " + v.str() + " at q = " + q.str() + " is not an integer");
    }
    return boost::multiprecision::numerator(v);
  }

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return QPolynomial(std::move(c));
  }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  bool is_zero() const { return coeffs_.empty(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

/// Residue set named by a table row: the zero element, a union of named
/// sets, or the complement of such a union. Names: "0", "T1", "T2", "T3",
/// "-T1".
struct RowSet {
  enum class Kind { Zero, Union, Complement } kind = Kind::Zero;
  std::vector<std::string> names;

  std::string label() const {
    if (kind == Kind::Zero) return "zero";
    std::string u;
    for (const auto& n : names) u += (u.empty() ? "" : "|") + (n == "0" ? std::string("{0}") : n);
    return kind == Kind::Union ? u : "Z_M\\(" + u + ")";
  }
};

inline ResidueSet resolve(const RowSet& set, const CyclotomicPartition& p) {
  if (set.kind == RowSet::Kind::Zero) throw std::invalid_argument("the zero row names no residues");
  std::vector<char> in(p.M, 0);
  for (const auto& name : set.names) {
    ResidueSet part;
    if (name == "0") part = {0};
    else if (name == "T1") part = p.T1;
    else if (name == "T2") part = p.T2;
    else if (name == "T3") part = p.T3;
    else if (name == "-T1") part = negate_set(p.M, p.T1);
    else throw std::invalid_argument("unknown row set name " + name);
    for (auto a : part) in[a] = 1;
  }
  ResidueSet out;
  for (std::uint64_t a = 0; a < p.M; ++a) {
    if (static_cast<bool>(in[a]) != (set.kind == RowSet::Kind::Complement)) out.push_back(a);
  }
  return out;
}

struct TableRow {
  RowSet set;
  std::vector<QPolynomial> entries;
};

struct TableSpec {
  std::string id;      // "I" .. "V"
  std::string scheme;  // scheme id whose character rows it lists
  std::vector<TableRow> rows;
};

struct MatrixSpec {
  std::string scheme;
  std::string name;  // "B1" .. "L3"
  std::vector<std::vector<QPolynomial>> entries;
};

/// Transcribed tables and intersection matrices.
class Appendix {
 public:
  static Appendix load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open transcription file " + path);
    const auto doc = nlohmann::json::parse(in);
    Appendix a;
    for (const auto& t : doc.at("tables")) {
      TableSpec spec{t.at("table"), t.at("scheme"), {}};
      for (const auto& r : t.at("rows")) {
        TableRow row;
        const auto& s = r.at("set");
        const std::string kind = s.at("kind");
        row.set.kind = kind == "zero" ? RowSet::Kind::Zero
                       : kind == "union" ? RowSet::Kind::Union
                                         : RowSet::Kind::Complement;
        if (s.contains("of")) row.set.names = s.at("of").get<std::vector<std::string>>();
        for (const auto& e : r.at("entries")) row.entries.push_back(parse_poly(e));
        spec.rows.push_back(std::move(row));
      }
      a.tables_.push_back(std::move(spec));
    }
    for (const auto& m : doc.at("matrices")) {
      MatrixSpec spec{m.at("scheme"), m.at("matrix"), {}};
      for (const auto& row : m.at("entries")) {
        std::vector<QPolynomial> r;
        for (const auto& e : row) r.push_back(parse_poly(e));
        spec.entries.push_back(std::move(r));
      }
      a.matrices_.push_back(std::move(spec));
    }
    return a;
  }

  const std::vector<TableSpec>& tables() const { return tables_; }
  const std::vector<MatrixSpec>& matrices() const { return matrices_; }

  const TableSpec& table(const std::string& id) const {
    for (const auto& t : tables_) {
      if (t.id == id) return t;
    }
    throw std::invalid_argument("no table " + id);
  }

  const TableSpec& table_for(const std::string& scheme) const {
    for (const auto& t : tables_) {
      if (t.scheme == scheme) return t;
    }
    throw std::invalid_argument("no table for scheme " + scheme);
  }

  /// nullptr when the scheme has no separately listed matrix of that name.
  const MatrixSpec* find_matrix(const std::string& scheme, const std::string& name) const {
    for (const auto& m : matrices_) {
      if (m.scheme == scheme && m.name == name) return &m;
    }
    return nullptr;
  }

 private:
  static QPolynomial parse_poly(const nlohmann::json& e) {
    std::vector<Rational> c;
    for (const auto& pair : e) {
      c.emplace_back(BigInt(pair.at(0).get<std::int64_t>()), BigInt(pair.at(1).get<std::int64_t>()));
    }
    return QPolynomial(std::move(c));
  }

  std::vector<TableSpec> tables_;
  std::vector<MatrixSpec> matrices_;
};

/// The transcription shipped in the data directory, loaded once.
inline const Appendix& appendix() {
  static const Appendix a = Appendix::load(std::string(CYCLO3_DATA_DIR) + "/appendix.json");
  return a;
}

struct AppendixMatrix {
  IntMatrix value;
  std::string note;  // set when the request was answered by another matrix
};

/// Evaluated intersection matrix; "L" requests for the self-dual scheme on H
/// are answered with the corresponding B, since there A_i = A_i'.
inline AppendixMatrix appendix_matrix(const std::string& scheme, const std::string& which, const BigInt& q,
                                      const Appendix& book = appendix()) {
  std::string name = which;
  AppendixMatrix out;
  const MatrixSpec* spec = book.find_matrix(scheme, name);
  if (!spec && scheme == "thm2ii" && !which.empty() && which[0] == 'L') {
    name = "B" + which.substr(1);
    spec = book.find_matrix(scheme, name);
    out.note = "self-dual scheme: " + which + " = " + name;
  }
  if (!spec) throw std::invalid_argument("no appendix matrix " + which + " for " + scheme);
  out.value = IntMatrix(spec->entries.size(), spec->entries.size());
  for (std::size_t i = 0; i < spec->entries.size(); ++i) {
    for (std::size_t j = 0; j < spec->entries[i].size(); ++j) out.value(i, j) = spec->entries[i][j].evaluate_integer(q);
  }
  return out;
}

inline std::vector<BigInt> evaluate_row(const TableRow& row, const BigInt& q) {
  std::vector<BigInt> out;
  for (const auto& e : row.entries) out.push_back(e.evaluate_integer(q));
  return out;
}

/// Row of a table by its label ("zero", "{0}", "-T1", "T2", "Z_M\\(-T1|{0})", ...).
inline std::vector<BigInt> table_row(const std::string& table_id, const std::string& label, const BigInt& q,
                                     const Appendix& book = appendix()) {
  for (const auto& row : book.table(table_id).rows) {
    if (row.set.label() == label) return evaluate_row(row, q);
  }
  throw std::invalid_argument("table " + table_id + " has no row " + label);
}

namespace detail {

inline std::string join(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

inline std::string join(const ResidueSet& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline void compare_matrix(Report& r, const std::string& name, const IntMatrix& computed, const IntMatrix& book) {
  for (std::size_t i = 0; i < book.rows(); ++i) {
    for (std::size_t j = 0; j < book.cols(); ++j) {
      if (computed(i, j) != book(i, j)) {
        r.add(name, false,
              "entry (" + std::to_string(i) + "," + std::to_string(j) + "): computed " + computed(i, j).str() +
                  ", transcribed " + book(i, j).str());
        return;
      }
    }
  }
  r.add(name, true);
}

}  // namespace detail

/// Matches the computed rows of P against the table by value. Columns are
/// the record's relations in pattern order. Each check name carries the
/// dual class to row-label correspondence that was found.
inline Report reconcile_table(const TableSpec& table, const SchemeRecord& rec, const CyclotomicPartition& p) {
  Report r{"table " + table.id + " vs computed " + rec.id + " at s = " + std::to_string(rec.s)};
  const BigInt q = rec.q();
  std::vector<bool> used(table.rows.size(), false);
  for (std::size_t l = 0; l < rec.P.rows(); ++l) {
    const auto row = rec.P.row(l);
    std::size_t hit = table.rows.size();
    for (std::size_t t = 0; t < table.rows.size(); ++t) {
      if (!used[t] && evaluate_row(table.rows[t], q) == row) {
        hit = t;
        break;
      }
    }
    const std::string cls = l == 0 ? "zero" : detail::join(rec.dual_blocks[l - 1]);
    if (hit == table.rows.size()) {
      r.add("row " + detail::join(row) + " for " + cls, false, "no table row has these values");
      continue;
    }
    used[hit] = true;
    const auto& set = table.rows[hit].set;
    const bool label_ok = l == 0 ? set.kind == RowSet::Kind::Zero
                                 : set.kind != RowSet::Kind::Zero && resolve(set, p) == rec.dual_blocks[l - 1];
    r.add("row " + detail::join(row) + ": class " + cls + " <-> label " + set.label(), label_ok,
          label_ok ? "" : "label names a different residue set");
  }
  for (std::size_t t = 0; t < table.rows.size(); ++t) {
    if (!used[t]) r.add("table row " + table.rows[t].set.label() + " matched", false, "no computed row has its values");
  }
  return r;
}

/// Relation blocks (in table order) of the dual scheme listed by `table`.
inline FusionPattern dual_pattern_from_table(const TableSpec& table, const CyclotomicPartition& p) {
  FusionPattern f{p.M, {}};
  for (const auto& row : table.rows) {
    if (row.set.kind != RowSet::Kind::Zero) f.blocks.push_back(resolve(row.set, p));
  }
  return f;
}

inline Report reconcile_intersection_matrices(const std::string& scheme, const SchemeRecord& rec,
                                              const SchemeRecord& dual, const Appendix& book = appendix()) {
  Report r{"appendix intersection matrices for " + scheme + " at q = " + std::to_string(rec.q())};
  for (int i = 1; i <= 3; ++i) {
    const std::string b = "B" + std::to_string(i), l = "L" + std::to_string(i);
    detail::compare_matrix(r, b, rec.B.at(i), appendix_matrix(scheme, b, rec.q(), book).value);
    const auto L = appendix_matrix(scheme, l, rec.q(), book);
    detail::compare_matrix(r, l + (L.note.empty() ? "" : " (" + L.note + ")"), dual.B.at(i), L.value);
    if (!L.note.empty()) r.add(b + " = " + l + " computed", rec.B.at(i) == dual.B.at(i));
  }
  return r;
}

/// Everything a table-backed scheme needs: its record, its dual (relations
/// taken from the table's row labels, in table order) and both reports.
struct Reconciliation {
  SchemeRecord scheme;
  SchemeRecord dual;
  Report report;
};

inline const char* dual_id(const std::string& scheme) {
  if (scheme == "thm1") return "dual1";
  if (scheme == "thm2i") return "dual2i";
  if (scheme == "thm2ii") return "thm2ii";
  throw std::invalid_argument("unknown scheme id " + scheme);
}

inline FieldLabel field_of(const std::string& scheme) {
  if (scheme == "thm1") return FieldLabel::F;
  if (scheme == "thm2i") return FieldLabel::G;
  if (scheme == "thm2ii") return FieldLabel::H;
  throw std::invalid_argument("unknown scheme id " + scheme);
}

inline Reconciliation reconcile(const ClassContext& c, const CyclotomicPartition& p, const std::string& scheme,
                                const Appendix& book = appendix()) {
  Reconciliation out;
  out.report.title = "reconciliation of " + scheme + " at s = " + std::to_string(p.s);
  out.scheme = build_scheme_record(c, FusionPattern::from_partition(p), scheme, p.s);
  const auto& table = book.table_for(scheme);
  out.report.append(reconcile_table(table, out.scheme, p));
  const std::string did = dual_id(scheme);
  out.dual = build_scheme_record(c, dual_pattern_from_table(table, p), did, p.s);
  if (did != scheme) out.report.append(reconcile_table(book.table_for(did), out.dual, p));
  out.report.append(reconcile_intersection_matrices(scheme, out.scheme, out.dual, book));
  return out;
}

/// Structure of the dual schemes: D_1 = C_0, and for the scheme on F also
/// D_2 = D and D_0 u D_1 = E; for the scheme on G the classes {0}, T1 and
/// the rest. Table entries are checked through `reconcile`.
inline Report dual_structure_check(const FieldTower& t, const CyclotomicPartition& p, const SchemeRecord& rec) {
  Report r{"dual classes of " + rec.id + " at s = " + std::to_string(p.s)};
  const auto has = [&](const ResidueSet& set) {
    return std::find(rec.dual_blocks.begin(), rec.dual_blocks.end(), set) != rec.dual_blocks.end();
  };
  r.add("D_1 = C_0 is a dual class", has({0}));
  ResidueSet rest;
  if (rec.id == "thm1") {
    const auto minus_t1 = negate_set(p.M, p.T1);
    r.add("D_2 = union of C_i over -T1 is a dual class", has(minus_t1));
    const auto D = compute_D(t);
    r.add("D_2 = D as subsets of F", union_of_classes(t.F, p.M, t.omega_exponent, minus_t1) == D.members);
    auto e = union_of_classes(t.F, p.M, t.omega_exponent, {0});
    e.push_back(0);
    std::sort(e.begin(), e.end());
    std::vector<Element> subfield;
    for (Element u = 0; u < t.F.size(); ++u) {
      if (t.F.in_subfield(t.s, u)) subfield.push_back(u);
    }
    r.add("D_0 u D_1 = E (imprimitive dual)", e == subfield);
  } else if (rec.id == "thm2i") {
    r.add("D_2 = union of C_i over T1 is a dual class", has(p.T1));
    for (std::uint64_t a = 1; a < p.M; ++a) {
      if (!std::binary_search(p.T1.begin(), p.T1.end(), a)) rest.push_back(a);
    }
    r.add("D_3 = union of C_i over (T2 u T3) \\ {0} is a dual class", has(rest));
  } else {
    throw std::invalid_argument("dual structure is listed for thm1 and thm2i only");
  }
  return r;
}

}  // namespace cyclo3
