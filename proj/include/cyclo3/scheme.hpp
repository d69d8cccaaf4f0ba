#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo3/charsum.hpp"
#include "cyclo3/cycpart.hpp"
#include "cyclo3/errors.hpp"
#include "cyclo3/matrix.hpp"
#include "cyclo3/report.hpp"

namespace cyclo3 {

using ResidueSet = std::vector<std::uint64_t>;

/// Relations R_k = union of C_i over i in blocks[k-1]; R_0 = {0} is implicit.
struct FusionPattern {
  std::uint64_t M = 0;
  std::vector<ResidueSet> blocks;

  static FusionPattern from_partition(const CyclotomicPartition& p) { return {p.M, {p.T1, p.T2, p.T3}}; }

  std::size_t d() const { return blocks.size(); }

  /// Block index (1-based) of every residue; throws unless the blocks
  /// partition Z_M into nonempty sets.
  std::vector<std::size_t> labels() const {
    if (M == 0 || blocks.empty()) throw std::invalid_argument("empty fusion pattern");
    std::vector<std::size_t> out(M, 0);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (blocks[k].empty()) throw std::invalid_argument("fusion block " + std::to_string(k + 1) + " is empty");
      for (auto a : blocks[k]) {
        if (a >= M) throw std::invalid_argument("fusion residue " + std::to_string(a) + " out of range");
        if (out[a]) throw std::invalid_argument("fusion blocks overlap at " + std::to_string(a));
        out[a] = k + 1;
      }
    }
    for (std::uint64_t a = 0; a < M; ++a) {
      if (!out[a]) throw std::invalid_argument("fusion blocks miss residue " + std::to_string(a));
    }
    return out;
  }
};

/// A field together with its order-M cyclotomic classes C_i = base^i <base^M>
/// and their Gauss periods.
struct ClassContext {
  std::string field_name;
  BinaryField K;
  std::uint64_t M = 0;
  std::uint64_t base_exponent = 1;
  std::uint64_t class_size = 0;
  std::vector<std::int64_t> eta;

  std::uint64_t order() const { return K.size(); }
};

inline ClassContext class_context(const BinaryField& K, std::uint64_t M, std::uint64_t base_exponent,
                                  std::string name, unsigned threads = 1) {
  ClassContext c{std::move(name), K, M, base_exponent, K.group_order() / M, {}};
  c.eta = stream_periods(K, M, base_exponent, threads);
  return c;
}

inline ClassContext class_context(const FieldTower& t, FieldLabel label, unsigned threads = 1) {
  return class_context(t.field(label), t.M(), t.base_exponent(label), to_string(label), threads);
}

/// (1, psi(g^a R_1), ..., psi(g^a R_d)); with a empty, the degree row.
inline std::vector<BigInt> character_row(const ClassContext& c, const FusionPattern& pattern,
                                         std::optional<std::uint64_t> a) {
  std::vector<BigInt> row{1};
  for (const auto& block : pattern.blocks) {
    if (!a) {
      row.push_back(BigInt(block.size()) * c.class_size);
      continue;
    }
    std::int64_t sum = 0;
    for (auto i : block) sum += c.eta[(*a + i) % c.M];
    row.push_back(sum);
  }
  return row;
}

struct RowCensus {
  std::vector<std::vector<BigInt>> rows;  // distinct nonprincipal rows
  std::vector<ResidueSet> classes;        // residues a giving each row
};

struct BannaiMuzychukResult {
  bool is_scheme = false;
  RowCensus census;
  std::vector<ResidueSet> dual_blocks;  // one per nonprincipal row of P
  IntMatrix P;
};

inline RowCensus row_census(const ClassContext& c, const FusionPattern& pattern) {
  pattern.labels();
  if (pattern.M != c.M) throw std::invalid_argument("pattern modulus differs from the class modulus");
  std::map<std::vector<BigInt>, ResidueSet> groups;
  for (std::uint64_t a = 0; a < c.M; ++a) groups[character_row(c, pattern, a)].push_back(a);
  RowCensus census;
  for (auto& [row, cls] : groups) {
    census.rows.push_back(row);
    census.classes.push_back(cls);
  }
  return census;
}

/// The fusion is a d-class scheme iff the characters psi(g^a .) fall into
/// exactly d classes of equal fused rows. Dual classes come out sorted by
/// (multiplicity, row); `dual_order` instead fixes them to the given sets.
inline BannaiMuzychukResult bannai_muzychuk_verify(const ClassContext& c, const FusionPattern& pattern,
                                                   const std::optional<std::vector<ResidueSet>>& dual_order = {}) {
  BannaiMuzychukResult r;
  r.census = row_census(c, pattern);
  r.is_scheme = r.census.rows.size() == pattern.d();
  if (!r.is_scheme) return r;

  std::vector<std::size_t> order(r.census.rows.size());
  std::iota(order.begin(), order.end(), 0);
  if (dual_order) {
    if (dual_order->size() != order.size()) throw std::invalid_argument("dual order has the wrong number of classes");
    for (std::size_t l = 0; l < order.size(); ++l) {
      auto it = std::find(r.census.classes.begin(), r.census.classes.end(), (*dual_order)[l]);
      if (it == r.census.classes.end()) {
        throw std::invalid_argument("requested dual class " + std::to_string(l + 1) + " is not a row class");
      }
      order[l] = static_cast<std::size_t>(it - r.census.classes.begin());
    }
  } else {
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      const auto mx = r.census.classes[x].size(), my = r.census.classes[y].size();
      if (mx != my) return mx < my;
      return r.census.rows[x] < r.census.rows[y];
    });
  }
  std::vector<std::vector<BigInt>> rows{character_row(c, pattern, std::nullopt)};
  for (auto l : order) {
    rows.push_back(r.census.rows[l]);
    r.dual_blocks.push_back(r.census.classes[l]);
  }
  r.P = IntMatrix::from_rows(rows);
  return r;
}

/// Q = |X| P^(-1) by adjugate and determinant; Q must be integral.
inline IntMatrix second_eigenmatrix(const IntMatrix& P, const BigInt& order) {
  const BigInt det = determinant(P);
  if (det == 0) throw InternalError("first eigenmatrix is singular");
  IntMatrix Q = order * adjugate(P);
  for (std::size_t i = 0; i < Q.rows(); ++i) {
    for (std::size_t j = 0; j < Q.cols(); ++j) {
      if (Q(i, j) % det != 0) throw InternalError("second eigenmatrix is not integral");
      Q(i, j) /= det;
    }
  }
  if (P * Q != order * IntMatrix::identity(P.rows())) throw InternalError("P Q != |X| I");
  return Q;
}

/// B_i(k, j) = p_ij^k = sum_l m_l P_li P_lj P_lk / (|X| n_k).
inline std::vector<IntMatrix> intersection_numbers(const IntMatrix& P, const std::vector<BigInt>& multiplicities,
                                                   const BigInt& order) {
  const std::size_t n = P.rows();
  std::vector<IntMatrix> B(n, IntMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        BigInt num = 0;
        for (std::size_t l = 0; l < n; ++l) num += multiplicities[l] * P(l, i) * P(l, j) * P(l, k);
        const BigInt den = order * P(0, k);
        if (num % den != 0) {
          throw InternalError("p_" + std::to_string(i) + std::to_string(j) + "^" + std::to_string(k) +
                              " is not an integer");
        }
        B[i](k, j) = num / den;
      }
    }
  }
  return B;
}

struct OracleResult {
  bool constant = true;  // counts constant on every relation
  std::vector<IntMatrix> B;
  std::string detail;
};

/// Counts #{x in R_i : z + x in R_j} for every z directly and checks that
/// the counts only depend on the relation containing z.
inline OracleResult brute_force_intersection_oracle(const ClassContext& c, const FusionPattern& pattern) {
  if (c.K.degree() > 12) throw std::invalid_argument("pair-count oracle limited to fields of order <= 2^12");
  const auto block_of = pattern.labels();
  const auto* table = c.K.log_table();
  const std::uint64_t inv = nt::modinv(c.base_exponent % c.M, c.M);
  const std::size_t n = pattern.d() + 1;
  const std::uint64_t size = c.K.size();

  std::vector<std::uint8_t> label(size, 0);
  for (Element u = 1; u < size; ++u) label[u] = static_cast<std::uint8_t>(block_of[nt::mulmod(table->log[u] % c.M, inv, c.M)]);

  OracleResult out;
  out.B.assign(n, IntMatrix(n, n));
  std::vector<bool> seen(n, false);
  std::vector<std::int64_t> counts(n * n);
  for (Element z = 0; z < size; ++z) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Element x = 0; x < size; ++x) ++counts[label[x] * n + label[z ^ x]];
    const std::size_t k = label[z];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const BigInt v = counts[i * n + j];
        if (!seen[k]) {
          out.B[i](k, j) = v;
        } else if (out.B[i](k, j) != v && out.constant) {
          out.constant = false;
          std::ostringstream os;
          os << "count of (R_" << i << ", R_" << j << ") pairs summing to z = " << z << " in R_" << k << " is " << v
             << ", earlier " << out.B[i](k, j);
          out.detail = os.str();
        }
      }
    }
    seen[k] = true;
  }
  return out;
}

struct SchemeFlags {
  bool is_scheme = false;
  bool is_primitive = false;
  bool is_self_dual = false;
  std::vector<bool> srg_relations;          // index k-1 for relation R_k
  std::optional<bool> p_squared_is_scalar;  // only for self-dual schemes
};

struct SchemeRecord {
  std::string id;
  std::string field;
  unsigned s = 0;
  std::uint64_t M = 0;
  BigInt order;  // |X|
  std::vector<ResidueSet> blocks;
  std::vector<ResidueSet> dual_blocks;
  std::string dual_order;  // "canonical", "matched" or "given"
  std::vector<BigInt> degrees;         // n_0 .. n_d
  std::vector<BigInt> multiplicities;  // m_0 .. m_d
  IntMatrix P, Q;
  std::vector<IntMatrix> B;
  SchemeFlags flags;

  std::uint64_t q() const { return std::uint64_t{1} << s; }
  std::size_t d() const { return blocks.size(); }
};

namespace detail {

/// sigma[i] = index of the dual block equal to relation block i, if every
/// relation has one.
inline std::optional<std::vector<std::size_t>> match_dual_blocks(const std::vector<ResidueSet>& blocks,
                                                                 const std::vector<ResidueSet>& dual) {
  std::vector<std::size_t> sigma;
  for (const auto& b : blocks) {
    auto it = std::find(dual.begin(), dual.end(), b);
    if (it == dual.end()) return std::nullopt;
    sigma.push_back(static_cast<std::size_t>(it - dual.begin()));
  }
  return sigma;
}

inline std::size_t distinct_count(std::vector<BigInt> v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

}  // namespace detail

/// Primitive iff no nonprincipal eigenvalue equals a degree; self-dual iff
/// the dual classes coincide with the relations (characters identified with
/// elements through psi(b .)) and Q = P in that matching; SRG relations
/// have exactly two nonprincipal eigenvalues.
inline SchemeFlags classify(SchemeRecord& rec) {
  SchemeFlags f;
  f.is_scheme = true;
  const std::size_t n = rec.P.rows();
  f.is_primitive = true;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<BigInt> eig;
    for (std::size_t l = 1; l < n; ++l) {
      if (rec.P(l, i) == rec.P(0, i)) f.is_primitive = false;
      eig.push_back(rec.P(l, i));
    }
    f.srg_relations.push_back(detail::distinct_count(eig) == 2);
  }
  if (auto sigma = detail::match_dual_blocks(rec.blocks, rec.dual_blocks)) {
    std::vector<std::size_t> perm{0};
    for (auto x : *sigma) perm.push_back(x + 1);
    const IntMatrix Pm = rec.P.permute_rows(perm);
    const IntMatrix Qm = rec.Q.permute_cols(perm);
    if (Pm == Qm) {
      f.is_self_dual = true;
      f.p_squared_is_scalar = Pm * Pm == rec.order * IntMatrix::identity(n);
      std::vector<ResidueSet> dual;
      std::vector<BigInt> mult{1};
      for (auto x : *sigma) {
        dual.push_back(rec.dual_blocks[x]);
        mult.push_back(rec.multiplicities[x + 1]);
      }
      rec.P = Pm;
      rec.Q = Qm;
      rec.dual_blocks = std::move(dual);
      rec.multiplicities = std::move(mult);
      rec.dual_order = "matched";
    }
  }
  rec.flags = f;
  return f;
}

/// Full pipeline for a fusion that must be a scheme: census, P, Q, B, flags.
inline SchemeRecord build_scheme_record(const ClassContext& c, const FusionPattern& pattern, std::string id, unsigned s,
                                        const std::optional<std::vector<ResidueSet>>& dual_order = {}) {
  auto bm = bannai_muzychuk_verify(c, pattern, dual_order);
  if (!bm.is_scheme) {
    throw std::invalid_argument("fusion " + id + " on " + c.field_name + " is not a scheme: " +
                                std::to_string(bm.census.rows.size()) + " distinct character rows for " +
                                std::to_string(pattern.d()) + " classes");
  }
  SchemeRecord rec;
  rec.id = std::move(id);
  rec.field = c.field_name;
  rec.s = s;
  rec.M = c.M;
  rec.order = c.order();
  rec.blocks = pattern.blocks;
  rec.dual_blocks = bm.dual_blocks;
  rec.dual_order = dual_order ? "given" : "canonical";
  rec.P = bm.P;
  rec.degrees = rec.P.row(0);
  rec.multiplicities = {1};
  for (const auto& cls : rec.dual_blocks) rec.multiplicities.push_back(BigInt(cls.size()) * c.class_size);
  rec.Q = second_eigenmatrix(rec.P, rec.order);
  if (rec.Q.row(0) != rec.multiplicities) throw InternalError("row 0 of Q differs from the multiplicities");
  rec.B = intersection_numbers(rec.P, rec.multiplicities, rec.order);
  if (!dual_order) {
    classify(rec);
  } else {
    // Keep the requested order; flags are order independent.
    SchemeRecord tmp = rec;
    rec.flags = classify(tmp);
  }
  return rec;
}

/// Structural invariants every verified record must satisfy.
inline Report verify_record(const SchemeRecord& r) {
  Report rep{"invariants of " + r.id + " on " + r.field};
  const std::size_t n = r.P.rows();
  rep.add("P Q = |X| I", r.P * r.Q == r.order * IntMatrix::identity(n));
  rep.add("row 0 of P is the degrees", r.P.row(0) == r.degrees);
  rep.add("row 0 of Q is the multiplicities", r.Q.row(0) == r.multiplicities);
  const BigInt sum_n = std::accumulate(r.degrees.begin(), r.degrees.end(), BigInt(0));
  const BigInt sum_m = std::accumulate(r.multiplicities.begin(), r.multiplicities.end(), BigInt(0));
  rep.add("sum of degrees = |X|", sum_n == r.order, sum_n.str());
  rep.add("sum of multiplicities = |X|", sum_m == r.order, sum_m.str());
  bool rows_zero = true;
  for (std::size_t l = 1; l < n; ++l) {
    const auto row = r.P.row(l);
    if (std::accumulate(row.begin(), row.end(), BigInt(0)) != 0) rows_zero = false;
  }
  rep.add("nonprincipal rows of P sum to 0", rows_zero);
  rep.add("B_0 = I", r.B.at(0) == IntMatrix::identity(n));
  bool row_sums = true, symmetric = true, balance = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto row = r.B[i].row(k);
      if (std::accumulate(row.begin(), row.end(), BigInt(0)) != r.degrees[i]) row_sums = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (r.B[i](k, j) != r.B[j](k, i)) symmetric = false;
        if (r.degrees[k] * r.B[i](k, j) != r.degrees[j] * r.B[i](j, k)) balance = false;
      }
    }
  }
  rep.add("rows of B_i sum to n_i", row_sums);
  rep.add("p_ij^k = p_ji^k", symmetric);
  rep.add("n_k p_ij^k = n_j p_ik^j", balance);
  return rep;
}

/// Eigenmatrices equal after some reordering of relations and dual classes.
inline bool same_eigenmatrix_up_to_order(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const std::size_t n = a.rows();
  std::vector<std::size_t> cols(n), rows(n);
  std::iota(cols.begin(), cols.end(), 0);
  do {
    const IntMatrix ac = a.permute_cols(cols);
    std::iota(rows.begin(), rows.end(), 0);
    do {
      if (ac.permute_rows(rows) == b) return true;
    } while (std::next_permutation(rows.begin() + 1, rows.end()));
  } while (std::next_permutation(cols.begin() + 1, cols.end()));
  return false;
}

/// Exponents k < |K*| with absolute trace tr(g^k) = 0: the trace-zero
/// hyperplane minus 0.
inline ResidueSet trace_zero_hyperplane(const BinaryField& K) {
  ResidueSet out;
  Element u = 1;
  for (std::uint64_t k = 0; k < K.group_order(); ++k, u = K.mul_by_generator(u)) {
    if (!K.trace_bit(u)) out.push_back(k);
  }
  return out;
}

/// Strongly regular input for the three-class refinement. The hyperplane
/// qualifies only when 1 lies outside it (odd degree); otherwise its
/// complement, the trace-one set, does.
inline ResidueSet im10_default_input(const BinaryField& K) {
  if (K.trace_bit(1)) return trace_zero_hyperplane(K);
  ResidueSet zero = trace_zero_hyperplane(K), out;
  std::vector<char> in(K.group_order(), 0);
  for (auto k : zero) in[k] = 1;
  for (std::uint64_t k = 0; k < K.group_order(); ++k) {
    if (!in[k]) out.push_back(k);
  }
  return out;
}

struct Im10Result {
  SchemeRecord two_class;
  SchemeRecord three_class;
};

/// Three-class refinement R_1' = R_1, R_2' = D_1 \ R_1, R_3' = D_2 of a
/// two-class translation scheme with R_1 inside the dual class D_1. The
/// finest cyclotomic scheme (singleton classes) carries both, so any
/// S in K* can be fed in as generator exponents.
inline Im10Result im10_construct(const BinaryField& K, const ResidueSet& S, unsigned s, unsigned threads = 1) {
  const std::uint64_t n = K.group_order();
  auto c = class_context(K, n, 1, "F", threads);
  ResidueSet sorted = detail::sorted_unique(S);
  std::vector<char> in_S(n, 0);
  for (auto k : sorted) in_S.at(k) = 1;
  ResidueSet rest;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (!in_S[k]) rest.push_back(k);
  }
  Im10Result out;
  const FusionPattern two{n, {sorted, rest}};
  if (!bannai_muzychuk_verify(c, two).is_scheme) throw std::invalid_argument("input is not a two-class scheme");
  out.two_class = build_scheme_record(c, two, "im10-input", s);

  const auto& dual = out.two_class.dual_blocks;
  std::size_t d1 = dual.size();
  for (std::size_t l = 0; l < dual.size(); ++l) {
    if (std::includes(dual[l].begin(), dual[l].end(), sorted.begin(), sorted.end())) d1 = l;
  }
  if (d1 == dual.size()) throw std::invalid_argument("R_1 is not contained in a dual class");
  ResidueSet r2;
  std::set_difference(dual[d1].begin(), dual[d1].end(), sorted.begin(), sorted.end(), std::back_inserter(r2));
  if (r2.empty()) throw std::invalid_argument("D_1 \\ R_1 is empty");
  const FusionPattern three{n, {sorted, r2, dual[1 - d1]}};
  out.three_class = build_scheme_record(c, three, "im10", s);
  return out;
}

}  // namespace cyclo3
