#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo3/errors.hpp"
#include "cyclo3/tower.hpp"

namespace cyclo3 {

/// The partition T1, T2, T3 of Z_M, M = 2^(2s) + 2^s + 1. Sets are sorted.
struct CyclotomicPartition {
  unsigned s = 0;
  std::uint64_t M = 0;
  std::vector<std::uint64_t> T1, T2, T3;

  /// Block k in {1, 2, 3}.
  const std::vector<std::uint64_t>& block(int k) const {
    switch (k) {
      case 1: return T1;
      case 2: return T2;
      case 3: return T3;
    }
    throw std::out_of_range("partition block index must be 1, 2 or 3");
  }

  std::array<std::vector<std::uint64_t>, 3> blocks() const { return {T1, T2, T3}; }

  /// Block index (1..3) of every residue; 0 for residues in no block.
  std::vector<int> labels() const {
    std::vector<int> out(M, 0);
    for (int k = 1; k <= 3; ++k) {
      for (auto a : block(k)) out.at(a) = k;
    }
    return out;
  }

  friend bool operator==(const CyclotomicPartition&, const CyclotomicPartition&) = default;
};

/// Expected block sizes (2^s + 1, 2^(2s-1) + 2^(s-1), 2^(2s-1) - 2^(s-1)).
inline std::array<std::uint64_t, 3> expected_block_sizes(unsigned s) {
  const std::uint64_t q = std::uint64_t{1} << s;
  const std::uint64_t h = q / 2;  // 2^(s-1)
  return {q + 1, q * h + h, q * h - h};
}

/// D = { u in F* : tr_{F/E}(u^-1) = 0 }.
struct InverseTraceSet {
  std::vector<std::uint64_t> exponents;  // k with omega^k in D, sorted
  std::vector<Element> members;          // sorted element bit masks
};

namespace detail {

/// omega^k for every k < |F*|.
inline std::vector<Element> omega_powers(const FieldTower& t) {
  std::vector<Element> out(t.F.group_order());
  Element u = 1;
  for (auto& v : out) {
    v = u;
    u = t.F.mul(u, t.omega);
  }
  return out;
}

inline std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline void check_partition_sizes(const CyclotomicPartition& p) {
  const auto want = expected_block_sizes(p.s);
  for (int k = 1; k <= 3; ++k) {
    if (p.block(k).size() != want[k - 1]) {
      throw InternalError("|T" + std::to_string(k) + "| = " + std::to_string(p.block(k).size()) +
                          ", expected " + std::to_string(want[k - 1]));
    }
  }
}

}  // namespace detail

/// Computes D and asserts |D| = 2^(2s) - 1, E*-invariance and the
/// quadratic-form description tr_{F/E}(u^(1 + 2^s)) = 0.
inline InverseTraceSet compute_D(const FieldTower& t) {
  const auto pow = detail::omega_powers(t);
  const std::uint64_t n = pow.size();
  const std::uint64_t q = t.q();
  const std::uint64_t M = t.M();
  InverseTraceSet D;
  std::vector<char> in_D(n, 0);
  for (std::uint64_t k = 0; k < n; ++k) {
    const Element u_inv = pow[(n - k) % n];
    if (t.F.rel_trace(t.s, u_inv) == 0) {
      in_D[k] = 1;
      D.exponents.push_back(k);
      D.members.push_back(pow[k]);
    }
  }
  std::sort(D.members.begin(), D.members.end());

  if (D.exponents.size() != q * q - 1) {
    throw InternalError("|D| = " + std::to_string(D.exponents.size()) + ", expected 2^(2s) - 1");
  }
  // E* = <omega^M>; multiplying by omega^(M i) shifts exponents by M i.
  for (std::uint64_t i = 1; i < q - 1; ++i) {
    for (auto k : D.exponents) {
      if (!in_D[(k + M * i) % n]) throw InternalError("D is not E*-invariant");
    }
  }
  for (std::uint64_t k = 0; k < n; ++k) {
    const Element u = pow[k];
    const bool quadric = t.F.rel_trace(t.s, t.F.mul(u, t.F.frobenius(u, t.s))) == 0;
    if (quadric != static_cast<bool>(in_D[k])) {
      throw InternalError("inverse-trace and quadratic-form descriptions of D disagree at omega^" +
                          std::to_string(k));
    }
  }
  return D;
}

/// psi(omega^a D): exact, and necessarily one of -1, 2^s - 1, -2^s - 1.
inline std::int64_t psi_omega_a_D(const FieldTower& t, const InverseTraceSet& D, std::uint64_t a) {
  const std::uint64_t M = t.M();
  if (a >= M) throw std::invalid_argument("a must lie in [0, M)");
  const Element shift = t.F.pow(t.omega, static_cast<std::int64_t>(a));
  std::int64_t sum = 0;
  for (auto u : D.members) sum += t.F.psi(t.F.mul(shift, u));
  const auto q = static_cast<std::int64_t>(t.q());
  if (sum != -1 && sum != q - 1 && sum != -q - 1) {
    throw InternalError("psi(omega^" + std::to_string(a) + " D) = " + std::to_string(sum) +
                        " is not one of the three admissible values");
  }
  return sum;
}

/// T_k by the value of psi(omega^a D): -1 -> T1, 2^s - 1 -> T2, -2^s - 1 -> T3.
inline CyclotomicPartition partition_by_psiD(const FieldTower& t, const InverseTraceSet& D) {
  CyclotomicPartition p{.s = t.s, .M = t.M()};
  const auto q = static_cast<std::int64_t>(t.q());
  for (std::uint64_t a = 0; a < p.M; ++a) {
    const auto v = psi_omega_a_D(t, D, a);
    if (v == -1) p.T1.push_back(a);
    else if (v == q - 1) p.T2.push_back(a);
    else p.T3.push_back(a);
  }
  detail::check_partition_sizes(p);
  return p;
}

inline CyclotomicPartition partition_by_psiD(const FieldTower& t) {
  return partition_by_psiD(t, compute_D(t));
}

/// Sizes |S_a| = #{u : tr(u^(1+2^s)) = 0, tr(omega^a u) = 0} for every a.
inline std::vector<std::uint64_t> quadric_line_counts(const FieldTower& t) {
  const auto pow = detail::omega_powers(t);
  std::vector<Element> quadric;
  for (auto u : pow) {
    if (t.F.rel_trace(t.s, t.F.mul(u, t.F.frobenius(u, t.s))) == 0) quadric.push_back(u);
  }
  std::vector<std::uint64_t> counts(t.M(), 0);
  for (std::uint64_t a = 0; a < t.M(); ++a) {
    for (auto u : quadric) {
      if (t.F.rel_trace(t.s, t.F.mul(pow[a], u)) == 0) ++counts[a];
    }
  }
  return counts;
}

/// Independent route: T1 from trace zeros of omega^i, cross-checked against
/// the quadric line counts |S_a| in {0, 2^s - 1, 2(2^s - 1)}, which also give
/// T2 (secants) and T3 (passants).
inline CyclotomicPartition partition_by_trace(const FieldTower& t) {
  const std::uint64_t q = t.q();
  CyclotomicPartition p{.s = t.s, .M = t.M()};
  const auto counts = quadric_line_counts(t);
  std::vector<std::uint64_t> t1_trace;
  Element u = 1;
  for (std::uint64_t i = 0; i < p.M; ++i, u = t.F.mul(u, t.omega)) {
    if (t.F.rel_trace(t.s, u) == 0) t1_trace.push_back(i);
  }
  for (std::uint64_t a = 0; a < p.M; ++a) {
    const auto c = counts[a];
    if (c == q - 1) p.T1.push_back(a);
    else if (c == 2 * (q - 1)) p.T2.push_back(a);
    else if (c == 0) p.T3.push_back(a);
    else throw InternalError("|S_" + std::to_string(a) + "| = " + std::to_string(c) + " is not 0, q-1 or 2(q-1)");
  }
  if (p.T1 != t1_trace) {
    throw InternalError("tangent-line count and trace-zero descriptions of T1 disagree");
  }
  detail::check_partition_sizes(p);
  return p;
}

/// -X mod M for a residue set, sorted.
inline std::vector<std::uint64_t> negate_set(std::uint64_t M, const std::vector<std::uint64_t>& xs) {
  std::vector<std::uint64_t> out;
  out.reserve(xs.size());
  for (auto x : xs) out.push_back(x == 0 ? 0 : M - x);
  return detail::sorted_unique(std::move(out));
}

/// Union of the cyclotomic classes C_i^(M,K), i in `residues`, as sorted
/// elements; classes are taken relative to the primitive element g^base_exponent.
inline std::vector<Element> union_of_classes(const BinaryField& K, std::uint64_t M,
                                             std::uint64_t base_exponent,
                                             const std::vector<std::uint64_t>& residues) {
  std::vector<char> want(M, 0);
  for (auto r : residues) want.at(r) = 1;
  const std::uint64_t inv = nt::modinv(base_exponent % M, M);
  std::vector<Element> out;
  Element u = 1;
  for (std::uint64_t k = 0; k < K.group_order(); ++k, u = K.mul_by_generator(u)) {
    if (want[nt::mulmod(k % M, inv, M)]) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cyclo3
