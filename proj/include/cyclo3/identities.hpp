#pragma once

// Exact group-ring identities satisfied by the partition T1, T2, T3 of Z_M.

#include <sstream>
#include <stdexcept>
#include <string>

#include "cyclo3/cycpart.hpp"
#include "cyclo3/report.hpp"
#include "cyclo3/zmring.hpp"

namespace cyclo3 {

namespace detail {

inline void validate_partition(const CyclotomicPartition& p) {
  if (p.s < 1) throw std::invalid_argument("partition needs s >= 1");
  const std::uint64_t q = std::uint64_t{1} << p.s;
  if (p.M != q * q + q + 1) {
    throw std::invalid_argument("partition modulus M = " + std::to_string(p.M) +
                                " is not 2^(2s) + 2^s + 1");
  }
  std::vector<int> seen(p.M, 0);
  for (int k = 1; k <= 3; ++k) {
    for (auto a : p.block(k)) {
      if (a >= p.M) throw std::invalid_argument("partition residue out of range");
      ++seen[a];
    }
  }
  for (auto c : seen) {
    if (c != 1) throw std::invalid_argument("T1, T2, T3 do not partition Z_M");
  }
}

/// Group-ring handles for the blocks plus the scalars 2^s, 2^(s-1), 2^(2s-1).
struct PartitionRing {
  explicit PartitionRing(const CyclotomicPartition& p)
      : M(p.M),
        T1(ZM::from_set(p.M, p.T1)),
        T2(ZM::from_set(p.M, p.T2)),
        T3(ZM::from_set(p.M, p.T3)),
        Z(ZM::all(p.M)),
        one(ZM::identity(p.M)),
        q(BigInt(1) << p.s),
        half_q(BigInt(1) << (p.s - 1)),
        half_q2(BigInt(1) << (2 * p.s - 1)) {}

  std::uint64_t M;
  ZM T1, T2, T3, Z, one;
  BigInt q, half_q, half_q2;
};

/// Multiplies and records the augmentation identity eps(ab) = eps(a) eps(b).
class ProductLog {
 public:
  ZM mul(const ZM& a, const ZM& b) {
    ZM c = a * b;
    if (c.augmentation() != a.augmentation() * b.augmentation()) ok_ = false;
    return c;
  }
  bool augmentation_ok() const { return ok_; }

 private:
  bool ok_ = true;
};

inline void compare(Report& r, const std::string& name, const ZM& lhs, const ZM& rhs) {
  if (auto i = lhs.first_difference(rhs)) {
    std::ostringstream os;
    os << "first difference at index " << *i << ": lhs " << lhs[*i] << ", rhs " << rhs[*i];
    r.add(name, false, os.str());
  } else {
    r.add(name, true);
  }
}

}  // namespace detail

/// (T2-T3)T1^(-1) = 2^s T1, (T2-T3)T2^(-1) = 2^(2s-1) + 2^(s-1)(Z_M - T1),
/// (T2-T3)T3^(-1) = -2^(2s-1) + 2^(s-1)(Z_M - T1), plus T1^2 = T1 + 2 T2.
inline Report verify_lemma2(const CyclotomicPartition& p) {
  detail::validate_partition(p);
  const detail::PartitionRing R(p);
  detail::ProductLog log;
  Report r{"group ring identities for (T2 - T3)"};
  const ZM delta = R.T2 - R.T3;
  detail::compare(r, "T1^2 = T1 + 2 T2", log.mul(R.T1, R.T1), R.T1 + BigInt(2) * R.T2);
  detail::compare(r, "(T2-T3) T1^(-1) = 2^s T1", log.mul(delta, R.T1.involute()), R.q * R.T1);
  detail::compare(r, "(T2-T3) T2^(-1) = 2^(2s-1) + 2^(s-1)(Z_M - T1)", log.mul(delta, R.T2.involute()),
                  R.half_q2 * R.one + R.half_q * (R.Z - R.T1));
  detail::compare(r, "(T2-T3) T3^(-1) = -2^(2s-1) + 2^(s-1)(Z_M - T1)", log.mul(delta, R.T3.involute()),
                  -(R.half_q2 * R.one) + R.half_q * (R.Z - R.T1));
  r.add("augmentation is multiplicative", log.augmentation_ok());
  return r;
}

/// The six consequences for T1 T_k^(-1) and T1^2 T_k^(-1).
inline Report verify_remark_eqs(const CyclotomicPartition& p) {
  detail::validate_partition(p);
  const detail::PartitionRing R(p);
  detail::ProductLog log;
  Report r{"group ring identities for T1 T_k^(-1) and T1^2 T_k^(-1)"};
  const ZM T1inv = R.T1.involute();
  const ZM T1sq = log.mul(R.T1, R.T1);
  detail::compare(r, "T1 T1^(-1) = 2^s + Z_M", log.mul(R.T1, T1inv), R.q * R.one + R.Z);
  detail::compare(r, "T1 T2^(-1) = 2^(s-1) T1^(-1) + 2^(s-1) Z_M - 2^(s-1)",
                  log.mul(R.T1, R.T2.involute()), R.half_q * T1inv + R.half_q * R.Z - R.half_q * R.one);
  detail::compare(r, "T1 T3^(-1) = -2^(s-1) T1^(-1) + 2^(s-1) Z_M - 2^(s-1)",
                  log.mul(R.T1, R.T3.involute()), -(R.half_q * T1inv) + R.half_q * R.Z - R.half_q * R.one);
  detail::compare(r, "T1^2 T1^(-1) = 2^s T1 + (2^s + 1) Z_M", log.mul(T1sq, T1inv),
                  R.q * R.T1 + (R.q + 1) * R.Z);
  detail::compare(r, "T1^2 T2^(-1) = 2^(2s-1) + (2^(s-1) + 2^(2s-1)) Z_M - 2^(s-1) T1",
                  log.mul(T1sq, R.T2.involute()),
                  R.half_q2 * R.one + (R.half_q + R.half_q2) * R.Z - R.half_q * R.T1);
  detail::compare(r, "T1^2 T3^(-1) = -2^(2s-1) + 2^(2s-1) Z_M - 2^(s-1) T1", log.mul(T1sq, R.T3.involute()),
                  -(R.half_q2 * R.one) + R.half_q2 * R.Z - R.half_q * R.T1);
  r.add("augmentation is multiplicative", log.augmentation_ok());
  return r;
}

/// T1^2 T2^(-1) expanded as T1 (T1 T2^(-1)). The printed form above carries
/// 2^(s-1) + 2^(2s-1) as the Z_M coefficient, which fails the augmentation
/// count |T1|^2 |T2|; the expansion gives 2^(2s-1) + 2^s.
inline Report t1sq_t2inv_expansion(const CyclotomicPartition& p) {
  detail::validate_partition(p);
  const detail::PartitionRing R(p);
  Report r{"T1^2 T2^(-1) by expansion"};
  detail::compare(r, "T1^2 T2^(-1) = 2^(2s-1) + (2^(2s-1) + 2^s) Z_M - 2^(s-1) T1",
                  R.T1 * R.T1 * R.T2.involute(), R.half_q2 * R.one + (R.half_q2 + R.q) * R.Z - R.half_q * R.T1);
  const BigInt lhs = BigInt(p.T1.size()) * p.T1.size() * p.T2.size();
  const BigInt printed = R.half_q2 + (R.half_q + R.half_q2) * p.M - R.half_q * p.T1.size();
  r.add("augmentation separates the printed form", printed != lhs,
        "product " + lhs.str() + ", printed form " + printed.str());
  return r;
}

/// (T2 - T3)(T2 - T3)^(-1) = 2^(2s).
inline Report delta_square_check(const CyclotomicPartition& p) {
  detail::validate_partition(p);
  const detail::PartitionRing R(p);
  detail::ProductLog log;
  Report r{"(T2 - T3)(T2 - T3)^(-1)"};
  const ZM delta = R.T2 - R.T3;
  detail::compare(r, "(T2-T3)(T2-T3)^(-1) = 2^(2s)", log.mul(delta, delta.involute()), (R.q * R.q) * R.one);
  r.add("augmentation is multiplicative", log.augmentation_ok());
  return r;
}

/// Singer difference set property and closure of T1 under doubling.
inline Report verify_singer(const CyclotomicPartition& p) {
  detail::validate_partition(p);
  const detail::PartitionRing R(p);
  Report r{"Singer difference set T1"};
  detail::compare(r, "T1 T1^(-1) = 2^s + Z_M", R.T1 * R.T1.involute(), R.q * R.one + R.Z);
  std::vector<std::uint64_t> doubled;
  for (auto a : p.T1) doubled.push_back(2 * a % p.M);
  r.add("2 T1 = T1", detail::sorted_unique(doubled) == p.T1);
  return r;
}

}  // namespace cyclo3
