#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "cyclo3/cycpart.hpp"
#include "cyclo3/cyclotomic.hpp"
#include "cyclo3/report.hpp"
#include "cyclo3/tower.hpp"

namespace cyclo3 {

/// eta_a = sum of psi over C_a^(M,K), classes relative to the tower's
/// normalized primitive element of K.
struct GaussPeriodVector {
  FieldLabel label = FieldLabel::F;
  std::uint64_t M = 0;
  std::uint64_t class_size = 0;  // (|K| - 1) / M
  std::vector<std::int64_t> values;

  std::int64_t operator[](std::uint64_t a) const { return values[a % M]; }
  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto v : values) t += v;
    return t;
  }
};

namespace detail {

inline void require_divides(const BinaryField& K, std::uint64_t M) {
  if (M == 0 || K.group_order() % M != 0) {
    throw std::invalid_argument("M = " + std::to_string(M) + " does not divide |K*|");
  }
}

/// Runs body(begin, end, partial) over `threads` disjoint exponent ranges of
/// [0, n) and sums the partial vectors.
template <class Body>
std::vector<std::int64_t> partitioned_sum(std::uint64_t n, std::size_t width, unsigned threads, Body body) {
  threads = std::max(1u, threads);
  std::vector<std::vector<std::int64_t>> partial(threads, std::vector<std::int64_t>(width, 0));
  const std::uint64_t chunk = (n + threads - 1) / threads;
  if (threads == 1) {
    body(0, n, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(n, t * chunk), end = std::min(n, begin + chunk);
      pool.emplace_back([&, t, begin, end] { body(begin, end, partial[t]); });
    }
  }
  std::vector<std::int64_t> total(width, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < width; ++i) total[i] += p[i];
  }
  return total;
}

}  // namespace detail

/// Single pass over x^k, k < |K*|, carrying k mod M. No tables, so this is
/// the route for fields too large to tabulate. Exponent ranges may be split
/// across threads; the result does not depend on the split.
inline std::vector<std::int64_t> stream_periods(const BinaryField& K, std::uint64_t M,
                                                std::uint64_t base_exponent, unsigned threads = 1) {
  detail::require_divides(K, M);
  std::vector<std::uint64_t> remap(M);
  const std::uint64_t inv = nt::modinv(base_exponent % M, M);
  for (std::uint64_t r = 0; r < M; ++r) remap[r] = nt::mulmod(r, inv, M);
  return detail::partitioned_sum(
      K.group_order(), M, threads, [&](std::uint64_t begin, std::uint64_t end, std::vector<std::int64_t>& eta) {
        Element u = K.pow(K.generator(), static_cast<std::int64_t>(begin));
        std::uint64_t r = begin % M;
        for (std::uint64_t k = begin; k < end; ++k) {
          eta[remap[r]] += K.psi(u);
          u = K.mul_by_generator(u);
          if (++r == M) r = 0;
        }
      });
}

/// Same sums from the discrete-log table (fields up to 2^20 elements).
inline std::vector<std::int64_t> table_periods(const BinaryField& K, std::uint64_t M, std::uint64_t base_exponent) {
  detail::require_divides(K, M);
  const auto* table = K.log_table();
  if (!table) throw std::invalid_argument("field too large for a log table");
  const std::uint64_t inv = nt::modinv(base_exponent % M, M);
  std::vector<std::int64_t> eta(M, 0);
  for (Element u = 1; u < K.size(); ++u) {
    eta[nt::mulmod(table->log[u] % M, inv, M)] += K.psi(u);
  }
  return eta;
}

/// Gauss periods of order M = tower.M() on F, G or H.
inline GaussPeriodVector gauss_periods(const FieldTower& t, FieldLabel label, unsigned threads = 1) {
  const auto& K = t.field(label);
  GaussPeriodVector g{.label = label, .M = t.M(), .class_size = K.group_order() / t.M()};
  g.values = stream_periods(K, g.M, t.base_exponent(label), threads);
  if (g.total() != -1) throw InternalError("Gauss periods do not sum to -1");
  return g;
}

/// c_j = sum of psi_K(alpha) over alpha in K* with dlog_omega(Norm_{K/F} alpha) = j (mod M).
/// This is the pre-reduction coefficient vector of every Gauss sum of the
/// lifted characters chi' = chi o Norm; for K = F the norm is the identity.
inline std::vector<std::int64_t> lifted_class_sums(const FieldTower& t, FieldLabel label, unsigned threads = 1) {
  const std::uint64_t M = t.M();
  const auto& K = t.field(label);
  const auto& F = t.F;
  const std::uint64_t nF = F.group_order();

  // Exponent of omega for every element of F, keyed by its image in K.
  std::unordered_map<Element, std::uint32_t> omega_log;
  omega_log.reserve(nF * 2);
  {
    Element w = 1;
    for (std::uint64_t i = 0; i < nF; ++i, w = F.mul(w, t.omega)) {
      omega_log.emplace(label == FieldLabel::F ? w : t.embedding(label).apply(w), static_cast<std::uint32_t>(i % M));
    }
  }
  const unsigned ext = label == FieldLabel::F ? 1 : t.lift_degree(label);
  const Element norm_g = ext == 1 ? K.generator() : K.norm(F.degree(), K.generator());

  return detail::partitioned_sum(
      K.group_order(), M, threads, [&](std::uint64_t begin, std::uint64_t end, std::vector<std::int64_t>& c) {
        Element alpha = K.pow(K.generator(), static_cast<std::int64_t>(begin));
        Element n = K.pow(norm_g, static_cast<std::int64_t>(begin));
        for (std::uint64_t k = begin; k < end; ++k) {
          auto it = omega_log.find(n);
          if (it == omega_log.end()) throw InternalError("norm left the subfield");
          c[it->second] += K.psi(alpha);
          alpha = K.mul_by_generator(alpha);
          n = ext == 1 ? alpha : K.mul(n, norm_g);
        }
      });
}

/// G(phi^ell) = sum_j c_j zeta^(j ell) for a class-sum vector c of length M.
inline CyclotomicInteger gauss_sum(const CyclotomicInteger::Ring& ring, const std::vector<std::int64_t>& class_sums,
                                   std::uint64_t ell) {
  const auto M = ring->M();
  if (class_sums.size() != M) throw std::invalid_argument("class sums must have length M");
  if (ell >= M) throw std::invalid_argument("character exponent must lie in [0, M)");
  std::vector<BigInt> c(M);
  for (std::uint64_t j = 0; j < M; ++j) c[nt::mulmod(j, ell, M)] += class_sums[j];
  return CyclotomicInteger::from_exponents(ring, c);
}

/// G(phi^ell) for every ell in [0, M).
inline std::vector<CyclotomicInteger> gauss_sums(const CyclotomicInteger::Ring& ring,
                                                 const std::vector<std::int64_t>& class_sums) {
  std::vector<CyclotomicInteger> out;
  for (std::uint64_t ell = 0; ell < ring->M(); ++ell) out.push_back(gauss_sum(ring, class_sums, ell));
  return out;
}

/// G * conj(G) = |K| for every nonprincipal character, and
/// conj(G(phi^ell)) = G(phi^(M - ell)) because psi(-1) = 1 in characteristic 2.
inline Report verify_gauss_sum_modulus(const std::vector<CyclotomicInteger>& sums, std::uint64_t field_size,
                                       const std::string& title) {
  Report r{title};
  const auto M = sums.size();
  for (std::size_t ell = 1; ell < M; ++ell) {
    const auto norm = (sums[ell] * sums[ell].conj()).as_rational();
    r.add("|G(phi^" + std::to_string(ell) + ")|^2 = " + std::to_string(field_size),
          norm && *norm == BigInt(field_size), norm ? "got " + norm->str() : "not rational");
    r.add("conj G(phi^" + std::to_string(ell) + ") = G(phi^" + std::to_string(M - ell) + ")",
          sums[ell].conj() == sums[M - ell]);
  }
  if (M > 0) {
    const auto principal = sums[0].as_rational();
    r.add("G(principal) = -1", principal && *principal == -1);
  }
  return r;
}

/// G_F(phi^ell) = 2^s sum_{x in T1} zeta^(ell x) for every nonprincipal ell.
/// Every character of order dividing M is trivial on E* = C_0, so all ell
/// in [1, M) qualify. Also records whether the same sum taken over gamma^x
/// with the lifted character (chi o Norm)(gamma^x) agrees.
inline Report verify_t1_gauss_identity(const FieldTower& t, const CyclotomicPartition& part,
                                       const std::vector<CyclotomicInteger>& sums_F) {
  Report r{"G_F(chi) = 2^s sum_{x in T1} chi(omega^x)"};
  const auto M = t.M();
  const auto& ring = sums_F.at(0).ring();
  for (std::uint64_t ell = 1; ell < M; ++ell) {
    std::vector<BigInt> c(M);
    for (auto x : part.T1) c[nt::mulmod(ell, x, M)] += BigInt(t.q());
    const auto rhs = CyclotomicInteger::from_exponents(ring, c);
    r.add("ell = " + std::to_string(ell), sums_F[ell] == rhs,
          sums_F[ell] == rhs ? "" : "lhs " + sums_F[ell].str() + ", rhs " + rhs.str());
  }
  // gamma-reading: chi'(gamma^x) = chi(Norm(gamma^x)) must equal chi(omega^x).
  const auto& inverse = t.embed_G;
  bool gamma_reading = true;
  for (auto x : part.T1) {
    const Element n = t.G.norm(t.F.degree(), t.G.pow(t.gamma, static_cast<std::int64_t>(x)));
    const auto pre = inverse.preimage(n);
    if (!pre || dlog_class(t.F, M, *pre, t.omega) != x % M) gamma_reading = false;
  }
  r.add("gamma reading: chi o Norm evaluated at gamma^x equals chi(omega^x) for x in T1", gamma_reading);
  return r;
}

/// Hasse-Davenport: G_K(chi o Norm) = (-1)^(d-1) G_F(chi)^d for d = [K : F].
inline Report verify_hasse_davenport(const std::vector<CyclotomicInteger>& sums_F,
                                     const std::vector<CyclotomicInteger>& sums_K, unsigned lift_degree) {
  Report r{"Hasse-Davenport lift of degree " + std::to_string(lift_degree)};
  if (sums_F.size() != sums_K.size()) throw std::invalid_argument("Gauss sum tables differ in length");
  for (std::size_t ell = 1; ell < sums_F.size(); ++ell) {
    auto rhs = sums_F[ell].pow(lift_degree);
    if (lift_degree % 2 == 0) rhs = -rhs;
    r.add("ell = " + std::to_string(ell), sums_K[ell] == rhs,
          sums_K[ell] == rhs ? "" : "lhs " + sums_K[ell].str() + ", rhs " + rhs.str());
  }
  return r;
}

/// M eta_a = sum_ell G(phi^(-ell)) zeta^(ell a): the combination must collapse to
/// the rational integer M eta_a for every a.
inline Report verify_periods_from_sums(const std::vector<CyclotomicInteger>& sums, const GaussPeriodVector& eta) {
  Report r{std::string("periods of ") + to_string(eta.label) + " from Gauss sums"};
  const auto M = eta.M;
  if (sums.size() != M) throw std::invalid_argument("need one Gauss sum per character");
  const auto& ring = sums[0].ring();
  for (std::uint64_t a = 0; a < M; ++a) {
    std::vector<BigInt> acc(M);
    for (std::uint64_t ell = 0; ell < M; ++ell) {
      const auto& g = sums[(M - ell) % M].coeffs();
      const std::uint64_t shift = nt::mulmod(ell, a, M);
      for (std::size_t i = 0; i < g.size(); ++i) acc[(i + shift) % M] += g[i];
    }
    const auto value = CyclotomicInteger::from_exponents(ring, acc).as_rational();
    const BigInt want = BigInt(M) * eta.values[a];
    const bool ok = value && *value == want;
    r.add("eta_" + std::to_string(a), ok,
          ok ? "" : (value ? "expansion gives " + value->str() + "/M" : "expansion is not rational") +
                        ", direct " + std::to_string(eta.values[a]));
  }
  return r;
}

/// eta'_a = -2^s psi(omega^a D) - 1 for all a.
inline Report eta_prime_law_check(const FieldTower& t, const InverseTraceSet& D, const GaussPeriodVector& eta_G) {
  Report r{"eta'_a = -2^s psi(omega^a D) - 1"};
  const auto q = static_cast<std::int64_t>(t.q());
  for (std::uint64_t a = 0; a < t.M(); ++a) {
    const auto want = -q * psi_omega_a_D(t, D, a) - 1;
    r.add("a = " + std::to_string(a), eta_G.values[a] == want,
          "eta' = " + std::to_string(eta_G.values[a]) + ", law gives " + std::to_string(want));
  }
  return r;
}

inline std::size_t distinct_values(const GaussPeriodVector& eta) {
  return std::set<std::int64_t>(eta.values.begin(), eta.values.end()).size();
}

}  // namespace cyclo3
