#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo3/errors.hpp"
#include "cyclo3/gf2x.hpp"
#include "cyclo3/number_theory.hpp"

namespace cyclo3 {

/// An element of GF(2^m) in the polynomial basis {1, x, ..., x^(m-1)}.
using Element = std::uint64_t;

/// Exponent/element tables for the multiplicative group, base = field generator.
struct LogTable {
  std::vector<std::uint32_t> log;  // log[u] for u != 0; log[0] unused
  std::vector<std::uint32_t> exp;  // exp[k] = g^k, k < 2^m - 1
};

/// GF(2^m) given by a primitive modulus; the generator is the residue of x.
///
/// Values are immutable after construction and safe to share across threads.
/// Elements are plain bit masks; every operation assumes its arguments are
/// reduced (bits < 2^m).
class BinaryField {
 public:
  static constexpr unsigned kMaxDegree = 48;
  static constexpr unsigned kMaxLogTableDegree = 20;

  /// Builds GF(2^degree). Without a modulus, the numerically smallest
  /// primitive polynomial of that degree is used. A supplied modulus must be
  /// primitive; otherwise ModulusRejected carries the failing certificate.
  static BinaryField build(unsigned degree, std::optional<gf2x::Poly> modulus = std::nullopt);

  /// Returns 0 if `f` is irreducible of degree m, else the smallest d <= m/2
  /// with gcd(x^(2^d) - x, f) != 1.
  static unsigned reducibility_witness(gf2x::Poly f);

  /// Multiplicative order of x modulo f (f irreducible, f != x); 0 if x is not a unit.
  static std::uint64_t order_of_x(gf2x::Poly f);

  unsigned degree() const { return degree_; }
  gf2x::Poly modulus() const { return modulus_; }
  Element generator() const { return generator_; }
  std::uint64_t size() const { return std::uint64_t{1} << degree_; }
  std::uint64_t group_order() const { return size() - 1; }
  bool contains(Element a) const { return a < size(); }

  Element add(Element a, Element b) const { return a ^ b; }
  Element mul(Element a, Element b) const { return gf2x::mulmod(a, b, modulus_); }
  Element square(Element a) const { return mul(a, a); }

  /// a * x: one shift and a conditional reduction.
  Element mul_by_generator(Element a) const {
    a <<= 1;
    if ((a >> degree_) & 1) a ^= modulus_;
    return a;
  }

  /// a^e with e reduced mod 2^m - 1 for nonzero a; negative e needs a != 0.
  Element pow(Element a, std::int64_t e) const {
    if (a == 0) {
      if (e < 0) throw std::domain_error("pow: zero to a negative power");
      return e == 0 ? 1 : 0;
    }
    return gf2x::powmod(a, nt::mod_floor(e, group_order()), modulus_);
  }

  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("inv: zero has no inverse");
    return pow(a, -1);
  }

  /// a^(2^k).
  Element frobenius(Element a, unsigned k = 1) const {
    for (unsigned i = 0; i < k; ++i) a = square(a);
    return a;
  }

  bool in_subfield(unsigned sub_degree, Element a) const {
    return frobenius(a, sub_degree) == a;
  }

  /// tr_{K/k}(u) = sum_{i < [K:k]} u^(2^(sub_degree*i)), [k : GF(2)] = sub_degree.
  Element rel_trace(unsigned sub_degree, Element u) const {
    check_subdegree(sub_degree);
    Element acc = 0;
    for (unsigned i = 0; i < degree_ / sub_degree; ++i) {
      acc ^= u;
      u = frobenius(u, sub_degree);
    }
    return acc;
  }

  /// N_{K/k}(u) = u^((2^m - 1)/(2^sub_degree - 1)).
  Element norm(unsigned sub_degree, Element u) const {
    check_subdegree(sub_degree);
    if (u == 0) return 0;
    const std::uint64_t e = group_order() / ((std::uint64_t{1} << sub_degree) - 1);
    return gf2x::powmod(u, e, modulus_);
  }

  /// Absolute trace as a linear functional: parity of u & trace_mask().
  Element trace_mask() const { return trace_mask_; }
  int trace_bit(Element u) const { return std::popcount(u & trace_mask_) & 1; }

  /// Canonical additive character (-1)^tr(u).
  int psi(Element u) const { return trace_bit(u) ? -1 : 1; }

  bool is_primitive_element(Element u) const;

  /// Discrete log to the base generator(). Uses the lazily built table for
  /// degree <= kMaxLogTableDegree, otherwise walks g, g^2, ... .
  std::uint64_t dlog(Element u) const;

  /// Log/exp tables, or nullptr for fields too large to tabulate.
  const LogTable* log_table() const;

 private:
  BinaryField(unsigned degree, gf2x::Poly modulus);

  void check_subdegree(unsigned sub_degree) const {
    if (sub_degree == 0 || degree_ % sub_degree != 0) {
      throw std::invalid_argument("sub-degree " + std::to_string(sub_degree) +
                                  " does not divide field degree " + std::to_string(degree_));
    }
  }

  struct LogCache {
    std::once_flag once;
    LogTable table;
  };

  unsigned degree_;
  gf2x::Poly modulus_;
  Element generator_;
  Element trace_mask_ = 0;
  std::shared_ptr<LogCache> logs_;
};

/// Index i of the cyclotomic class C_i^(M,K) containing u, relative to the
/// primitive element `base` (defaults to the field generator).
std::uint64_t dlog_class(const BinaryField& field, std::uint64_t modulus_M, Element u,
                         std::optional<Element> base = std::nullopt);

// ---------------------------------------------------------------------------

inline BinaryField::BinaryField(unsigned degree, gf2x::Poly modulus)
    : degree_(degree),
      modulus_(modulus),
      generator_(gf2x::reduce(gf2x::Wide{2}, modulus)),
      logs_(std::make_shared<LogCache>()) {
  for (unsigned i = 0; i < degree_; ++i) {
    if (rel_trace(1, Element{1} << i) & 1) trace_mask_ |= Element{1} << i;
  }
}

inline unsigned BinaryField::reducibility_witness(gf2x::Poly f) {
  const int m = gf2x::degree(f);
  for (int d = 1; 2 * d <= m; ++d) {
    const gf2x::Poly h = gf2x::x_pow_two_pow(static_cast<unsigned>(d), f) ^ gf2x::Poly{2};
    if (gf2x::gcd(f, h) != 1) return static_cast<unsigned>(d);
  }
  return 0;
}

inline std::uint64_t BinaryField::order_of_x(gf2x::Poly f) {
  const int m = gf2x::degree(f);
  const std::uint64_t n = (std::uint64_t{1} << m) - 1;
  if (gf2x::powmod(2, n, f) != 1) return 0;
  std::uint64_t order = n;
  for (auto p : nt::prime_factors(n)) {
    while (order % p == 0 && gf2x::powmod(2, order / p, f) == 1) order /= p;
  }
  return order;
}

inline BinaryField BinaryField::build(unsigned degree, std::optional<gf2x::Poly> modulus) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("field degree must be in [1, 48], got " + std::to_string(degree));
  }
  const std::uint64_t n = (std::uint64_t{1} << degree) - 1;
  if (modulus) {
    const gf2x::Poly f = *modulus;
    const int d = gf2x::degree(f);
    if (d != static_cast<int>(degree)) {
      throw ModulusRejected(ModulusRejected::Reason::WrongDegree, d < 0 ? 0 : d,
                            "modulus " + gf2x::to_hex(f) + " has degree " + std::to_string(d) +
                                ", expected " + std::to_string(degree));
    }
    if (auto w = reducibility_witness(f)) {
      throw ModulusRejected(ModulusRejected::Reason::Reducible, w,
                            "modulus " + gf2x::to_hex(f) + " is reducible: factor found in GF(2^" +
                                std::to_string(w) + ")");
    }
    const auto ord = order_of_x(f);
    if (ord != n) {
      throw ModulusRejected(ModulusRejected::Reason::NotPrimitive, ord,
                            "modulus " + gf2x::to_hex(f) + " is not primitive: x has order " +
                                std::to_string(ord) + " instead of " + std::to_string(n));
    }
    return BinaryField(degree, f);
  }
  const gf2x::Poly top = gf2x::Poly{1} << degree;
  // x + 1 is the only admissible modulus for GF(2); x itself is not a unit.
  for (gf2x::Poly f = top | 1; f < (top << 1); f += 2) {
    if (reducibility_witness(f) == 0 && order_of_x(f) == n) return BinaryField(degree, f);
  }
  throw InternalError("no primitive polynomial of degree " + std::to_string(degree));
}

inline bool BinaryField::is_primitive_element(Element u) const {
  if (u == 0) return false;
  const auto n = group_order();
  if (gf2x::powmod(u, n, modulus_) != 1) return false;
  for (auto p : nt::prime_factors(n)) {
    if (gf2x::powmod(u, n / p, modulus_) == 1) return false;
  }
  return true;
}

inline const LogTable* BinaryField::log_table() const {
  if (degree_ > kMaxLogTableDegree) return nullptr;
  std::call_once(logs_->once, [this] {
    const auto n = group_order();
    auto& t = logs_->table;
    t.log.assign(size(), 0);
    t.exp.resize(n);
    Element u = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
      t.exp[k] = static_cast<std::uint32_t>(u);
      t.log[u] = static_cast<std::uint32_t>(k);
      u = mul_by_generator(u);
    }
    if (u != 1) throw InternalError("generator order mismatch while tabulating logs");
  });
  return &logs_->table;
}

inline std::uint64_t BinaryField::dlog(Element u) const {
  if (u == 0) throw std::domain_error("dlog: zero has no logarithm");
  if (!contains(u)) throw std::invalid_argument("dlog: element not reduced");
  if (const auto* t = log_table()) return t->log[u];
  Element v = 1;
  for (std::uint64_t k = 0; k < group_order(); ++k) {
    if (v == u) return k;
    v = mul_by_generator(v);
  }
  throw InternalError("dlog: element not reached by generator");
}

inline std::uint64_t dlog_class(const BinaryField& field, std::uint64_t modulus_M, Element u,
                                std::optional<Element> base) {
  if (modulus_M == 0 || field.group_order() % modulus_M != 0) {
    throw std::invalid_argument("M = " + std::to_string(modulus_M) + " does not divide 2^" +
                                std::to_string(field.degree()) + " - 1");
  }
  if (u == 0) throw std::domain_error("dlog_class: zero lies in no cyclotomic class");
  const std::uint64_t k = field.dlog(u) % modulus_M;
  if (!base) return k;
  const std::uint64_t j = field.dlog(*base);
  if (std::gcd(j, field.group_order()) != 1) {
    throw std::invalid_argument("dlog_class: base is not a primitive element");
  }
  return nt::mulmod(k, nt::modinv(j % modulus_M, modulus_M), modulus_M);
}

}  // namespace cyclo3
