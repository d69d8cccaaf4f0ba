#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo3/bigint.hpp"
#include "cyclo3/number_theory.hpp"

namespace cyclo3 {

/// Integer polynomial, coefficient i of x^i. Trailing zeros are trimmed by
/// the helpers below so that equality is structural.
using IntPoly = std::vector<BigInt>;

namespace poly {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

/// Quotient and remainder by a monic divisor.
inline std::pair<IntPoly, IntPoly> divmod_monic(IntPoly a, const IntPoly& m) {
  if (m.empty() || m.back() != 1) throw std::invalid_argument("divisor must be monic");
  trim(a);
  const std::size_t dm = m.size() - 1;
  if (a.size() <= dm) return {{}, a};
  IntPoly q(a.size() - dm);
  for (std::size_t i = a.size(); i-- > dm;) {
    const BigInt c = a[i];
    if (c == 0) continue;
    q[i - dm] = c;
    for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] -= c * m[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

}  // namespace poly

/// Phi_M by exact division of x^M - 1 by Phi_d for the proper divisors d of M.
inline IntPoly cyclotomic_polynomial(std::uint64_t M) {
  if (M == 0) throw std::invalid_argument("cyclotomic polynomial needs M >= 1");
  IntPoly numerator(M + 1);
  numerator[0] = -1;
  numerator[M] = 1;
  for (auto d : nt::divisors(M)) {
    if (d == M) continue;
    auto [quot, rem] = poly::divmod_monic(numerator, cyclotomic_polynomial(d));
    if (!rem.empty()) throw std::logic_error("cyclotomic division left a remainder");
    numerator = std::move(quot);
  }
  return numerator;
}

/// Z[zeta_M] realised as Z[x]/(Phi_M).
class CyclotomicRing {
 public:
  explicit CyclotomicRing(std::uint64_t M) : M_(M), phi_(cyclotomic_polynomial(M)) {}

  std::uint64_t M() const { return M_; }
  const IntPoly& phi() const { return phi_; }
  std::size_t degree() const { return phi_.size() - 1; }

  /// Power-basis coordinates (length degree()) of sum_j c_j zeta^j.
  std::vector<BigInt> reduce(const std::vector<BigInt>& c) const {
    // Fold exponents mod M first, then divide by Phi_M.
    IntPoly folded(std::min<std::size_t>(c.size(), M_));
    for (std::size_t j = 0; j < c.size(); ++j) folded[j % M_] += c[j];
    IntPoly r = poly::divmod_monic(std::move(folded), phi_).second;
    r.resize(degree());
    return r;
  }

 private:
  std::uint64_t M_;
  IntPoly phi_;
};

inline std::shared_ptr<const CyclotomicRing> make_cyclotomic_ring(std::uint64_t M) {
  return std::make_shared<const CyclotomicRing>(M);
}

/// An element of Z[zeta_M] in the reduced power basis.
class CyclotomicInteger {
 public:
  using Ring = std::shared_ptr<const CyclotomicRing>;

  explicit CyclotomicInteger(Ring ring) : ring_(std::move(ring)), coeffs_(ring_->degree()) {}

  /// sum_j c_j zeta^j for an arbitrary-length exponent vector.
  static CyclotomicInteger from_exponents(Ring ring, const std::vector<BigInt>& c) {
    CyclotomicInteger z(ring);
    z.coeffs_ = ring->reduce(c);
    return z;
  }

  static CyclotomicInteger rational(Ring ring, const BigInt& value) {
    CyclotomicInteger z(ring);
    z.coeffs_[0] = value;
    return z;
  }

  static CyclotomicInteger zeta_power(Ring ring, std::uint64_t e) {
    std::vector<BigInt> c(ring->M());
    c[e % ring->M()] = 1;
    return from_exponents(ring, c);
  }

  const Ring& ring() const { return ring_; }
  std::uint64_t M() const { return ring_->M(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) {
    a.require_same(b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }

  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) {
    a.require_same(b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
  }

  friend CyclotomicInteger operator-(CyclotomicInteger a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    a.require_same(b);
    CyclotomicInteger out(a.ring_);
    out.coeffs_ = a.ring_->reduce(poly::mul(a.coeffs_, b.coeffs_));
    return out;
  }

  friend CyclotomicInteger operator*(const BigInt& k, CyclotomicInteger a) {
    for (auto& c : a.coeffs_) c *= k;
    return a;
  }

  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    return a.M() == b.M() && a.coeffs_ == b.coeffs_;
  }

  CyclotomicInteger pow(unsigned e) const {
    CyclotomicInteger r = rational(ring_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Complex conjugation zeta -> zeta^(-1).
  CyclotomicInteger conj() const {
    const auto M = ring_->M();
    std::vector<BigInt> c(M);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[(M - i % M) % M] = coeffs_[i];
    return from_exponents(ring_, c);
  }

  std::optional<BigInt> as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return std::nullopt;
    }
    return coeffs_.empty() ? BigInt(0) : coeffs_[0];
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out += (i ? "," : "") + coeffs_[i].str();
    return out + "]";
  }

 private:
  void require_same(const CyclotomicInteger& other) const {
    if (M() != other.M()) throw std::invalid_argument("cyclotomic integers over different M");
  }

  Ring ring_;
  std::vector<BigInt> coeffs_;
};

}  // namespace cyclo3
