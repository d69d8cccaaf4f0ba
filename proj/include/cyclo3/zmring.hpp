#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo3/bigint.hpp"

namespace cyclo3 {

/// An element sum_i c_i [i] of the group ring Z[Z_M].
template <class Coeff = BigInt>
class GroupRingElement {
 public:
  explicit GroupRingElement(std::uint64_t M) : M_(M), coeffs_(M) {
    if (M == 0) throw std::invalid_argument("group ring modulus must be positive");
  }

  GroupRingElement(std::uint64_t M, std::vector<Coeff> coeffs) : M_(M), coeffs_(std::move(coeffs)) {
    if (M == 0 || coeffs_.size() != M) throw std::invalid_argument("coefficient array length must equal M");
  }

  static GroupRingElement zero(std::uint64_t M) { return GroupRingElement(M); }

  /// The identity element [0]; scalars n are written n * identity.
  static GroupRingElement identity(std::uint64_t M) {
    GroupRingElement e(M);
    e.coeffs_[0] = 1;
    return e;
  }

  /// Z_M itself: every group element with coefficient one.
  static GroupRingElement all(std::uint64_t M) {
    return GroupRingElement(M, std::vector<Coeff>(M, Coeff(1)));
  }

  /// Indicator of a set of residues.
  static GroupRingElement from_set(std::uint64_t M, std::span<const std::uint64_t> residues) {
    GroupRingElement e(M);
    for (auto r : residues) {
      if (r >= M) {
        throw std::invalid_argument("residue " + std::to_string(r) + " outside Z_" + std::to_string(M));
      }
      e.coeffs_[r] += 1;
    }
    return e;
  }

  std::uint64_t modulus() const { return M_; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  const Coeff& operator[](std::uint64_t i) const { return coeffs_[i]; }

  /// Cyclic convolution.
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    a.require_same(b);
    GroupRingElement c(a.M_);
    for (std::uint64_t i = 0; i < a.M_; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::uint64_t j = 0; j < a.M_; ++j) {
        if (b.coeffs_[j] == 0) continue;
        std::uint64_t k = i + j;
        if (k >= a.M_) k -= a.M_;
        c.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return c;
  }

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    a.require_same(b);
    for (std::uint64_t i = 0; i < a.M_; ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }

  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    a.require_same(b);
    for (std::uint64_t i = 0; i < a.M_; ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
  }

  friend GroupRingElement operator-(GroupRingElement a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend GroupRingElement operator*(const Coeff& k, GroupRingElement a) {
    for (auto& c : a.coeffs_) c *= k;
    return a;
  }

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  /// a^(-1): the coefficient of i moves to -i.
  GroupRingElement involute() const {
    GroupRingElement out(M_);
    for (std::uint64_t i = 0; i < M_; ++i) out.coeffs_[i == 0 ? 0 : M_ - i] = coeffs_[i];
    return out;
  }

  /// Sum of coefficients (the augmentation map to Z).
  Coeff augmentation() const {
    Coeff total = 0;
    for (const auto& c : coeffs_) total += c;
    return total;
  }

  /// First index where the two elements differ.
  std::optional<std::uint64_t> first_difference(const GroupRingElement& other) const {
    require_same(other);
    for (std::uint64_t i = 0; i < M_; ++i) {
      if (coeffs_[i] != other.coeffs_[i]) return i;
    }
    return std::nullopt;
  }

 private:
  void require_same(const GroupRingElement& other) const {
    if (M_ != other.M_) {
      throw std::invalid_argument("group ring modulus mismatch: " + std::to_string(M_) + " vs " +
                                  std::to_string(other.M_));
    }
  }

  std::uint64_t M_;
  std::vector<Coeff> coeffs_;
};

using ZM = GroupRingElement<BigInt>;

}  // namespace cyclo3
