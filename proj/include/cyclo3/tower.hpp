#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclo3/binfield.hpp"
#include "cyclo3/errors.hpp"

namespace cyclo3 {

enum class FieldLabel { E, F, G, H };

inline const char* to_string(FieldLabel label) {
  switch (label) {
    case FieldLabel::E: return "E";
    case FieldLabel::F: return "F";
    case FieldLabel::G: return "G";
    case FieldLabel::H: return "H";
  }
  return "?";
}

/// An injective, GF(2)-linear ring map from a small field into a larger one,
/// stored as the images of the polynomial basis.
class FieldEmbedding {
 public:
  FieldEmbedding() = default;
  FieldEmbedding(const BinaryField& source, const BinaryField& target, Element root_image)
      : source_degree_(source.degree()) {
    Element power = 1;
    for (unsigned i = 0; i < source.degree(); ++i) {
      basis_images_.push_back(power);
      power = target.mul(power, root_image);
    }
  }

  Element apply(Element a) const {
    Element out = 0;
    for (unsigned i = 0; a; ++i, a >>= 1) {
      if (a & 1) out ^= basis_images_[i];
    }
    return out;
  }

  /// Inverse on the image; built on first use. nullopt outside the image.
  std::optional<Element> preimage(Element b) const {
    if (inverse_.empty()) build_inverse();
    auto it = std::lower_bound(inverse_.begin(), inverse_.end(), std::pair<Element, Element>{b, 0});
    if (it == inverse_.end() || it->first != b) return std::nullopt;
    return it->second;
  }

  const std::vector<Element>& basis_images() const { return basis_images_; }

 private:
  void build_inverse() const {
    std::vector<std::pair<Element, Element>> pairs;
    pairs.reserve(std::size_t{1} << source_degree_);
    for (Element a = 0; a < (Element{1} << source_degree_); ++a) pairs.emplace_back(apply(a), a);
    std::sort(pairs.begin(), pairs.end());
    inverse_ = std::move(pairs);
  }

  unsigned source_degree_ = 0;
  std::vector<Element> basis_images_;
  mutable std::vector<std::pair<Element, Element>> inverse_;
};

/// How a primitive element of an extension was pinned to the base field's omega.
struct NormNormalization {
  std::uint64_t root_exponent = 0;  // embed(x) = g^(root_exponent * (|K*| / |F*|))
  std::uint64_t t0 = 0;             // Norm(g) = embed(omega^t0)
  std::uint64_t j = 0;              // chosen primitive element = g^j
};

struct TowerModuli {
  std::optional<gf2x::Poly> f, g, h;
};

/// E = GF(2^s), F = GF(2^3s), G = GF(2^6s), H = GF(2^9s), with primitive
/// elements gamma of G and beta of H whose norms down to F both equal omega.
struct FieldTower {
  unsigned s = 0;
  BinaryField E, F, G, H;
  Element omega = 0, gamma = 0, beta = 0;
  FieldEmbedding embed_G, embed_H;
  std::uint64_t omega_exponent = 1;  // omega = x^omega_exponent in F
  NormNormalization norm_G, norm_H;

  std::uint64_t M() const { return F.group_order() / E.group_order(); }
  std::uint64_t q() const { return std::uint64_t{1} << s; }

  const BinaryField& field(FieldLabel label) const {
    switch (label) {
      case FieldLabel::E: return E;
      case FieldLabel::F: return F;
      case FieldLabel::G: return G;
      case FieldLabel::H: return H;
    }
    throw std::invalid_argument("unknown field label");
  }

  /// The primitive element classes are measured against (omega, gamma, beta),
  /// as an exponent of the field generator x.
  std::uint64_t base_exponent(FieldLabel label) const {
    switch (label) {
      case FieldLabel::E: return 1;
      case FieldLabel::F: return omega_exponent;
      case FieldLabel::G: return norm_G.j;
      case FieldLabel::H: return norm_H.j;
    }
    throw std::invalid_argument("unknown field label");
  }

  Element primitive(FieldLabel label) const {
    switch (label) {
      case FieldLabel::E: return E.generator();
      case FieldLabel::F: return omega;
      case FieldLabel::G: return gamma;
      case FieldLabel::H: return beta;
    }
    throw std::invalid_argument("unknown field label");
  }

  /// Degree of F inside the extension (1 for F, 2 for G, 3 for H).
  unsigned lift_degree(FieldLabel label) const {
    switch (label) {
      case FieldLabel::F: return 1;
      case FieldLabel::G: return 2;
      case FieldLabel::H: return 3;
      default: throw std::invalid_argument("lift degree is defined for F, G, H only");
    }
  }

  const FieldEmbedding& embedding(FieldLabel label) const {
    if (label == FieldLabel::G) return embed_G;
    if (label == FieldLabel::H) return embed_H;
    throw std::invalid_argument("embeddings exist for G and H only");
  }
};

namespace detail {

/// Evaluates the polynomial `f` (over GF(2)) at `point` of `field` by Horner.
inline Element evaluate(const BinaryField& field, gf2x::Poly f, Element point) {
  Element acc = 0;
  for (int i = gf2x::degree(f); i >= 0; --i) acc = field.mul(acc, point) ^ ((f >> i) & 1);
  return acc;
}

/// Embeds `base` into `ext` and picks a primitive element of `ext` whose norm
/// to the copy of `base` is embed(omega), omega = x^omega_exponent.
inline std::pair<FieldEmbedding, NormNormalization> normalize_extension(
    const BinaryField& base, const BinaryField& ext, std::uint64_t omega_exponent) {
  const std::uint64_t n_base = base.group_order();
  const std::uint64_t n_ext = ext.group_order();
  const std::uint64_t sub = n_ext / n_base;
  const Element step = ext.pow(ext.generator(), static_cast<std::int64_t>(sub));

  NormNormalization norm;
  Element candidate = step;
  for (std::uint64_t k = 1; k <= n_base; ++k, candidate = ext.mul(candidate, step)) {
    if (evaluate(ext, base.modulus(), candidate) == 0) {
      norm.root_exponent = k;
      break;
    }
  }
  if (norm.root_exponent == 0) {
    throw InternalError("modulus of GF(2^" + std::to_string(base.degree()) +
                        ") has no root in the subfield of GF(2^" + std::to_string(ext.degree()) + ")");
  }
  const Element root = ext.pow(ext.generator(), static_cast<std::int64_t>(norm.root_exponent * sub));
  FieldEmbedding embed(base, ext, root);

  // embed(omega) = g^(k * w * sub), Norm(g) = g^sub, hence t0 = (k*w)^-1 mod |F*|.
  const std::uint64_t kw = nt::mulmod(norm.root_exponent, omega_exponent, n_base);
  norm.t0 = nt::modinv(kw, n_base);
  const Element omega = base.pow(base.generator(), static_cast<std::int64_t>(omega_exponent));
  if (ext.norm(base.degree(), ext.generator()) !=
      embed.apply(base.pow(omega, static_cast<std::int64_t>(norm.t0)))) {
    throw InternalError("norm of the generator is not embed(omega^t0)");
  }

  // Smallest j = t0^-1 (mod |F*|) that is a unit mod |K*|.
  const std::uint64_t j0 = nt::modinv(norm.t0, n_base);
  std::uint64_t j = j0 == 0 ? n_base : j0;
  for (; j < n_ext; j += n_base) {
    if (std::gcd(j, n_ext) == 1) break;
  }
  if (j >= n_ext) throw InternalError("no primitive element with the required norm");
  norm.j = j;
  return {std::move(embed), norm};
}

}  // namespace detail

/// Builds E, F, G, H for the given s. `target_omega`, when supplied, must be a
/// primitive element of F; otherwise omega is the residue of x.
inline FieldTower build_tower(unsigned s, const TowerModuli& moduli = {},
                              std::optional<Element> target_omega = std::nullopt) {
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  if (9 * s > BinaryField::kMaxDegree) throw std::invalid_argument("s too large for the tower");
  FieldTower t{.s = s,
               .E = BinaryField::build(s),
               .F = BinaryField::build(3 * s, moduli.f),
               .G = BinaryField::build(6 * s, moduli.g),
               .H = BinaryField::build(9 * s, moduli.h)};

  if (target_omega) {
    if (!t.F.contains(*target_omega) || !t.F.is_primitive_element(*target_omega)) {
      throw std::invalid_argument("target omega is not a primitive element of F");
    }
    t.omega = *target_omega;
    // Discrete log by walking x^k; F is small.
    Element u = 1;
    std::uint64_t k = 0;
    while (u != t.omega) {
      u = t.F.mul_by_generator(u);
      ++k;
    }
    t.omega_exponent = k;
  } else {
    t.omega = t.F.generator();
    t.omega_exponent = 1;
  }

  std::tie(t.embed_G, t.norm_G) = detail::normalize_extension(t.F, t.G, t.omega_exponent);
  std::tie(t.embed_H, t.norm_H) = detail::normalize_extension(t.F, t.H, t.omega_exponent);
  t.gamma = t.G.pow(t.G.generator(), static_cast<std::int64_t>(t.norm_G.j));
  t.beta = t.H.pow(t.H.generator(), static_cast<std::int64_t>(t.norm_H.j));

  if (t.G.norm(t.F.degree(), t.gamma) != t.embed_G.apply(t.omega) ||
      t.H.norm(t.F.degree(), t.beta) != t.embed_H.apply(t.omega)) {
    throw InternalError("tower normalization failed: Norm(gamma), Norm(beta) != omega");
  }
  return t;
}

}  // namespace cyclo3
