#pragma once

// Polynomials over GF(2) packed into machine words: bit i is the coefficient
// of x^i. Degrees up to 63 are supported; products use a 128-bit accumulator.

#include <bit>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclo3::gf2x {

using Poly = std::uint64_t;
using Wide = unsigned __int128;

inline int degree(Poly p) { return p ? 63 - std::countl_zero(p) : -1; }

inline int degree(Wide p) {
  const auto hi = static_cast<std::uint64_t>(p >> 64);
  if (hi) return 127 - std::countl_zero(hi);
  return degree(static_cast<std::uint64_t>(p));
}

/// Carry-less product.
inline Wide clmul(Poly a, Poly b) {
  Wide acc = 0;
  const Wide wa = a;
  for (; b; b &= b - 1) acc ^= wa << std::countr_zero(b);
  return acc;
}

/// Remainder of a wide polynomial by a modulus of degree >= 1.
inline Poly reduce(Wide p, Poly modulus) {
  const int m = degree(modulus);
  const Wide wm = modulus;
  for (int i = degree(p); i >= m; --i) {
    if ((p >> i) & 1) p ^= wm << (i - m);
  }
  return static_cast<Poly>(p);
}

inline Poly mulmod(Poly a, Poly b, Poly modulus) { return reduce(clmul(a, b), modulus); }

inline Poly powmod(Poly a, std::uint64_t e, Poly modulus) {
  Poly result = reduce(Wide{1}, modulus);
  a = reduce(Wide{a}, modulus);
  while (e) {
    if (e & 1) result = mulmod(result, a, modulus);
    a = mulmod(a, a, modulus);
    e >>= 1;
  }
  return result;
}

/// x^(2^k) mod `modulus` by k successive squarings.
inline Poly x_pow_two_pow(unsigned k, Poly modulus) {
  Poly r = reduce(Wide{2}, modulus);
  for (unsigned i = 0; i < k; ++i) r = mulmod(r, r, modulus);
  return r;
}

inline Poly gcd(Poly a, Poly b) {
  while (b) {
    const int db = degree(b);
    while (a && degree(a) >= db) a ^= b << (degree(a) - db);
    std::swap(a, b);
  }
  return a;
}

/// Hex with the leading coefficient as the most significant bit: x^3+x+1 -> "b".
inline std::string to_hex(Poly p) {
  static constexpr char digits[] = "0123456789abcdef";
  if (p == 0) return "0";
  std::string out;
  for (; p; p >>= 4) out.insert(out.begin(), digits[p & 0xf]);
  return out;
}

inline Poly from_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  if (text.empty() || text.size() > 16) throw std::invalid_argument("bad hex polynomial");
  Poly p = 0;
  for (char c : text) {
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw std::invalid_argument("bad hex digit in polynomial: " + std::string(text));
    p = (p << 4) | static_cast<Poly>(v);
  }
  return p;
}

}  // namespace cyclo3::gf2x
