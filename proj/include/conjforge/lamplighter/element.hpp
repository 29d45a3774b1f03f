#ifndef CONJFORGE_LAMPLIGHTER_ELEMENT_HPP
#define CONJFORGE_LAMPLIGHTER_ELEMENT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "conjforge/exactnum/laurent_poly.hpp"

namespace conjforge::lamplighter {

using exactnum::LaurentPoly;

/**
 * Element (n, f) of Z_q wr Z, i.e. the affine matrix [[t^n, f], [0, 1]]
 * over Z_q[t^-1, t]. The modulus q is carried by f.
 */
struct LLElement
{
  int64_t n = 0;
  LaurentPoly f;

  explicit LLElement(uint32_t q = 2) : f(q) {}
  LLElement(int64_t shift, LaurentPoly lamps) : n(shift), f(std::move(lamps)) {}

  static LLElement identity(uint32_t q) { return LLElement(q); }

  uint32_t q() const { return f.modulus(); }
  bool is_identity() const { return n == 0 && f.is_zero(); }

  bool operator==(LLElement const &o) const = default;

  std::size_t hash() const
  { return f.hash() ^ (static_cast<std::size_t>(n) * 0x9e3779b97f4a7c15ULL); }

  /// "n;f" with f in the coeff@exp grammar.
  std::string to_string() const;
  static LLElement parse(std::string const &text, uint32_t q);
};

/// (n1, f1)(n2, f2) = (n1 + n2, f1 + t^n1 f2). Throws on mismatched q.
LLElement ll_mul(LLElement const &a, LLElement const &b);

/// (n, f)^-1 = (-n, -t^-n f).
LLElement ll_inv(LLElement const &g);

/// g^-1 u g.
LLElement ll_conjugate(LLElement const &u, LLElement const &g);

/// Symmetric generating set {(1, b) : b in Z_q} and inverses, in that order.
std::vector<LLElement> ll_generators(uint32_t q);

} // namespace conjforge::lamplighter

template <>
struct std::hash<conjforge::lamplighter::LLElement>
{
  std::size_t operator()(conjforge::lamplighter::LLElement const &g) const
  { return g.hash(); }
};

#endif
