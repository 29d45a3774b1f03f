#ifndef CONJFORGE_BS_ELEMENT_HPP
#define CONJFORGE_BS_ELEMENT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "conjforge/exactnum/qfraction.hpp"

namespace conjforge::bs {

using exactnum::QFraction;

/// Element (n, f) of BS(1,q), the affine matrix [[q^n, f], [0, 1]] with f in Z[1/q].
struct BSElement
{
  int64_t n = 0;
  QFraction f;

  explicit BSElement(uint32_t q = 2) : f(q) {}
  BSElement(int64_t shift, QFraction translation) : n(shift), f(std::move(translation)) {}

  static BSElement identity(uint32_t q) { return BSElement(q); }

  uint32_t q() const { return f.base(); }
  bool is_identity() const { return n == 0 && f.is_zero(); }

  bool operator==(BSElement const &o) const = default;

  std::size_t hash() const
  { return f.hash() ^ (static_cast<std::size_t>(n) * 0x9e3779b97f4a7c15ULL); }

  /// "n;f" with f in the a/q^k grammar.
  std::string to_string() const;
  static BSElement parse(std::string const &text, uint32_t q);
};

/// (n1, f1)(n2, f2) = (n1 + n2, f1 + q^n1 f2). Throws on mismatched q.
BSElement bs_mul(BSElement const &a, BSElement const &b);

/// (n, f)^-1 = (-n, -q^-n f).
BSElement bs_inv(BSElement const &g);

/// g^-1 u g.
BSElement bs_conjugate(BSElement const &u, BSElement const &g);

/// a = (1, 0), b = (0, 1), a^-1, b^-1.
std::vector<BSElement> bs_generators(uint32_t q);

} // namespace conjforge::bs

template <>
struct std::hash<conjforge::bs::BSElement>
{
  std::size_t operator()(conjforge::bs::BSElement const &g) const { return g.hash(); }
};

#endif
