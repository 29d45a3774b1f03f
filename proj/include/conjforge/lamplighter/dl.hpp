#ifndef CONJFORGE_LAMPLIGHTER_DL_HPP
#define CONJFORGE_LAMPLIGHTER_DL_HPP

#include <cstdint>

#include "conjforge/lamplighter/element.hpp"

namespace conjforge::lamplighter {

enum class Side { First, Second };

/**
 * Vertex of one tree factor of DL_2(q), seen as a closed ball of Laurent
 * series.
 *
 * First tree, level l: the ball B(c, q^-l); `trunc` keeps the
 * coefficients of exponent < l.
 * Second tree, level h: the ball of radius q^(-h-1) around c in t^-1;
 * `trunc` keeps the coefficients of exponent >= -h.
 *
 * In both trees the parent sits one level lower and forgets one coefficient.
 */
struct DLVertex
{
  Side side = Side::First;
  int64_t level = 0;
  LaurentPoly trunc;

  bool operator==(DLVertex const &o) const = default;

  /// Support constraint for the side.
  bool well_formed() const;
};

/// Point of the horocyclic product: levels sum to zero.
struct DLPoint
{
  DLVertex first;
  DLVertex second;

  bool operator==(DLPoint const &o) const = default;

  bool well_formed() const;
};

/// (B(0, q^0), B^-(0, q^-1)).
DLPoint dl_basepoint(uint32_t q);

/// (s, P) acts on each tree by c -> P + t^s c, shifting levels by s.
DLPoint dl_action(LLElement const &g, DLPoint const &p);

/// The element g with g . basepoint = p (the action is simply transitive).
LLElement dl_element(DLPoint const &p);

/// Tree distance between two vertices of the same side.
int64_t tree_distance(DLVertex const &a, DLVertex const &b);

/// Graph distance in DL_2(q): d_T1 + d_T2 - |difference of levels|.
int64_t dl_distance(DLPoint const &a, DLPoint const &b);

} // namespace conjforge::lamplighter

#endif
