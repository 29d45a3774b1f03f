#include "conjforge/lamplighter/dl.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace conjforge::lamplighter {

bool DLVertex::well_formed() const
{
  if (trunc.is_zero())
    return true;
  if (side == Side::First)
    return trunc.v0_minus().value() < level;
  return trunc.v0().value() >= -level;
}

bool DLPoint::well_formed() const
{
  return first.side == Side::First && second.side == Side::Second &&
         first.level + second.level == 0 && first.well_formed() && second.well_formed() &&
         first.trunc.modulus() == second.trunc.modulus();
}

DLPoint dl_basepoint(uint32_t q)
{ return {{Side::First, 0, LaurentPoly(q)}, {Side::Second, 0, LaurentPoly(q)}}; }

DLPoint dl_action(LLElement const &g, DLPoint const &p)
{
  if (g.q() != p.first.trunc.modulus())
    throw std::invalid_argument("dl_action: mismatched q");
  int64_t s = g.n;
  int64_t l = p.first.level + s;
  int64_t h = p.second.level - s;
  DLPoint r;
  r.first = {Side::First, l, g.f.add_shifted(p.first.trunc, s).below(l)};
  r.second = {Side::Second, h, g.f.add_shifted(p.second.trunc, s).from(-h)};
  return r;
}

LLElement dl_element(DLPoint const &p)
{ return LLElement(p.first.level, p.first.trunc + p.second.trunc); }

int64_t tree_distance(DLVertex const &a, DLVertex const &b)
{
  if (a.side != b.side)
    throw std::invalid_argument("tree_distance: vertices on different trees");
  LaurentPoly diff = a.trunc - b.trunc;
  int64_t common = std::min(a.level, b.level);
  if (!diff.is_zero()) {
    if (a.side == Side::First)
      common = std::min(common, diff.v0().value());
    else
      common = std::min(common, -diff.v0_minus().value() - 1);
  }
  return (a.level - common) + (b.level - common);
}

int64_t dl_distance(DLPoint const &a, DLPoint const &b)
{
  return tree_distance(a.first, b.first) + tree_distance(a.second, b.second) -
         std::llabs(a.first.level - b.first.level);
}

} // namespace conjforge::lamplighter
