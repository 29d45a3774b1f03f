#ifndef CONJFORGE_ORACLE_LAMPLIGHTER_HPP
#define CONJFORGE_ORACLE_LAMPLIGHTER_HPP

#include "conjforge/lamplighter/element.hpp"
#include "conjforge/oracle/bfs.hpp"

namespace conjforge::oracle {

inline GeneratingSet<lamplighter::LLElement> ll_generating_set(uint32_t q)
{
  using lamplighter::LLElement;
  GeneratingSet<LLElement> gs;
  gs.family = "lamplighter";
  gs.gens = lamplighter::ll_generators(q);
  gs.identity = LLElement::identity(q);
  gs.mul = [](LLElement const &a, LLElement const &b) { return lamplighter::ll_mul(a, b); };
  gs.inv = [](LLElement const &a) { return lamplighter::ll_inv(a); };
  gs.footprint = [](LLElement const &a) {
    return a.f.support_size() * sizeof(exactnum::LaurentPoly::Term);
  };
  return gs;
}

} // namespace conjforge::oracle

#endif
