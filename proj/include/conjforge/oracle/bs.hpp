#ifndef CONJFORGE_ORACLE_BS_HPP
#define CONJFORGE_ORACLE_BS_HPP

#include <optional>
#include <unordered_set>

#include "conjforge/bs/element.hpp"
#include "conjforge/oracle/bfs.hpp"

namespace conjforge::oracle {

inline GeneratingSet<bs::BSElement> bs_generating_set(uint32_t q)
{
  using bs::BSElement;
  GeneratingSet<BSElement> gs;
  gs.family = "bs";
  gs.gens = bs::bs_generators(q);
  gs.identity = BSElement::identity(q);
  gs.mul = [](BSElement const &a, BSElement const &b) { return bs::bs_mul(a, b); };
  gs.inv = [](BSElement const &a) { return bs::bs_inv(a); };
  gs.footprint = [](BSElement const &a) {
    return mpz_size(a.f.numerator().get_mpz_t()) * sizeof(mp_limb_t);
  };
  return gs;
}

struct BSBox
{
  int64_t max_shift = 6;
  long max_numerator = 256;
  int64_t max_exponent = 8;
};

/**
 * Exhaustive search over conjugators (m, a / q^k) with |m| <= max_shift,
 * |a| <= max_numerator and 0 <= k <= max_exponent, in that nesting order.
 * `examined` counts distinct candidates.
 */
inline BruteResult<bs::BSElement> bs_box_conjugator(bs::BSElement const &u,
                                                    bs::BSElement const &v,
                                                    BSBox const &box = {})
{
  using bs::BSElement;
  uint32_t q = u.q();
  std::vector<exactnum::QFraction> translations;
  std::unordered_set<exactnum::QFraction> seen;
  for (long a = -box.max_numerator; a <= box.max_numerator; ++a)
    for (int64_t k = 0; k <= box.max_exponent; ++k) {
      auto f = exactnum::qfrac_normalize(mpz_class(a), k, q);
      if (seen.insert(f).second)
        translations.push_back(f);
    }

  BruteResult<BSElement> r;
  r.radius = box.max_shift;
  for (int64_t m = -box.max_shift; m <= box.max_shift; ++m)
    for (auto const &f : translations) {
      ++r.examined;
      BSElement g(m, f);
      if (bs::bs_mul(u, g) == bs::bs_mul(g, v)) {
        r.witness = g;
        return r;
      }
    }
  return r;
}

} // namespace conjforge::oracle

#endif
