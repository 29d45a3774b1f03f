#ifndef CONJFORGE_BS_CONJUGACY_HPP
#define CONJFORGE_BS_CONJUGACY_HPP

#include <cmath>

#include "conjforge/bs/element.hpp"
#include "conjforge/outcome.hpp"

namespace conjforge::bs {

using BSOutcome = ConjugacyOutcome<BSElement>;

/// 2 / log sqrt 2, the constant the conjugator-length ratio is reported against.
inline double bs_bound_constant() { return 2.0 / std::log(std::sqrt(2.0)); }

/**
 * Decides u gamma = gamma v and returns the witness with the smallest
 * admissible n.
 *
 * lengths.u and lengths.v hold lower estimates, lengths.witness the upper
 * estimate, so their ratio over-approximates the true one.
 */
BSOutcome bs_conjugacy(BSElement const &u, BSElement const &v);

} // namespace conjforge::bs

#endif
