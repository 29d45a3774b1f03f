#ifndef CONJFORGE_LAMPLIGHTER_CONJUGACY_HPP
#define CONJFORGE_LAMPLIGHTER_CONJUGACY_HPP

#include "conjforge/lamplighter/element.hpp"
#include "conjforge/outcome.hpp"

namespace conjforge::lamplighter {

using LLOutcome = ConjugacyOutcome<LLElement>;

/// Bound constant K in |gamma| <= K (|u| + |v|).
inline constexpr int64_t kLLBoundConstant = 3;

/**
 * Decides whether u gamma = gamma v has a solution and returns a witness.
 *
 * The witness is checked exactly; `certificate.checks` also records whether
 * |gamma| <= 3(|u| + |v|) held ("length-bound" is present only when it did).
 */
LLOutcome ll_conjugacy(LLElement const &u, LLElement const &v);

/// True when the returned witness satisfied the length bound.
bool ll_within_bound(LLOutcome const &o);

} // namespace conjforge::lamplighter

#endif
