#ifndef CONJFORGE_POLYCYCLIC_CONJUGACY_HPP
#define CONJFORGE_POLYCYCLIC_CONJUGACY_HPP

#include <cstdint>

#include "conjforge/outcome.hpp"
#include "conjforge/polycyclic/element.hpp"

namespace conjforge::polycyclic {

using PCOutcome = ConjugacyOutcome<PCElement>;

enum class TranslationMethod {
  Auto,     // numeric proposal; exact scan confirms negatives when available
  Numeric,  // eigen-coordinate log-linear solve only
  ExactScan // orbit scan in a computed window (n = 2, k = 1 hyperbolic only)
};

/**
 * Decides whether u = phi(y) w for some y, with u, w given as elements with
 * zero shift part; the witness is (0, y).
 *
 * u == w is answered directly. Otherwise a positive real spectrum is needed
 * and UnsupportedSpec is thrown without it.
 */
PCOutcome pc_conj_translation(PCElement const &u, PCElement const &w, PCGroupSpec const &spec,
                              TranslationMethod method = TranslationMethod::Auto);

/**
 * Conjugacy for equal nonzero shift parts v.
 *
 * Solves (I - phi(v)) x = u - phi(y) w. For k = 1 with I - phi^v invertible,
 * y scans [0, |v|). Otherwise the eigenvalue-1 part of phi(v) is reduced to a
 * translation problem and the rest to a box of orbit orders. The first hit in
 * lexicographic box order is returned by both execution paths.
 */
PCOutcome pc_conj_nonzero(PCElement const &u, PCElement const &w, PCGroupSpec const &spec,
                          Exec exec = Exec::Parallel);

/// Dispatch on the shift parts.
PCOutcome pc_conjugacy(PCElement const &u, PCElement const &v, PCGroupSpec const &spec,
                       Exec exec = Exec::Parallel);

/**
 * Least t > 0 with (I - phi(t d)) u in (I - phi(v)) Z^n.
 *
 * d must fix the eigenvalue-1 component of u under phi(v); otherwise no such
 * t exists and std::invalid_argument is thrown.
 */
int64_t orbit_order(IntVec const &u, IntVec const &v, IntVec const &d, PCGroupSpec const &spec);

/// |det((I - phi(v)) restricted to V)|, V the invariant complement of ker(phi(v) - I),
/// computed in a Z-basis of V cap Z^n. Bounds every orbit order.
mpz_class complement_index_bound(IntVec const &v, PCGroupSpec const &spec);

} // namespace conjforge::polycyclic

#endif
