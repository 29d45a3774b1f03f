#ifndef CONJFORGE_SRC_POLYCYCLIC_INTERNAL_HPP
#define CONJFORGE_SRC_POLYCYCLIC_INTERNAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conjforge/exactnum/linalg.hpp"
#include "conjforge/polycyclic/spec.hpp"

namespace conjforge::polycyclic::detail {

struct TranslationResult
{
  std::optional<IntVec> y;
  /// Z-basis of { s : phi(s) w = w }; filled whenever y is.
  std::vector<IntVec> stabiliser;
  uint64_t candidates = 0;
  std::string window;
};

/// u = phi(y) w via eigen-coordinates; acceptance is exact.
TranslationResult translation_numeric(IntVec const &u, IntVec const &w, PCGroupSpec const &spec);

/// Exact orbit scan; requires scan_available(spec).
TranslationResult translation_scan(IntVec const &u, IntVec const &w, PCGroupSpec const &spec);

bool scan_available(PCGroupSpec const &spec);

/// Everything derived from phi(v) that the nonzero solver reuses.
struct ShiftData
{
  IntMat m;                  // phi(v)
  IntMat k;                  // I - phi(v)
  exactnum::ColumnEchelon ce; // of k
  bool has_e1 = false;
  IntMat p1;                 // integer multiple of the projection onto ker(phi(v) - I) along V
  mpz_class bound;           // complement index bound
};

ShiftData shift_data(IntVec const &v, PCGroupSpec const &spec);

int64_t orbit_order(IntVec const &u, IntVec const &d, ShiftData const &sd, PCGroupSpec const &spec);

} // namespace conjforge::polycyclic::detail

#endif
