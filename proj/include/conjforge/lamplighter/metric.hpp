#ifndef CONJFORGE_LAMPLIGHTER_METRIC_HPP
#define CONJFORGE_LAMPLIGHTER_METRIC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "conjforge/lamplighter/element.hpp"
#include "conjforge/outcome.hpp"

namespace conjforge::lamplighter {

/// Word length w.r.t. ll_generators, as the DL distance basepoint -> g.basepoint.
int64_t ll_word_length(LLElement const &g);

/// Batch word length; Exec::Parallel uses OpenMP, Exec::Serial is the reference.
std::vector<int64_t> ll_word_lengths(std::vector<LLElement> const &gs, Exec exec = Exec::Parallel);

/**
 * Closed-form length estimates for (n, f).
 *
 * upper_closed_form is |n| + 2(v0^-(f) - v0(f)) (|n| when f = 0). It can fall
 * below the true length, e.g. (0, 1) has length 2 while the formula gives 0.
 * upper_triangle is |(0, f)| + |(n, 0)|, which always holds.
 */
struct LLBounds
{
  int64_t lower_shift = 0;       // |n|
  int64_t lower_support = 0;     // max{v0^-, 0} + max{-v0, 0}
  int64_t lower_support_gap = 0; // v0^- - v0, or 0 when f = 0
  std::optional<int64_t> exact_unipotent;  // n = 0
  std::optional<int64_t> exact_semisimple; // f = 0
  int64_t upper_closed_form = 0;
  int64_t upper_triangle = 0;

  int64_t lower() const;
};

LLBounds ll_length_bounds(LLElement const &g);

} // namespace conjforge::lamplighter

#endif
