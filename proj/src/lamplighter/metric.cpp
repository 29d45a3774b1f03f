#include "conjforge/lamplighter/metric.hpp"

#include <algorithm>
#include <cstdlib>

#include "conjforge/lamplighter/dl.hpp"

namespace conjforge::lamplighter {

int64_t ll_word_length(LLElement const &g)
{
  DLPoint x = dl_basepoint(g.q());
  return dl_distance(x, dl_action(g, x));
}

std::vector<int64_t> ll_word_lengths(std::vector<LLElement> const &gs, Exec exec)
{
  std::vector<int64_t> out(gs.size());
  long const count = static_cast<long>(gs.size());
  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i)
      out[i] = ll_word_length(gs[i]);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 256)
  for (long i = 0; i < count; ++i)
    out[i] = ll_word_length(gs[i]);
  return out;
}

namespace {

// 2 max{v0^- + 1, 0} - 2 min{v0, 0}, the length of (0, f).
int64_t unipotent_length(LaurentPoly const &f)
{
  if (f.is_zero())
    return 0;
  int64_t lo = f.v0().value(), hi = f.v0_minus().value();
  return 2 * std::max<int64_t>(hi + 1, 0) - 2 * std::min<int64_t>(lo, 0);
}

} // namespace

int64_t LLBounds::lower() const
{ return std::max({lower_shift, lower_support, lower_support_gap}); }

LLBounds ll_length_bounds(LLElement const &g)
{
  LLBounds b;
  int64_t absn = std::llabs(g.n);
  b.lower_shift = absn;
  if (!g.f.is_zero()) {
    int64_t lo = g.f.v0().value(), hi = g.f.v0_minus().value();
    b.lower_support = std::max<int64_t>(hi, 0) + std::max<int64_t>(-lo, 0);
    b.lower_support_gap = hi - lo;
    b.upper_closed_form = absn + 2 * (hi - lo);
  } else {
    b.upper_closed_form = absn;
  }
  if (g.n == 0)
    b.exact_unipotent = unipotent_length(g.f);
  if (g.f.is_zero())
    b.exact_semisimple = absn;
  b.upper_triangle = absn + unipotent_length(g.f);
  return b;
}

} // namespace conjforge::lamplighter
