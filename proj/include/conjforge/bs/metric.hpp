#ifndef CONJFORGE_BS_METRIC_HPP
#define CONJFORGE_BS_METRIC_HPP

#include <optional>

#include "conjforge/bs/element.hpp"

namespace conjforge::bs {

/// Point x + iy of the upper half plane.
struct HalfPlanePoint
{
  double x = 0;
  double y = 1;
};

/// Standard hyperbolic distance; throws std::invalid_argument unless both y > 0.
double hyp_dist(HalfPlanePoint a, HalfPlanePoint b);

/// hyp_dist / log q, so that the horocycles Im z = 1 and Im z = q^r are r apart.
double hyp_dist_rescaled(HalfPlanePoint a, HalfPlanePoint b, uint32_t q);

/// g . i = f + q^n i.
HalfPlanePoint bs_act_on_i(BSElement const &g);

/// min{(log q - log sqrt 2) / 2, 1}.
double bs_constant_a(uint32_t q);

struct LengthEstimate
{
  double lower = 0;
  double upper = 0;
  std::optional<long> exact;
};

/**
 * Estimates of d_X(x, g x) in the treebolic space, basepoint x = (B(0,1), i).
 *
 * The hyperbolic factor uses the rescaled metric, so f = 0 is exact at |n|.
 * lower is the largest of the four general lower bounds (and A|v0(f)| when
 * n = 0). upper is |n| + d(i, i+f) + 2 max{-v0(f), 0}, the triangle
 * inequality through (0, f)(n, 0).
 */
LengthEstimate bs_length_bounds(BSElement const &g);

/// |n| + d(i, i+f) - 2 v0(f), which undercuts the lower bounds once v0(f) > 0.
double bs_upper_closed_form(BSElement const &g);

} // namespace conjforge::bs

#endif
