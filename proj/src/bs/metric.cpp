#include "conjforge/bs/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace conjforge::bs {

double hyp_dist(HalfPlanePoint a, HalfPlanePoint b)
{
  if (!(a.y > 0) || !(b.y > 0))
    throw std::invalid_argument("hyp_dist: imaginary part must be positive");
  double dx = a.x - b.x, dy = a.y - b.y;
  double t = (dx * dx + dy * dy) / (2 * a.y * b.y);
  // acosh(1 + t) without cancellation for small t.
  return std::log1p(t + std::sqrt(t * (t + 2)));
}

double hyp_dist_rescaled(HalfPlanePoint a, HalfPlanePoint b, uint32_t q)
{ return hyp_dist(a, b) / std::log(double(q)); }

HalfPlanePoint bs_act_on_i(BSElement const &g)
{ return {g.f.to_double(), std::pow(double(g.q()), double(g.n))}; }

double bs_constant_a(uint32_t q)
{ return std::min(0.5 * (std::log(double(q)) - std::log(std::sqrt(2.0))), 1.0); }

LengthEstimate bs_length_bounds(BSElement const &g)
{
  uint32_t q = g.q();
  LengthEstimate e;
  double absn = double(std::llabs(g.n));
  HalfPlanePoint i{0, 1};
  double d_gi = hyp_dist_rescaled(i, bs_act_on_i(g), q);
  double d_f = hyp_dist_rescaled(i, {g.f.to_double(), 1}, q);
  double neg_v0 = 0, abs_v0 = 0;
  if (!g.f.is_zero()) {
    int64_t v0 = g.f.valuation().value();
    neg_v0 = double(std::max<int64_t>(-v0, 0));
    abs_v0 = double(std::llabs(v0));
  }
  e.lower = std::max({absn, 0.5 * (d_gi + neg_v0), neg_v0, d_gi});
  if (g.n == 0)
    e.lower = std::max(e.lower, bs_constant_a(q) * abs_v0);
  e.upper = absn + d_f + 2 * neg_v0;
  if (g.f.is_zero()) {
    e.exact = std::labs(g.n);
    e.lower = e.upper = absn;
  }
  return e;
}

double bs_upper_closed_form(BSElement const &g)
{
  double d_f = hyp_dist_rescaled({0, 1}, {g.f.to_double(), 1}, g.q());
  double v0 = g.f.is_zero() ? 0.0 : double(g.f.valuation().value());
  return double(std::llabs(g.n)) + d_f - 2 * v0;
}

} // namespace conjforge::bs
