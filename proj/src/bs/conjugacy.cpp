#include "conjforge/bs/conjugacy.hpp"

#include <stdexcept>

#include "conjforge/bs/metric.hpp"

namespace conjforge::bs {

namespace {

void finish(BSOutcome &out, BSElement const &u, BSElement const &v, BSElement const &uu,
            BSElement const &vv)
{
  out.lengths.u = bs_length_bounds(u).lower;
  out.lengths.v = bs_length_bounds(v).lower;
  if (!out.witness)
    return;
  BSElement const &g = *out.witness;
  if (bs_mul(u, g) != bs_mul(g, v))
    throw std::logic_error("bs_conjugacy: witness failed exact verification");
  out.certificate.verified = true;
  out.certificate.checks.push_back("u*g == g*v");
  if (uu.n != 0) {
    // f (q^s - 1) = q^n Q - P, and v0(f) >= min{v0(P), v0(Q) + n}.
    uint32_t q = u.q();
    int64_t s = uu.n;
    mpz_class qs;
    mpz_ui_pow_ui(qs.get_mpz_t(), q, uint64_t(s));
    QFraction lhs = g.f * QFraction(q, qs - 1);
    if (lhs != vv.f.times_power(g.n) - uu.f)
      throw std::logic_error("bs_conjugacy: divisibility identity failed");
    out.certificate.checks.push_back("f*(q^s-1) == q^n*Q - P");
    auto bound = exactnum::min(uu.f.valuation(),
                               vv.f.is_zero() ? vv.f.valuation()
                                              : exactnum::ExtInt(vv.f.valuation().value() + g.n));
    if (g.f.valuation() < bound)
      throw std::logic_error("bs_conjugacy: valuation inequality failed");
    out.certificate.checks.push_back("v0(f) >= min{v0(P), v0(Q)+n}");
  }
  out.lengths.witness = bs_length_bounds(g).upper;
}

} // namespace

BSOutcome bs_conjugacy(BSElement const &u, BSElement const &v)
{
  if (u.q() != v.q())
    throw std::invalid_argument("bs_conjugacy: mismatched q");
  uint32_t q = u.q();
  BSOutcome out;

  if (u.n != v.n) {
    out.stats.window = "shifts differ";
    finish(out, u, v, u, v);
    return out;
  }

  if (u.n == 0) {
    // P = q^n Q: equal q-free numerators, n read off the exponents.
    QFraction const &p = u.f, &qq = v.f;
    out.stats.candidates = 1;
    if (p.is_zero() || qq.is_zero()) {
      out.stats.window = "n=0";
      if (p.is_zero() && qq.is_zero()) {
        out.conjugate = true;
        out.witness = BSElement::identity(q);
      }
    } else {
      int64_t n = qq.exponent() - p.exponent();
      out.stats.window = "n=" + std::to_string(n);
      if (p.numerator() == qq.numerator()) {
        out.conjugate = true;
        out.witness = BSElement(n, QFraction(q));
      }
    }
    finish(out, u, v, u, v);
    return out;
  }

  // A conjugator of the inverses conjugates the originals.
  BSElement uu = u.n > 0 ? u : bs_inv(u);
  BSElement vv = v.n > 0 ? v : bs_inv(v);
  int64_t s = uu.n;
  out.stats.window = "n in [0," + std::to_string(s) + ")";
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), q, uint64_t(s));
  m -= 1;

  for (int64_t n = 0; n < s; ++n) {
    ++out.stats.candidates;
    auto f = exactnum::exact_divide(vv.f.times_power(n) - uu.f, m);
    if (f) {
      out.conjugate = true;
      out.witness = BSElement(n, std::move(*f));
      break;
    }
  }
  finish(out, u, v, uu, vv);
  return out;
}

} // namespace conjforge::bs
