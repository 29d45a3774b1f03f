#ifndef CONJFORGE_EXACTNUM_RATPOLY_HPP
#define CONJFORGE_EXACTNUM_RATPOLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "conjforge/exactnum/matrix.hpp"

namespace conjforge::exactnum {

/// Univariate polynomial over Q, coefficient i multiplies x^i.
class RatPoly
{
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs);

  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::vector<mpq_class> const &coeffs() const { return c_; }
  mpq_class const &leading() const { return c_.back(); }

  RatPoly operator+(RatPoly const &o) const;
  RatPoly operator-(RatPoly const &o) const;
  RatPoly operator*(RatPoly const &o) const;
  RatPoly derivative() const;
  RatPoly monic() const;

  /// (quotient, remainder).
  std::pair<RatPoly, RatPoly> divmod(RatPoly const &d) const;

  mpq_class eval(mpq_class const &x) const;

  bool operator==(RatPoly const &o) const = default;

private:
  void trim();
  std::vector<mpq_class> c_;
};

RatPoly gcd(RatPoly a, RatPoly b);

/// Matrix polynomial evaluation p(M).
RatMat eval(RatPoly const &p, RatMat const &m);

/// Monic minimal polynomial of a square matrix (Krylov on matrix powers).
RatPoly minimal_polynomial(RatMat const &m);

/// Number of distinct real roots of p in the open interval (0, +inf).
std::size_t count_positive_real_roots(RatPoly const &p);

} // namespace conjforge::exactnum

#endif
