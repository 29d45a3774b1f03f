#ifndef CONJFORGE_EXACTNUM_LAURENT_POLY_HPP
#define CONJFORGE_EXACTNUM_LAURENT_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conjforge/exactnum/ext_int.hpp"
#include "conjforge/exactnum/residue.hpp"

namespace conjforge::exactnum {

/**
 * Finitely supported Laurent polynomial over Z_q.
 *
 * Terms are kept sorted by exponent with no stored zero coefficients, so
 * structural equality is polynomial equality.
 */
class LaurentPoly
{
public:
  using Term = std::pair<int64_t, uint32_t>;

  explicit LaurentPoly(uint32_t modulus = 2);

  /// Build from arbitrary (exponent, coefficient) pairs; duplicates are summed.
  LaurentPoly(uint32_t modulus, std::vector<std::pair<int64_t, int64_t>> const &terms);

  static LaurentPoly monomial(uint32_t modulus, int64_t exponent, int64_t coeff = 1);

  uint32_t modulus() const { return q_; }
  std::vector<Term> const &terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Residue coeff(int64_t exponent) const;

  /// Minimal exponent of the support (v0); +inf for the zero polynomial.
  ExtInt v0() const;
  /// Maximal exponent of the support (v0⁻); -inf for the zero polynomial.
  ExtInt v0_minus() const;

  LaurentPoly operator+(LaurentPoly const &o) const;
  LaurentPoly operator-(LaurentPoly const &o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(LaurentPoly const &o) const;
  LaurentPoly scaled(int64_t c) const;

  /// Multiplication by t^k.
  LaurentPoly shifted(int64_t k) const;
  /// Terms with exponent < bound.
  LaurentPoly below(int64_t bound) const;
  /// Terms with exponent >= bound.
  LaurentPoly from(int64_t bound) const;

  /// this + c * t^k * o, without materialising the shifted copy.
  LaurentPoly add_shifted(LaurentPoly const &o, int64_t k, int64_t c = 1) const;

  bool operator==(LaurentPoly const &o) const = default;

  std::size_t hash() const;

  /// `coeff@exp` terms separated by commas, ascending exponents; "" for zero.
  std::string to_string() const;

  /// Parse the `coeff@exp,...` grammar. Coefficients are reduced mod q.
  /// Throws std::invalid_argument naming the grammar on malformed input.
  static LaurentPoly parse(std::string_view text, uint32_t modulus);

private:
  void check(LaurentPoly const &o) const;

  uint32_t q_;
  std::vector<Term> terms_;
};

/// Pair (v0, v0⁻) of a Laurent polynomial.
struct LaurentValuation
{
  ExtInt v0;
  ExtInt v0_minus;
};

LaurentValuation valuation(LaurentPoly const &f);

} // namespace conjforge::exactnum

template <>
struct std::hash<conjforge::exactnum::LaurentPoly>
{
  std::size_t operator()(conjforge::exactnum::LaurentPoly const &f) const
  { return f.hash(); }
};

#endif
