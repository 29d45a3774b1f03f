#ifndef CONJFORGE_EXACTNUM_QFRACTION_HPP
#define CONJFORGE_EXACTNUM_QFRACTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "conjforge/exactnum/ext_int.hpp"

namespace conjforge::exactnum {

/**
 * Element a * q^-k of Z[1/q].
 *
 * Canonical form: a = 0 implies k = 0, otherwise q does not divide a. The
 * exponent k may be negative, in which case the value is an integer
 * multiple of a power of q.
 */
class QFraction
{
public:
  explicit QFraction(uint32_t base = 2);
  QFraction(uint32_t base, mpz_class numerator, int64_t exponent = 0);

  static QFraction integer(uint32_t base, long value)
  { return QFraction(base, mpz_class(value), 0); }

  uint32_t base() const { return q_; }
  mpz_class const &numerator() const { return a_; }
  int64_t exponent() const { return k_; }
  bool is_zero() const { return a_ == 0; }
  int sign() const { return sgn(a_); }

  /// q-adic valuation v_q(a) - k; +inf at zero.
  ExtInt valuation() const;

  QFraction operator+(QFraction const &o) const;
  QFraction operator-(QFraction const &o) const;
  QFraction operator-() const;
  QFraction operator*(QFraction const &o) const;
  /// Multiplication by q^n for any integer n.
  QFraction times_power(int64_t n) const;

  bool operator==(QFraction const &o) const = default;

  mpq_class to_rational() const;
  double to_double() const;

  std::size_t hash() const;

  /// Bare integer when k <= 0, otherwise "a/q^k".
  std::string to_string() const;

  /// Parses `a/q^k` (base must equal q) or a bare integer; normalises.
  static QFraction parse(std::string_view text, uint32_t base);

private:
  void normalize();
  void check(QFraction const &o) const;

  uint32_t q_;
  mpz_class a_;
  int64_t k_ = 0;
};

/// Canonical form of a * q^-k.
QFraction qfrac_normalize(mpz_class const &a, int64_t k, uint32_t q);

/// x / m when m divides the numerator; nullopt otherwise.
/// Throws std::invalid_argument if m == 0 or gcd(m, q) != 1.
std::optional<QFraction> exact_divide(QFraction const &x, mpz_class const &m);

ExtInt valuation(QFraction const &f);

} // namespace conjforge::exactnum

template <>
struct std::hash<conjforge::exactnum::QFraction>
{
  std::size_t operator()(conjforge::exactnum::QFraction const &f) const
  { return f.hash(); }
};

#endif
