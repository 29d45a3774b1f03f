#include "conjforge/exactnum/qfraction.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace conjforge::exactnum {

namespace {

// q^e for e >= 0.
mpz_class power(uint32_t q, uint64_t e)
{
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

[[noreturn]] void grammar_error(std::string_view text, std::string_view why)
{
  throw std::invalid_argument("QFraction: cannot parse \"" + std::string(text) +
                              "\" (" + std::string(why) +
                              "); expected a/q^k or a bare integer, e.g. \"3/2^2\"");
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && s.front() == ' ')
    s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ')
    s.remove_suffix(1);
  return s;
}

mpz_class parse_mpz(std::string_view whole, std::string_view tok)
{
  tok = trim(tok);
  if (!tok.empty() && tok.front() == '+')
    tok.remove_prefix(1);
  std::string_view digits = tok;
  if (!digits.empty() && digits.front() == '-')
    digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    grammar_error(whole, "bad integer '" + std::string(tok) + "'");
  return mpz_class(std::string(tok), 10);
}

int64_t parse_i64(std::string_view whole, std::string_view tok)
{
  tok = trim(tok);
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    grammar_error(whole, "bad integer '" + std::string(tok) + "'");
  return v;
}

} // namespace

QFraction::QFraction(uint32_t base) : q_(base)
{
  if (base < 2)
    throw std::invalid_argument("QFraction: base must be >= 2");
}

QFraction::QFraction(uint32_t base, mpz_class numerator, int64_t exponent)
  : q_(base), a_(std::move(numerator)), k_(exponent)
{
  if (base < 2)
    throw std::invalid_argument("QFraction: base must be >= 2");
  normalize();
}

void QFraction::normalize()
{
  if (a_ == 0) {
    k_ = 0;
    return;
  }
  while (mpz_divisible_ui_p(a_.get_mpz_t(), q_)) {
    mpz_divexact_ui(a_.get_mpz_t(), a_.get_mpz_t(), q_);
    --k_;
  }
}

void QFraction::check(QFraction const &o) const
{
  if (o.q_ != q_)
    throw std::invalid_argument("QFraction: mismatched bases");
}

ExtInt QFraction::valuation() const
{
  if (is_zero())
    return ExtInt::pos_inf();
  return ExtInt(-k_);
}

QFraction QFraction::operator+(QFraction const &o) const
{
  check(o);
  if (is_zero())
    return o;
  if (o.is_zero())
    return *this;
  // Bring both to the larger exponent.
  int64_t k = std::max(k_, o.k_);
  mpz_class lhs = a_ * power(q_, static_cast<uint64_t>(k - k_));
  mpz_class rhs = o.a_ * power(q_, static_cast<uint64_t>(k - o.k_));
  return QFraction(q_, lhs + rhs, k);
}

QFraction QFraction::operator-(QFraction const &o) const { return *this + (-o); }

QFraction QFraction::operator-() const
{
  QFraction r(*this);
  r.a_ = -r.a_;
  return r;
}

QFraction QFraction::operator*(QFraction const &o) const
{
  check(o);
  return QFraction(q_, a_ * o.a_, k_ + o.k_);
}

QFraction QFraction::times_power(int64_t n) const
{
  if (is_zero())
    return *this;
  QFraction r(*this);
  r.k_ -= n;
  return r;
}

mpq_class QFraction::to_rational() const
{
  mpq_class r;
  if (k_ >= 0)
    r = mpq_class(a_, power(q_, static_cast<uint64_t>(k_)));
  else
    r = mpq_class(a_ * power(q_, static_cast<uint64_t>(-k_)));
  r.canonicalize();
  return r;
}

double QFraction::to_double() const
{
  if (is_zero())
    return 0.0;
  if (k_ > -1024 && k_ < 1024)
    return to_rational().get_d();
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, a_.get_mpz_t());
  double logv = std::log(std::fabs(mant)) + double(exp2) * std::log(2.0) -
                double(k_) * std::log(double(q_));
  double v = std::exp(logv);
  return mant < 0 ? -v : v;
}

std::size_t QFraction::hash() const
{
  uint64_t h = 0x9e3779b97f4a7c15ULL ^ (uint64_t(q_) << 32) ^ uint64_t(sign() + 1);
  std::size_t limbs = mpz_size(a_.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= uint64_t(mpz_getlimbn(a_.get_mpz_t(), i)) + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
  }
  h ^= static_cast<uint64_t>(k_) * 0x94d049bb133111ebULL;
  return static_cast<std::size_t>(h);
}

std::string QFraction::to_string() const
{
  if (k_ <= 0)
    return mpz_class(a_ * power(q_, static_cast<uint64_t>(-k_))).get_str();
  return a_.get_str() + "/" + std::to_string(q_) + "^" + std::to_string(k_);
}

QFraction QFraction::parse(std::string_view text, uint32_t base)
{
  std::string_view t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos)
    return QFraction(base, parse_mpz(text, t), 0);

  std::string_view den = trim(t.substr(slash + 1));
  auto caret = den.find('^');
  if (caret == std::string_view::npos)
    grammar_error(text, "denominator must be q^k");
  int64_t b = parse_i64(text, den.substr(0, caret));
  int64_t k = parse_i64(text, den.substr(caret + 1));
  if (b != static_cast<int64_t>(base))
    grammar_error(text, "denominator base " + std::to_string(b) +
                            " differs from q=" + std::to_string(base));
  if (k < 0)
    grammar_error(text, "negative denominator exponent");
  return QFraction(base, parse_mpz(text, t.substr(0, slash)), k);
}

QFraction qfrac_normalize(mpz_class const &a, int64_t k, uint32_t q)
{ return QFraction(q, a, k); }

std::optional<QFraction> exact_divide(QFraction const &x, mpz_class const &m)
{
  if (m == 0)
    throw std::invalid_argument("exact_divide: division by zero");
  mpz_class g;
  mpz_class qq(x.base());
  mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), qq.get_mpz_t());
  if (g != 1)
    throw std::invalid_argument("exact_divide: divisor shares a factor with q");
  if (!mpz_divisible_p(x.numerator().get_mpz_t(), m.get_mpz_t()))
    return std::nullopt;
  mpz_class quot;
  mpz_divexact(quot.get_mpz_t(), x.numerator().get_mpz_t(), m.get_mpz_t());
  return QFraction(x.base(), quot, x.exponent());
}

ExtInt valuation(QFraction const &f) { return f.valuation(); }

} // namespace conjforge::exactnum
