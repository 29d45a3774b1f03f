#include "conjforge/exactnum/ratpoly.hpp"

#include <stdexcept>

#include "conjforge/exactnum/linalg.hpp"

namespace conjforge::exactnum {

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void RatPoly::trim()
{
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

RatPoly RatPoly::operator+(RatPoly const &o) const
{
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    r[i] += o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(RatPoly const &o) const
{
  std::vector<mpq_class> neg(o.c_);
  for (auto &x : neg)
    x = -x;
  return *this + RatPoly(std::move(neg));
}

RatPoly RatPoly::operator*(RatPoly const &o) const
{
  if (is_zero() || o.is_zero())
    return {};
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::derivative() const
{
  if (c_.size() <= 1)
    return {};
  std::vector<mpq_class> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = c_[i] * mpq_class(static_cast<long>(i));
  return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const
{
  if (is_zero())
    return {};
  std::vector<mpq_class> r(c_);
  mpq_class lead = c_.back();
  for (auto &x : r)
    x /= lead;
  return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(RatPoly const &d) const
{
  if (d.is_zero())
    throw std::invalid_argument("RatPoly: division by zero polynomial");
  std::vector<mpq_class> rem(c_);
  if (degree() < d.degree())
    return {RatPoly(), *this};
  std::vector<mpq_class> quot(c_.size() - d.c_.size() + 1, mpq_class(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpq_class f = rem[k + d.c_.size() - 1] / d.c_.back();
    quot[k] = f;
    for (std::size_t j = 0; j < d.c_.size(); ++j)
      rem[k + j] -= f * d.c_[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

mpq_class RatPoly::eval(mpq_class const &x) const
{
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = acc * x + c_[i];
  return acc;
}

RatPoly gcd(RatPoly a, RatPoly b)
{
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatMat eval(RatPoly const &p, RatMat const &m)
{
  RatMat acc(m.rows(), m.cols());
  auto const &c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t d = 0; d < m.rows(); ++d)
      acc(d, d) += c[i];
  }
  return acc;
}

RatPoly minimal_polynomial(RatMat const &m)
{
  if (!m.is_square())
    throw std::invalid_argument("minimal_polynomial: matrix not square");
  std::size_t n = m.rows();
  std::size_t nn = n * n;
  std::vector<RatVec> powers;
  RatMat p = RatMat::identity(n);
  for (std::size_t d = 0; d <= n; ++d) {
    RatVec flat(nn);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        flat[i * n + j] = p(i, j);
    powers.push_back(std::move(flat));
    auto ker = rational_kernel(from_columns(powers, nn));
    if (!ker.empty()) {
      // First dependency: the kernel is one-dimensional with a nonzero top entry.
      RatVec const &k = ker.front();
      std::vector<mpq_class> coeffs(k.begin(), k.end());
      return RatPoly(std::move(coeffs)).monic();
    }
    p = p * m;
  }
  throw std::logic_error("minimal_polynomial: no dependency found (Cayley-Hamilton violated)");
}

namespace {

int sign_at_zero(RatPoly const &p)
{
  if (p.is_zero())
    return 0;
  return sgn(p.coeffs().front());
}

int sign_at_inf(RatPoly const &p)
{
  if (p.is_zero())
    return 0;
  return sgn(p.leading());
}

std::size_t sign_changes(std::vector<int> const &signs)
{
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++changes;
    last = s;
  }
  return changes;
}

} // namespace

std::size_t count_positive_real_roots(RatPoly const &p)
{
  if (p.degree() <= 0)
    return 0;
  // Strip roots at zero so 0 is not a root of the Sturm chain head.
  std::vector<mpq_class> c = p.coeffs();
  std::size_t lead_zeros = 0;
  while (lead_zeros < c.size() && c[lead_zeros] == 0)
    ++lead_zeros;
  RatPoly f(std::vector<mpq_class>(c.begin() + static_cast<long>(lead_zeros), c.end()));
  if (f.degree() <= 0)
    return 0;

  std::vector<RatPoly> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    RatPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    chain.push_back(RatPoly() - r);
  }
  chain.pop_back();

  std::vector<int> at0, atinf;
  for (auto const &s : chain) {
    at0.push_back(sign_at_zero(s));
    atinf.push_back(sign_at_inf(s));
  }
  return sign_changes(at0) - sign_changes(atinf);
}

} // namespace conjforge::exactnum
