#include "conjforge/bs/element.hpp"

#include <stdexcept>

namespace conjforge::bs {

std::string BSElement::to_string() const
{ return std::to_string(n) + ";" + f.to_string(); }

BSElement BSElement::parse(std::string const &text, uint32_t q)
{
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("BSElement: expected \"n;f\", got \"" + text + "\"");
  std::string head = text.substr(0, semi);
  std::size_t used = 0;
  int64_t n = 0;
  try {
    n = std::stoll(head, &used);
  } catch (std::exception const &) {
    used = std::string::npos;
  }
  if (head.empty() || used != head.size())
    throw std::invalid_argument("BSElement: bad shift \"" + head + "\"");
  return BSElement(n, QFraction::parse(text.substr(semi + 1), q));
}

BSElement bs_mul(BSElement const &a, BSElement const &b)
{
  if (a.q() != b.q())
    throw std::invalid_argument("bs_mul: mismatched q");
  return BSElement(a.n + b.n, a.f + b.f.times_power(a.n));
}

BSElement bs_inv(BSElement const &g)
{ return BSElement(-g.n, (-g.f).times_power(-g.n)); }

BSElement bs_conjugate(BSElement const &u, BSElement const &g)
{ return bs_mul(bs_inv(g), bs_mul(u, g)); }

std::vector<BSElement> bs_generators(uint32_t q)
{
  BSElement a(1, QFraction(q)), b(0, QFraction::integer(q, 1));
  return {a, b, bs_inv(a), bs_inv(b)};
}

} // namespace conjforge::bs
