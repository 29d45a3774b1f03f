#include "conjforge/lamplighter/element.hpp"

#include <stdexcept>

namespace conjforge::lamplighter {

std::string LLElement::to_string() const
{ return std::to_string(n) + ";" + f.to_string(); }

LLElement LLElement::parse(std::string const &text, uint32_t q)
{
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("LLElement: expected \"n;f\", got \"" + text + "\"");
  std::string head = text.substr(0, semi);
  std::size_t used = 0;
  int64_t n = 0;
  try {
    n = std::stoll(head, &used);
  } catch (std::exception const &) {
    used = std::string::npos;
  }
  if (head.empty() || used != head.size())
    throw std::invalid_argument("LLElement: bad shift \"" + head + "\"");
  return LLElement(n, LaurentPoly::parse(text.substr(semi + 1), q));
}

LLElement ll_mul(LLElement const &a, LLElement const &b)
{
  if (a.q() != b.q())
    throw std::invalid_argument("ll_mul: mismatched q");
  return LLElement(a.n + b.n, a.f.add_shifted(b.f, a.n));
}

LLElement ll_inv(LLElement const &g)
{ return LLElement(-g.n, (-g.f).shifted(-g.n)); }

LLElement ll_conjugate(LLElement const &u, LLElement const &g)
{ return ll_mul(ll_inv(g), ll_mul(u, g)); }

std::vector<LLElement> ll_generators(uint32_t q)
{
  std::vector<LLElement> gens;
  for (uint32_t b = 0; b < q; ++b)
    gens.emplace_back(1, LaurentPoly::monomial(q, 0, b));
  for (uint32_t b = 0; b < q; ++b)
    gens.push_back(ll_inv(gens[b]));
  return gens;
}

} // namespace conjforge::lamplighter
