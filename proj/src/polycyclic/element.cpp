#include "conjforge/polycyclic/element.hpp"

#include <cmath>
#include <sstream>

namespace conjforge::polycyclic {

using namespace exactnum;

namespace {

void check(PCElement const &g, PCGroupSpec const &spec)
{
  if (g.a.size() != spec.n || g.b.size() != spec.k)
    throw std::invalid_argument("polycyclic element does not match spec dimensions");
}

std::string join(IntVec const &v)
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ',';
    s += v[i].get_str();
  }
  return s;
}

IntVec split(std::string const &s)
{
  IntVec v;
  if (s.empty())
    return v;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    mpz_class x;
    if (tok.empty() || x.set_str(tok, 10) != 0)
      throw std::invalid_argument("polycyclic element: bad integer '" + tok + "'");
    v.push_back(x);
  }
  return v;
}

} // namespace

std::size_t PCElement::hash() const
{
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](mpz_class const &x) {
    h ^= static_cast<std::size_t>(mpz_get_si(x.get_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (auto const &x : a)
    mix(x);
  h ^= 0x51ed27;
  for (auto const &x : b)
    mix(x);
  return h;
}

std::string PCElement::to_string() const { return join(a) + ";" + join(b); }

PCElement PCElement::parse(std::string const &s)
{
  auto semi = s.find(';');
  if (semi == std::string::npos || s.find(';', semi + 1) != std::string::npos)
    throw std::invalid_argument("polycyclic element: expected 'a1,..;b1,..'");
  return PCElement(split(s.substr(0, semi)), split(s.substr(semi + 1)));
}

PCElement pc_mul(PCElement const &g1, PCElement const &g2, PCGroupSpec const &spec)
{
  check(g1, spec);
  check(g2, spec);
  return PCElement(g1.a + spec.phi(g1.b) * g2.a, g1.b + g2.b);
}

PCElement pc_inv(PCElement const &g, PCGroupSpec const &spec)
{
  check(g, spec);
  IntVec nb = -g.b;
  return PCElement(-(spec.phi(nb) * g.a), nb);
}

PCElement pc_conjugate(PCElement const &u, PCElement const &g, PCGroupSpec const &spec)
{ return pc_mul(pc_inv(g, spec), pc_mul(u, g, spec), spec); }

std::vector<PCElement> pc_generators(PCGroupSpec const &spec)
{
  std::vector<PCElement> gens;
  for (std::size_t i = 0; i < spec.n + spec.k; ++i) {
    PCElement e = PCElement::identity(spec);
    if (i < spec.n)
      e.a[i] = 1;
    else
      e.b[i - spec.n] = 1;
    gens.push_back(std::move(e));
  }
  std::size_t half = gens.size();
  for (std::size_t i = 0; i < half; ++i)
    gens.push_back(pc_inv(gens[i], spec));
  return gens;
}

double pc_length_est(PCElement const &g, PCGroupSpec const &spec)
{
  check(g, spec);
  double b1 = 0;
  for (auto const &x : g.b)
    b1 += std::fabs(x.get_d());
  return b1 + std::log2(1.0 + sup_norm(g.a).get_d());
}

} // namespace conjforge::polycyclic
