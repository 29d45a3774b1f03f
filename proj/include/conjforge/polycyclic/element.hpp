#ifndef CONJFORGE_POLYCYCLIC_ELEMENT_HPP
#define CONJFORGE_POLYCYCLIC_ELEMENT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "conjforge/polycyclic/spec.hpp"

namespace conjforge::polycyclic {

/// (a, b) with a in Z^n, b in Z^k.
struct PCElement
{
  IntVec a;
  IntVec b;

  PCElement() = default;
  PCElement(IntVec av, IntVec bv) : a(std::move(av)), b(std::move(bv)) {}

  static PCElement identity(PCGroupSpec const &spec)
  { return PCElement(IntVec(spec.n), IntVec(spec.k)); }

  bool is_identity() const { return exactnum::is_zero(a) && exactnum::is_zero(b); }

  bool operator==(PCElement const &o) const = default;

  std::size_t hash() const;

  /// "a1,..,an;b1,..,bk".
  std::string to_string() const;
  static PCElement parse(std::string const &s);
};

/// (a1, b1)(a2, b2) = (a1 + phi(b1) a2, b1 + b2). Throws on dimension mismatch.
PCElement pc_mul(PCElement const &g1, PCElement const &g2, PCGroupSpec const &spec);

/// (-phi(b)^-1 a, -b).
PCElement pc_inv(PCElement const &g, PCGroupSpec const &spec);

/// g^-1 u g.
PCElement pc_conjugate(PCElement const &u, PCElement const &g, PCGroupSpec const &spec);

/// Basis vectors of Z^n, then of Z^k, then their inverses.
std::vector<PCElement> pc_generators(PCGroupSpec const &spec);

/// ||b||_1 + log2(1 + ||a||_inf).
double pc_length_est(PCElement const &g, PCGroupSpec const &spec);

} // namespace conjforge::polycyclic

template <>
struct std::hash<conjforge::polycyclic::PCElement>
{
  std::size_t operator()(conjforge::polycyclic::PCElement const &g) const { return g.hash(); }
};

#endif
