#include "conjforge/polycyclic/spec.hpp"

#include "conjforge/exactnum/linalg.hpp"
#include "conjforge/exactnum/ratpoly.hpp"
#include "conjforge/polycyclic/eigen_frame.hpp"

namespace conjforge::polycyclic {

using namespace exactnum;

IntMat PCGroupSpec::phi(IntVec const &b) const
{
  if (b.size() != k)
    throw std::invalid_argument("phi: shift has wrong dimension");
  IntMat r = IntMat::identity(n);
  for (std::size_t i = 0; i < k; ++i) {
    if (b[i] == 0)
      continue;
    if (!b[i].fits_slong_p())
      throw std::invalid_argument("phi: exponent out of range");
    r = r * matrix_power(generators[i], inverses[i], b[i].get_si());
  }
  return r;
}

namespace {

bool squarefree(RatPoly const &p)
{ return gcd(p, p.derivative()).degree() == 0; }

} // namespace

PCGroupSpec pc_validate_spec(std::vector<IntMat> const &generators)
{
  if (generators.empty())
    throw SpecError(SpecViolation::Empty, "spec: no generators");
  std::size_t n = generators.front().rows();
  if (n == 0)
    throw SpecError(SpecViolation::Shape, "spec: empty matrix");
  for (auto const &g : generators)
    if (g.rows() != n || g.cols() != n)
      throw SpecError(SpecViolation::Shape, "spec: generators must be square of equal size");

  PCGroupSpec spec;
  spec.n = n;
  spec.k = generators.size();
  spec.generators = generators;
  for (std::size_t i = 0; i < spec.k; ++i) {
    mpz_class d = determinant(generators[i]);
    if (abs(d) != 1)
      throw SpecError(SpecViolation::NotUnimodular,
                      "spec: generator " + std::to_string(i) + " has determinant " + d.get_str());
    spec.inverses.push_back(inverse_unimodular(generators[i]));
  }
  for (std::size_t i = 0; i < spec.k; ++i)
    for (std::size_t j = i + 1; j < spec.k; ++j)
      if (generators[i] * generators[j] != generators[j] * generators[i])
        throw SpecError(SpecViolation::NotCommuting, "spec: generators " + std::to_string(i) +
                                                         " and " + std::to_string(j) +
                                                         " do not commute");
  spec.positive_real_spectrum = true;
  for (std::size_t i = 0; i < spec.k; ++i) {
    RatPoly m = minimal_polynomial(to_rational(generators[i]));
    if (!squarefree(m))
      throw SpecError(SpecViolation::NotSemisimple,
                      "spec: generator " + std::to_string(i) + " is not semisimple");
    spec.semisimple.push_back(true);
    if (count_positive_real_roots(m) != static_cast<std::size_t>(m.degree()))
      spec.positive_real_spectrum = false;
  }
  if (n == 2 && spec.k == 1) {
    mpz_class tr = generators[0](0, 0) + generators[0](1, 1);
    spec.hyperbolic = abs(tr) > 2;
  }
  if (spec.positive_real_spectrum)
    spec.frame = std::make_shared<EigenFrame const>(build_eigen_frame(generators));
  return spec;
}

} // namespace conjforge::polycyclic
