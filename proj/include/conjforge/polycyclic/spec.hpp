#ifndef CONJFORGE_POLYCYCLIC_SPEC_HPP
#define CONJFORGE_POLYCYCLIC_SPEC_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conjforge/exactnum/matrix.hpp"

namespace conjforge::polycyclic {

using exactnum::IntMat;
using exactnum::IntVec;

enum class SpecViolation { Empty, Shape, NotUnimodular, NotCommuting, NotSemisimple };

class SpecError : public std::invalid_argument
{
public:
  SpecError(SpecViolation which, std::string const &what)
      : std::invalid_argument(what), which_(which) {}
  SpecViolation violation() const { return which_; }

private:
  SpecViolation which_;
};

/// A valid spec that an operation cannot handle (e.g. no positive real spectrum).
class UnsupportedSpec : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

struct EigenFrame;

/// Z^n semidirect Z^k with phi(e_i) = generators[i].
struct PCGroupSpec
{
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<IntMat> generators;
  std::vector<IntMat> inverses;
  std::vector<bool> semisimple;
  /// Every generator has only real positive eigenvalues.
  bool positive_real_spectrum = false;
  /// Only for n = 2, k = 1: |trace| > 2.
  std::optional<bool> hyperbolic;
  /// Common eigenbasis; present iff positive_real_spectrum.
  std::shared_ptr<EigenFrame const> frame;

  /// phi(b) = prod phi_i^{b_i}.
  IntMat phi(IntVec const &b) const;
};

/// Accepts iff the generators are square, unimodular, pairwise commuting and
/// semisimple. Throws SpecError naming the first violated condition.
PCGroupSpec pc_validate_spec(std::vector<IntMat> const &generators);

} // namespace conjforge::polycyclic

#endif
