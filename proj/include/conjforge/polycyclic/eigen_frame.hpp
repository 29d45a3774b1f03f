#ifndef CONJFORGE_POLYCYCLIC_EIGEN_FRAME_HPP
#define CONJFORGE_POLYCYCLIC_EIGEN_FRAME_HPP

#include <cstddef>
#include <vector>

#include "conjforge/polycyclic/spec.hpp"

namespace conjforge::polycyclic {

/// Floating-point simultaneous eigenbasis of commuting diagonalisable
/// generators with real spectra. Only ever used to propose candidates.
struct EigenFrame
{
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<double> basis;      // n x n row-major; column j is eigenvector j
  std::vector<double> inverse;    // n x n row-major
  std::vector<double> log_lambda; // n x k row-major; log |lambda_{j,i}|

  double log_eigenvalue(std::size_t j, std::size_t i) const { return log_lambda[j * k + i]; }

  /// Eigen-coordinates P^-1 x.
  std::vector<double> coords(IntVec const &x) const;

  /// Sup-norm of the eigen-coordinates.
  double norm(IntVec const &x) const;

  /// l1-norm of row j of P^-1.
  double inverse_row_l1(std::size_t j) const;
};

/// Throws UnsupportedSpec when some eigenvalue is not real.
EigenFrame build_eigen_frame(std::vector<IntMat> const &generators);

} // namespace conjforge::polycyclic

#endif
