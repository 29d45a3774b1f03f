#ifndef CONJFORGE_EXACTNUM_LINALG_HPP
#define CONJFORGE_EXACTNUM_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "conjforge/exactnum/matrix.hpp"

namespace conjforge::exactnum {

/// Fraction-free (Bareiss) determinant.
mpz_class determinant(IntMat const &m);

struct LinearSolution
{
  RatVec x;
  bool integral = false;

  /// Integer coordinates; only meaningful when `integral`.
  IntVec as_integers() const;
};

/// Exact solve of M x = b for square M via Bareiss elimination.
/// Returns nullopt when M is singular.
std::optional<LinearSolution> solve_linear_exact(IntMat const &m, IntVec const &b);

/// Gauss-Jordan solve over Q for square nonsingular M; nullopt if singular.
std::optional<RatVec> solve_rational(RatMat const &m, RatVec const &b);

/// Inverse of a matrix with determinant +-1. Throws std::invalid_argument otherwise.
IntMat inverse_unimodular(IntMat const &m);

/// M^e for e >= 0, or inverse^|e| for e < 0.
IntMat matrix_power(IntMat const &m, IntMat const &inverse, int64_t e);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMat &m);

std::size_t rank(RatMat m);

/// Basis of the right kernel over Q.
std::vector<RatVec> rational_kernel(RatMat m);

/// Column Hermite-style echelon form B U = H with U unimodular.
struct ColumnEchelon
{
  IntMat h;
  IntMat u;
  std::vector<std::size_t> pivot_rows; // pivot_rows[j] is the pivot row of column j
};

ColumnEchelon column_echelon(IntMat const &b);

/// Some integer solution of B x = r, or nullopt when r is not in B Z^m.
std::optional<IntVec> integer_solve(IntMat const &b, IntVec const &r);

/// Same, reusing the echelon form of B.
std::optional<IntVec> integer_solve(ColumnEchelon const &ce, IntVec const &r);

/// Saturated Z-basis of { x in Z^m : B x = 0 }.
std::vector<IntVec> integer_kernel(IntMat const &b);

/// Primitive integer multiple of a rational vector (sign kept).
IntVec clear_denominators(RatVec const &v);

/// Columns as a matrix.
IntMat from_columns(std::vector<IntVec> const &cols, std::size_t rows);
RatMat from_columns(std::vector<RatVec> const &cols, std::size_t rows);

} // namespace conjforge::exactnum

#endif
