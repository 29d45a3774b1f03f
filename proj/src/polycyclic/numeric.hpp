#ifndef CONJFORGE_SRC_POLYCYCLIC_NUMERIC_HPP
#define CONJFORGE_SRC_POLYCYCLIC_NUMERIC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

// Thin Eigen wrappers so that Eigen stays out of public headers.
namespace conjforge::polycyclic::numeric {

/// Row-major dense matrix.
struct Dense
{
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> v;

  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, 0.0) {}
  double &operator()(std::size_t i, std::size_t j) { return v[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return v[i * cols + j]; }
  Dense select_columns(std::vector<std::size_t> const &idx) const;
};

/// Greedy left-to-right maximal independent column set.
std::vector<std::size_t> independent_columns(Dense const &a, double tol);

/// Least-squares solution of A x = b; A must have independent columns.
std::vector<double> least_squares(Dense const &a, std::vector<double> const &b);

/// p/q with q <= max_den and |x - p/q| <= tol.
std::optional<std::pair<int64_t, int64_t>> rational_approx(double x, int64_t max_den, double tol);

} // namespace conjforge::polycyclic::numeric

#endif
