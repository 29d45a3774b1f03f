#include "conjforge/exactnum/linalg.hpp"

#include <stdexcept>

namespace conjforge::exactnum {

namespace {

// Bareiss elimination on an n x (n + extra) integer matrix. Returns the
// determinant of the leading n x n block (0 if singular, leaving `a`
// partially reduced).
mpz_class bareiss(IntMat &a, std::size_t n)
{
  std::size_t width = a.cols();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != k) {
      for (std::size_t j = 0; j < width; ++j)
        swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? prev : mpz_class(-prev);
}

void swap_cols(IntMat &m, std::size_t a, std::size_t b)
{
  for (std::size_t i = 0; i < m.rows(); ++i)
    swap(m(i, a), m(i, b));
}

// (col_a, col_b) <- (s col_a + t col_b, x col_a + y col_b)
void combine_cols(IntMat &m, std::size_t a, std::size_t b,
                  mpz_class const &s, mpz_class const &t,
                  mpz_class const &x, mpz_class const &y)
{
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class ca = m(i, a), cb = m(i, b);
    m(i, a) = s * ca + t * cb;
    m(i, b) = x * ca + y * cb;
  }
}

} // namespace

mpz_class determinant(IntMat const &m)
{
  if (!m.is_square())
    throw std::invalid_argument("determinant: matrix not square");
  if (m.rows() == 0)
    return 1;
  IntMat a(m);
  return bareiss(a, m.rows());
}

IntVec LinearSolution::as_integers() const
{
  IntVec r;
  r.reserve(x.size());
  for (auto const &v : x)
    r.push_back(v.get_num());
  return r;
}

std::optional<LinearSolution> solve_linear_exact(IntMat const &m, IntVec const &b)
{
  if (!m.is_square())
    throw std::invalid_argument("solve_linear_exact: matrix not square");
  std::size_t n = m.rows();
  if (b.size() != n)
    throw std::invalid_argument("solve_linear_exact: dimension mismatch");

  IntMat a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = m(i, j);
    a(i, n) = b[i];
  }
  if (n > 0 && bareiss(a, n) == 0)
    return std::nullopt;

  LinearSolution sol;
  sol.x.assign(n, mpq_class(0));
  for (std::size_t ii = n; ii-- > 0;) {
    mpq_class acc(a(ii, n));
    for (std::size_t j = ii + 1; j < n; ++j)
      acc -= mpq_class(a(ii, j)) * sol.x[j];
    acc /= mpq_class(a(ii, ii));
    sol.x[ii] = acc;
  }
  sol.integral = true;
  for (auto const &v : sol.x)
    if (v.get_den() != 1)
      sol.integral = false;
  return sol;
}

std::optional<RatVec> solve_rational(RatMat const &m, RatVec const &b)
{
  std::size_t n = m.rows();
  if (!m.is_square() || b.size() != n)
    throw std::invalid_argument("solve_rational: dimension mismatch");
  RatMat a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = m(i, j);
    a(i, n) = b[i];
  }
  auto piv = rref(a);
  if (piv.size() < n || (n > 0 && piv.back() >= n))
    return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = a(i, n);
  return x;
}

IntMat inverse_unimodular(IntMat const &m)
{
  mpz_class d = determinant(m);
  if (d != 1 && d != -1)
    throw std::invalid_argument("inverse_unimodular: determinant is not +-1");
  std::size_t n = m.rows();
  IntMat inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVec e(n);
    e[j] = 1;
    auto sol = solve_linear_exact(m, e);
    for (std::size_t i = 0; i < n; ++i)
      inv(i, j) = sol->x[i].get_num();
  }
  return inv;
}

IntMat matrix_power(IntMat const &m, IntMat const &inverse, int64_t e)
{
  IntMat base = e >= 0 ? m : inverse;
  uint64_t k = e >= 0 ? uint64_t(e) : uint64_t(-(e + 1)) + 1;
  IntMat r = IntMat::identity(m.rows());
  while (k) {
    if (k & 1)
      r = r * base;
    k >>= 1;
    if (k)
      base = base * base;
  }
  return r;
}

std::vector<std::size_t> rref(RatMat &m)
{
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0)
      ++p;
    if (p == m.rows())
      continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        swap(m(p, j), m(row, j));
    mpq_class inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0)
        continue;
      mpq_class f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

std::vector<RatVec> rational_kernel(RatMat m)
{
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots)
    is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    RatVec v(m.cols(), mpq_class(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

ColumnEchelon column_echelon(IntMat const &b)
{
  ColumnEchelon ce{b, IntMat::identity(b.cols()), {}};
  IntMat &h = ce.h;
  IntMat &u = ce.u;
  std::size_t col = 0;
  for (std::size_t row = 0; row < h.rows() && col < h.cols(); ++row) {
    // Fold every column to the right of `col` into `col` on this row.
    for (std::size_t j = col + 1; j < h.cols(); ++j) {
      if (h(row, j) == 0)
        continue;
      if (h(row, col) == 0) {
        swap_cols(h, col, j);
        swap_cols(u, col, j);
        continue;
      }
      mpz_class a = h(row, col), c = h(row, j), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
      mpz_class x = -c / g, y = a / g;
      combine_cols(h, col, j, s, t, x, y);
      combine_cols(u, col, j, s, t, x, y);
    }
    if (h(row, col) == 0)
      continue;
    if (h(row, col) < 0) {
      for (std::size_t i = 0; i < h.rows(); ++i)
        h(i, col) = -h(i, col);
      for (std::size_t i = 0; i < u.rows(); ++i)
        u(i, col) = -u(i, col);
    }
    ce.pivot_rows.push_back(row);
    ++col;
  }
  return ce;
}

std::optional<IntVec> integer_solve(IntMat const &b, IntVec const &r)
{
  if (r.size() != b.rows())
    throw std::invalid_argument("integer_solve: dimension mismatch");
  return integer_solve(column_echelon(b), r);
}

std::optional<IntVec> integer_solve(ColumnEchelon const &ce, IntVec const &r)
{
  if (r.size() != ce.h.rows())
    throw std::invalid_argument("integer_solve: dimension mismatch");
  std::size_t rk = ce.pivot_rows.size();
  IntVec z(ce.h.cols());
  for (std::size_t j = 0; j < rk; ++j) {
    std::size_t pr = ce.pivot_rows[j];
    mpz_class acc = r[pr];
    for (std::size_t l = 0; l < j; ++l)
      acc -= ce.h(pr, l) * z[l];
    if (!mpz_divisible_p(acc.get_mpz_t(), ce.h(pr, j).get_mpz_t()))
      return std::nullopt;
    mpz_divexact(z[j].get_mpz_t(), acc.get_mpz_t(), ce.h(pr, j).get_mpz_t());
  }
  if (ce.h * z != r)
    return std::nullopt;
  return ce.u * z;
}

std::vector<IntVec> integer_kernel(IntMat const &b)
{
  ColumnEchelon ce = column_echelon(b);
  std::vector<IntVec> basis;
  for (std::size_t j = ce.pivot_rows.size(); j < b.cols(); ++j)
    basis.push_back(ce.u.column(j));
  return basis;
}

IntVec clear_denominators(RatVec const &v)
{
  mpz_class l = 1;
  for (auto const &x : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVec r;
  r.reserve(v.size());
  mpz_class g = 0;
  for (auto const &x : v) {
    mpq_class s = x * l;
    r.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.back().get_mpz_t());
  }
  if (g > 1)
    for (auto &x : r)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

IntMat from_columns(std::vector<IntVec> const &cols, std::size_t rows)
{
  IntMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i)
      m(i, j) = cols[j][i];
  return m;
}

RatMat from_columns(std::vector<RatVec> const &cols, std::size_t rows)
{
  RatMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i)
      m(i, j) = cols[j][i];
  return m;
}

} // namespace conjforge::exactnum
