#ifndef CONJFORGE_EXACTNUM_MATRIX_HPP
#define CONJFORGE_EXACTNUM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace conjforge::exactnum {

using IntVec = std::vector<mpz_class>;
using RatVec = std::vector<mpq_class>;

/// Dense row-major matrix over an exact GMP scalar type.
template <class T>
class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<long>> rows)
  {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (auto const &r : rows) {
      if (r.size() != cols_)
        throw std::invalid_argument("Matrix: ragged initializer");
      for (long v : r)
        data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n)
  {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  T const &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const
  {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const
  {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(Matrix const &o) const
  {
    if (cols_ != o.rows_)
      throw std::invalid_argument("Matrix: dimension mismatch in product");
    Matrix r(rows_, o.cols_);
    T tmp;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        T const &a = (*this)(i, k);
        if (a == 0)
          continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          tmp = a * o(k, j);
          r(i, j) += tmp;
        }
      }
    return r;
  }

  std::vector<T> operator*(std::vector<T> const &v) const
  {
    if (cols_ != v.size())
      throw std::invalid_argument("Matrix: dimension mismatch in matrix-vector product");
    std::vector<T> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Matrix operator+(Matrix const &o) const { return combine(o, 1); }
  Matrix operator-(Matrix const &o) const { return combine(o, -1); }

  bool operator==(Matrix const &o) const = default;

private:
  Matrix combine(Matrix const &o, int sign) const
  {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: dimension mismatch in sum");
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (sign > 0)
        r.data_[i] += o.data_[i];
      else
        r.data_[i] -= o.data_[i];
    }
    return r;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Matrix<mpz_class>;
using RatMat = Matrix<mpq_class>;

inline RatMat to_rational(IntMat const &m)
{
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = mpq_class(m(i, j));
  return r;
}

inline RatVec to_rational(IntVec const &v)
{
  RatVec r;
  r.reserve(v.size());
  for (auto const &x : v)
    r.emplace_back(x);
  return r;
}

template <class T>
std::vector<T> operator+(std::vector<T> const &a, std::vector<T> const &b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("vector: dimension mismatch");
  std::vector<T> r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}

template <class T>
std::vector<T> operator-(std::vector<T> const &a, std::vector<T> const &b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("vector: dimension mismatch");
  std::vector<T> r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= b[i];
  return r;
}

template <class T>
std::vector<T> operator-(std::vector<T> const &a)
{
  std::vector<T> r(a);
  for (auto &x : r)
    x = -x;
  return r;
}

inline bool is_zero(IntVec const &v)
{
  for (auto const &x : v)
    if (x != 0)
      return false;
  return true;
}

inline bool is_zero(RatVec const &v)
{
  for (auto const &x : v)
    if (x != 0)
      return false;
  return true;
}

/// Max-norm of an integer vector.
inline mpz_class sup_norm(IntVec const &v)
{
  mpz_class m = 0;
  for (auto const &x : v)
    if (abs(x) > m)
      m = abs(x);
  return m;
}

} // namespace conjforge::exactnum

#endif
