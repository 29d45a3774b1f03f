#include "conjforge/polycyclic/eigen_frame.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "numeric.hpp"

namespace conjforge::polycyclic {

namespace {

Eigen::MatrixXd to_eigen(IntMat const &m)
{
  Eigen::MatrixXd r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = m(i, j).get_d();
  return r;
}

} // namespace

std::vector<double> EigenFrame::coords(IntVec const &x) const
{
  std::vector<double> c(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c[i] += inverse[i * n + j] * x[j].get_d();
  return c;
}

double EigenFrame::norm(IntVec const &x) const
{
  double m = 0;
  for (double c : coords(x))
    m = std::max(m, std::fabs(c));
  return m;
}

double EigenFrame::inverse_row_l1(std::size_t j) const
{
  double s = 0;
  for (std::size_t i = 0; i < n; ++i)
    s += std::fabs(inverse[j * n + i]);
  return s;
}

EigenFrame build_eigen_frame(std::vector<IntMat> const &generators)
{
  std::size_t n = generators.front().rows(), k = generators.size();
  std::vector<Eigen::MatrixXd> gs;
  for (auto const &g : generators)
    gs.push_back(to_eigen(g));

  // A generic combination separates the joint eigenspaces; retry on accidental collisions.
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::MatrixXd comb = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < k; ++i)
      comb += std::sqrt(2.0 + double(i) + 3.1 * attempt) * gs[i] / gs[i].norm();
    Eigen::EigenSolver<Eigen::MatrixXd> es(comb);
    if (es.info() != Eigen::Success)
      continue;
    for (std::size_t j = 0; j < n; ++j)
      if (std::fabs(es.eigenvalues()[j].imag()) > 1e-9 * (1 + std::abs(es.eigenvalues()[j])))
        throw UnsupportedSpec("eigen frame: spectrum is not real");
    Eigen::MatrixXd p = es.eigenvectors().real();
    for (std::size_t j = 0; j < n; ++j) {
      Eigen::Index big;
      p.col(j).cwiseAbs().maxCoeff(&big);
      p.col(j) /= p.col(j).norm() * (p(big, j) < 0 ? -1.0 : 1.0);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(p);
    if (lu.rank() < static_cast<Eigen::Index>(n))
      continue;
    Eigen::MatrixXd pinv = lu.inverse();

    std::vector<std::vector<double>> logs(n, std::vector<double>(k));
    bool diagonal = true;
    for (std::size_t i = 0; i < k && diagonal; ++i) {
      Eigen::MatrixXd d = pinv * gs[i] * p;
      double scale = gs[i].norm();
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (r != c && std::fabs(d(r, c)) > 1e-8 * scale)
            diagonal = false;
      for (std::size_t j = 0; j < n && diagonal; ++j) {
        if (d(j, j) <= 0)
          throw UnsupportedSpec("eigen frame: eigenvalue is not positive");
        logs[j][i] = std::log(d(j, j));
      }
    }
    if (!diagonal)
      continue;

    // Canonical column order: descending log-eigenvalue tuples.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return logs[x] > logs[y]; });

    EigenFrame f;
    f.n = n;
    f.k = k;
    f.basis.resize(n * n);
    f.inverse.resize(n * n);
    f.log_lambda.resize(n * k);
    for (std::size_t jj = 0; jj < n; ++jj) {
      std::size_t j = order[jj];
      for (std::size_t r = 0; r < n; ++r) {
        f.basis[r * n + jj] = p(r, j);
        f.inverse[jj * n + r] = pinv(j, r);
      }
      for (std::size_t i = 0; i < k; ++i)
        f.log_lambda[jj * k + i] = logs[j][i];
    }
    return f;
  }
  throw std::runtime_error("eigen frame: simultaneous diagonalisation failed");
}

namespace numeric {

Dense Dense::select_columns(std::vector<std::size_t> const &idx) const
{
  Dense r(rows, idx.size());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      r(i, j) = (*this)(i, idx[j]);
  return r;
}

namespace {

Eigen::MatrixXd to_eigen(Dense const &a)
{
  Eigen::MatrixXd m(a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      m(i, j) = a(i, j);
  return m;
}

} // namespace

std::vector<std::size_t> independent_columns(Dense const &a, double tol)
{
  std::vector<std::size_t> picked;
  for (std::size_t j = 0; j < a.cols; ++j) {
    std::vector<std::size_t> trial = picked;
    trial.push_back(j);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a.select_columns(trial)));
    auto const &s = svd.singularValues();
    if (s.size() == static_cast<Eigen::Index>(trial.size()) && s(s.size() - 1) > tol)
      picked = std::move(trial);
  }
  return picked;
}

std::vector<double> least_squares(Dense const &a, std::vector<double> const &b)
{
  Eigen::VectorXd rhs(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    rhs(i) = b[i];
  Eigen::VectorXd x = to_eigen(a).colPivHouseholderQr().solve(rhs);
  return std::vector<double>(x.data(), x.data() + x.size());
}

std::optional<std::pair<int64_t, int64_t>> rational_approx(double x, int64_t max_den, double tol)
{
  for (int64_t q = 1; q <= max_den; ++q) {
    double p = std::round(x * double(q));
    if (std::fabs(x - p / double(q)) <= tol)
      return std::pair<int64_t, int64_t>{static_cast<int64_t>(p), q};
  }
  return std::nullopt;
}

} // namespace numeric

} // namespace conjforge::polycyclic
