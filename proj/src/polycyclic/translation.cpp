#include <cmath>

#include "conjforge/polycyclic/conjugacy.hpp"
#include "conjforge/polycyclic/eigen_frame.hpp"
#include "internal.hpp"
#include "numeric.hpp"

namespace conjforge::polycyclic {

using namespace exactnum;

namespace detail {

namespace {

constexpr int64_t kMaxDenominator = 64;
constexpr int kRoundingBox = 2;

std::vector<IntVec> unit_basis(std::size_t k)
{
  std::vector<IntVec> b;
  for (std::size_t i = 0; i < k; ++i) {
    IntVec e(k);
    e[i] = 1;
    b.push_back(std::move(e));
  }
  return b;
}

// Rounding in P^-1 x is about 1e-16 ||P^-1|| ||x||; a nonzero coordinate of an
// integer vector is at least of order 1/||x||^(n-1), far above this at desk scale.
bool numerically_zero(double c, IntVec const &x, EigenFrame const &f, std::size_t j)
{ return std::fabs(c) <= 1e-12 * f.inverse_row_l1(j) * (1.0 + sup_norm(x).get_d()); }

/// Shared handling of zero vectors; true when it decided the instance.
bool trivial_case(IntVec const &u, IntVec const &w, std::size_t k, TranslationResult &r)
{
  bool uz = is_zero(u), wz = is_zero(w);
  if (!uz && !wz)
    return false;
  if (uz && wz) {
    r.y = IntVec(k);
    r.stabiliser = unit_basis(k);
  }
  r.window = "zero vector";
  return true;
}

} // namespace

bool scan_available(PCGroupSpec const &spec)
{ return spec.n == 2 && spec.k == 1 && spec.hyperbolic.value_or(false) && spec.frame; }

TranslationResult translation_numeric(IntVec const &u, IntVec const &w, PCGroupSpec const &spec)
{
  if (!spec.frame)
    throw UnsupportedSpec("translation: spec lacks a positive real spectrum");
  TranslationResult res;
  std::size_t n = spec.n, k = spec.k;
  if (trivial_case(u, w, k, res))
    return res;
  EigenFrame const &f = *spec.frame;
  auto cu = f.coords(u), cw = f.coords(w);

  // phi(y) scales each eigen-coordinate by a positive factor: zero pattern and signs are invariant.
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < n; ++j) {
    bool zu = numerically_zero(cu[j], u, f, j), zw = numerically_zero(cw[j], w, f, j);
    if (zu != zw || (!zu && (cu[j] > 0) != (cw[j] > 0))) {
      res.window = "eigen-coordinate pattern";
      return res;
    }
    if (!zu)
      support.push_back(j);
  }

  numeric::Dense lmat(support.size(), k);
  std::vector<double> d(support.size());
  for (std::size_t r = 0; r < support.size(); ++r) {
    for (std::size_t i = 0; i < k; ++i)
      lmat(r, i) = f.log_eigenvalue(support[r], i);
    d[r] = std::log(std::fabs(cu[support[r]])) - std::log(std::fabs(cw[support[r]]));
  }

  // Rational dependencies among the columns of L give the stabiliser lattice.
  auto indep = numeric::independent_columns(lmat, 1e-7);
  std::vector<std::size_t> dep;
  for (std::size_t i = 0, p = 0; i < k; ++i) {
    if (p < indep.size() && indep[p] == i)
      ++p;
    else
      dep.push_back(i);
  }
  numeric::Dense li = lmat.select_columns(indep);
  RatMat rel(indep.size(), k);
  for (std::size_t r = 0; r < indep.size(); ++r)
    rel(r, indep[r]) = 1;
  mpz_class den_lcm = 1;
  for (std::size_t di : indep.empty() ? std::vector<std::size_t>{} : dep) {
    std::vector<double> col(support.size());
    for (std::size_t r = 0; r < support.size(); ++r)
      col[r] = lmat(r, di);
    auto alpha = numeric::least_squares(li, col);
    for (std::size_t r = 0; r < indep.size(); ++r) {
      auto pq = numeric::rational_approx(alpha[r], kMaxDenominator, 1e-6);
      if (!pq)
        throw std::runtime_error("translation: eigenvalue logs have no small rational relation");
      rel(r, di) = mpq_class(pq->first, pq->second);
      rel(r, di).canonicalize();
      den_lcm = lcm(den_lcm, rel(r, di).get_den());
    }
  }
  IntMat rel_int(indep.size(), k);
  for (std::size_t r = 0; r < indep.size(); ++r)
    for (std::size_t c = 0; c < k; ++c)
      rel_int(r, c) = rel(r, c).get_num() * (den_lcm / rel(r, c).get_den());
  std::vector<IntVec> stab = indep.empty() ? unit_basis(k) : integer_kernel(rel_int);
  for (auto const &s : stab)
    if (spec.phi(s) * w != w)
      throw std::runtime_error("translation: reconstructed stabiliser failed exact check");

  // Particular solution: fix dependent coordinates modulo den_lcm, round the rest.
  if (!den_lcm.fits_slong_p() || std::pow(den_lcm.get_d(), double(dep.size())) > 1e6)
    throw std::runtime_error("translation: dependent-coordinate window too large");
  int64_t dl = den_lcm.get_si();
  std::vector<int64_t> yd(dep.size(), 0);
  std::size_t m = indep.size();
  res.window = "rounded log-linear solve +-" + std::to_string(kRoundingBox) +
               (dep.empty() ? std::string() : ", dependent coords mod " + std::to_string(dl));
  while (true) {
    std::vector<double> rhs = d;
    for (std::size_t t = 0; t < dep.size(); ++t)
      for (std::size_t r = 0; r < support.size(); ++r)
        rhs[r] -= double(yd[t]) * lmat(r, dep[t]);
    std::vector<double> yi = m ? numeric::least_squares(li, rhs) : std::vector<double>{};
    std::vector<int> off(m, -kRoundingBox);
    while (true) {
      IntVec y(k);
      for (std::size_t t = 0; t < dep.size(); ++t)
        y[dep[t]] = yd[t];
      for (std::size_t r = 0; r < m; ++r)
        y[indep[r]] = static_cast<long>(std::llround(yi[r])) + off[r];
      ++res.candidates;
      if (spec.phi(y) * w == u) {
        res.y = std::move(y);
        res.stabiliser = std::move(stab);
        return res;
      }
      std::size_t p = 0;
      while (p < m && off[p] == kRoundingBox)
        off[p++] = -kRoundingBox;
      if (p == m)
        break;
      ++off[p];
    }
    std::size_t p = 0;
    while (p < dep.size() && yd[p] == dl - 1)
      yd[p++] = 0;
    if (p == dep.size())
      break;
    ++yd[p];
  }
  return res;
}

TranslationResult translation_scan(IntVec const &u, IntVec const &w, PCGroupSpec const &spec)
{
  if (!scan_available(spec))
    throw UnsupportedSpec("translation scan: needs a hyperbolic 2x2 spec with one generator");
  TranslationResult res;
  if (trivial_case(u, w, 1, res))
    return res;
  EigenFrame const &f = *spec.frame;
  IntMat const &g = spec.generators[0];

  // G(x) = c x1^2 + (d - a) x1 x2 - b x2^2 vanishes on both eigenlines, so
  // G = kappa * (eigen-coordinate product) and |G| >= 1 on nonzero integer x.
  auto form = [&](double x1, double x2) {
    return g(1, 0).get_d() * x1 * x1 + mpz_class(g(1, 1) - g(0, 0)).get_d() * x1 * x2 -
           g(0, 1).get_d() * x2 * x2;
  };
  double kappa = 0;
  for (auto [x1, x2] : {std::pair{1, 0}, {0, 1}, {1, 1}}) {
    IntVec x{x1, x2};
    auto c = f.coords(x);
    if (std::fabs(c[0] * c[1]) > 1e-12) {
      kappa = form(x1, x2) / (c[0] * c[1]);
      break;
    }
  }
  double q1 = std::log(f.inverse_row_l1(0)), q2 = std::log(f.inverse_row_l1(1));
  double cst = std::max({0.0, q1, std::log(std::fabs(kappa)) + q2});
  double loglam = std::fabs(f.log_eigenvalue(0, 0));
  double num = std::log(sup_norm(u).get_d()) + std::log(sup_norm(w).get_d()) + 2 * cst;
  auto window = static_cast<int64_t>(std::ceil(num / loglam)) + 1;
  res.window = "|y| <= " + std::to_string(window);

  IntVec fw = w, bw = w;
  for (int64_t y = 0; y <= window; ++y) {
    ++res.candidates;
    if (fw == u) {
      res.y = IntVec{mpz_class(static_cast<long>(y))};
      break;
    }
    if (y > 0) {
      ++res.candidates;
      if (bw == u) {
        res.y = IntVec{mpz_class(static_cast<long>(-y))};
        break;
      }
    }
    fw = g * fw;
    bw = spec.inverses[0] * bw;
  }
  return res;
}

} // namespace detail

PCOutcome pc_conj_translation(PCElement const &u, PCElement const &w, PCGroupSpec const &spec,
                              TranslationMethod method)
{
  if (u.a.size() != spec.n || w.a.size() != spec.n || u.b.size() != spec.k ||
      w.b.size() != spec.k)
    throw std::invalid_argument("pc_conj_translation: dimension mismatch");
  if (!is_zero(u.b) || !is_zero(w.b))
    throw std::invalid_argument("pc_conj_translation: shift parts must be zero");

  PCOutcome out;
  out.lengths.u = pc_length_est(u, spec);
  out.lengths.v = pc_length_est(w, spec);
  if (u == w) {
    out.conjugate = true;
    out.witness = PCElement::identity(spec);
    out.certificate = {true, {"u == w"}};
    out.stats = {1, "identity"};
    return out;
  }
  if (!spec.frame)
    throw UnsupportedSpec("pc_conj_translation: spec lacks a positive real spectrum");

  detail::TranslationResult r;
  if (method == TranslationMethod::ExactScan) {
    r = detail::translation_scan(u.a, w.a, spec);
  } else {
    bool fallback = method == TranslationMethod::Auto && detail::scan_available(spec);
    try {
      r = detail::translation_numeric(u.a, w.a, spec);
    } catch (std::runtime_error const &) {
      if (!fallback)
        throw;
    }
    if (fallback && !r.y) {
      uint64_t tried = r.candidates;
      r = detail::translation_scan(u.a, w.a, spec);
      r.candidates += tried;
    }
  }
  out.stats = {r.candidates, r.window};
  if (!r.y)
    return out;

  PCElement g(IntVec(spec.n), *r.y);
  if (pc_mul(u, g, spec) != pc_mul(g, w, spec))
    throw std::logic_error("pc_conj_translation: witness failed verification");
  out.conjugate = true;
  out.witness = std::move(g);
  out.certificate = {true, {"phi(y) w == u", "u*g == g*w"}};
  out.lengths.witness = pc_length_est(*out.witness, spec);
  return out;
}

} // namespace conjforge::polycyclic
