#include <atomic>

#include "conjforge/exactnum/ratpoly.hpp"
#include "conjforge/polycyclic/conjugacy.hpp"
#include "internal.hpp"

namespace conjforge::polycyclic {

using namespace exactnum;

namespace detail {

namespace {

constexpr long kMaxOrbitScan = 10'000'000;

IntMat integral_multiple(RatMat const &m)
{
  mpz_class den = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      den = lcm(den, m(i, j).get_den());
  IntMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = m(i, j).get_num() * (den / m(i, j).get_den());
  return r;
}

} // namespace

ShiftData shift_data(IntVec const &v, PCGroupSpec const &spec)
{
  ShiftData sd;
  std::size_t n = spec.n;
  sd.m = spec.phi(v);
  sd.k = IntMat::identity(n) - sd.m;
  sd.ce = column_echelon(sd.k);
  RatPoly mp = minimal_polynomial(to_rational(sd.m));
  sd.has_e1 = mp.eval(mpq_class(1)) == 0;
  if (!sd.has_e1) {
    sd.p1 = IntMat(n, n);
    sd.bound = abs(determinant(sd.k));
  } else {
    // Semisimple, so x - 1 divides the minimal polynomial once and c(M)/c(1)
    // projects onto the eigenvalue-1 space along ker c(M).
    RatPoly c = mp.divmod(RatPoly({mpq_class(-1), mpq_class(1)})).first;
    RatMat proj = eval(c, to_rational(sd.m));
    mpq_class c1 = c.eval(mpq_class(1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        proj(i, j) /= c1;
    sd.p1 = integral_multiple(proj);
    auto vb = integer_kernel(sd.p1);
    if (vb.empty()) {
      sd.bound = 1;
    } else {
      IntMat b = from_columns(vb, n);
      ColumnEchelon bce = column_echelon(b);
      std::vector<IntVec> cols;
      for (auto const &x : vb) {
        auto r = integer_solve(bce, sd.k * x);
        if (!r)
          throw std::logic_error("shift_data: complement lattice is not invariant");
        cols.push_back(*r);
      }
      sd.bound = abs(determinant(from_columns(cols, vb.size())));
    }
  }
  if (sd.bound == 0)
    throw std::logic_error("shift_data: I - phi(v) is singular on the complement");
  return sd;
}

int64_t orbit_order(IntVec const &u, IntVec const &d, ShiftData const &sd, PCGroupSpec const &spec)
{
  IntMat step = spec.phi(d);
  if (sd.has_e1 && !is_zero(sd.p1 * (u - step * u)))
    throw std::invalid_argument("orbit_order: direction moves the eigenvalue-1 component of u");
  if (!sd.bound.fits_slong_p() || sd.bound.get_si() > kMaxOrbitScan)
    throw std::runtime_error("orbit_order: index bound " + sd.bound.get_str() + " too large to scan");
  long limit = sd.bound.get_si();
  IntMat pw = step;
  for (long t = 1; t <= limit; ++t) {
    if (integer_solve(sd.ce, u - pw * u))
      return t;
    pw = pw * step;
  }
  throw std::logic_error("orbit_order: no return within the index bound");
}

} // namespace detail

namespace {

constexpr uint64_t kMaxBox = uint64_t(1) << 32;

bool dims_ok(PCElement const &g, PCGroupSpec const &spec)
{ return g.a.size() == spec.n && g.b.size() == spec.k; }

std::string join(std::vector<int64_t> const &v)
{
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void finish(PCOutcome &out, PCElement const &u, PCElement const &w, PCElement g,
            PCGroupSpec const &spec)
{
  if (pc_mul(u, g, spec) != pc_mul(g, w, spec))
    throw std::logic_error("pc_conj_nonzero: witness failed verification");
  out.conjugate = true;
  out.certificate.verified = true;
  out.certificate.checks.insert(out.certificate.checks.begin(), "u*g == g*w");
  out.lengths.witness = pc_length_est(g, spec);
  out.witness = std::move(g);
}

/// k = 1 with I - phi^v invertible: y in [0, |v|), x unique.
void solve_scan(PCOutcome &out, PCElement const &u, PCElement const &w, PCGroupSpec const &spec,
                detail::ShiftData const &sd)
{
  long av = std::labs(u.b[0].get_si());
  out.stats.window = "0 <= y < " + std::to_string(av);
  IntVec pw = w.a;
  for (long y = 0; y < av; ++y) {
    ++out.stats.candidates;
    auto sol = solve_linear_exact(sd.k, u.a - pw);
    if (sol && sol->integral) {
      out.certificate.checks.push_back("(I - phi^v) x == u - phi^y w");
      out.certificate.checks.push_back("0 <= y < |v|");
      finish(out, u, w, PCElement(sol->as_integers(), IntVec{mpz_class(y)}), spec);
      return;
    }
    pw = spec.generators[0] * pw;
  }
}

} // namespace

int64_t orbit_order(IntVec const &u, IntVec const &v, IntVec const &d, PCGroupSpec const &spec)
{
  if (u.size() != spec.n || v.size() != spec.k || d.size() != spec.k)
    throw std::invalid_argument("orbit_order: dimension mismatch");
  if (is_zero(d))
    throw std::invalid_argument("orbit_order: zero direction");
  return detail::orbit_order(u, d, detail::shift_data(v, spec), spec);
}

mpz_class complement_index_bound(IntVec const &v, PCGroupSpec const &spec)
{ return detail::shift_data(v, spec).bound; }

PCOutcome pc_conj_nonzero(PCElement const &u, PCElement const &w, PCGroupSpec const &spec,
                          Exec exec)
{
  if (!dims_ok(u, spec) || !dims_ok(w, spec))
    throw std::invalid_argument("pc_conj_nonzero: dimension mismatch");
  PCOutcome out;
  out.lengths.u = pc_length_est(u, spec);
  out.lengths.v = pc_length_est(w, spec);
  if (u.b != w.b) {
    out.stats.window = "shift parts differ";
    return out;
  }
  if (is_zero(u.b))
    throw std::invalid_argument("pc_conj_nonzero: shift part is zero");

  std::size_t k = spec.k;
  detail::ShiftData sd = detail::shift_data(u.b, spec);
  if (k == 1 && !sd.has_e1) {
    solve_scan(out, u, w, spec, sd);
    return out;
  }

  // The eigenvalue-1 components must match by a translation; its solutions are y1 + span(S).
  IntVec y1(k);
  std::vector<IntVec> dirs;
  if (sd.has_e1) {
    if (!spec.frame)
      throw UnsupportedSpec("pc_conj_nonzero: eigenvalue-1 component needs a positive real spectrum");
    auto tr = detail::translation_numeric(sd.p1 * u.a, sd.p1 * w.a, spec);
    out.stats.candidates += tr.candidates;
    if (!tr.y) {
      out.stats.window = "eigenvalue-1 component: " + tr.window;
      return out;
    }
    y1 = *tr.y;
    dirs = std::move(tr.stabiliser);
    out.certificate.checks.push_back("eigenvalue-1 components related by phi(y1)");
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      IntVec e(k);
      e[i] = 1;
      dirs.push_back(std::move(e));
    }
  }

  std::vector<int64_t> orders;
  uint64_t total = 1;
  for (auto const &d : dirs) {
    orders.push_back(detail::orbit_order(u.a, d, sd, spec));
    if (total > kMaxBox / uint64_t(orders.back()))
      throw std::runtime_error("pc_conj_nonzero: orbit-order box too large");
    total *= uint64_t(orders.back());
  }
  out.stats.window = "T=" + join(orders) + " d=" + sd.bound.get_str();

  auto candidate_y = [&](uint64_t idx) {
    IntVec y = y1;
    for (std::size_t j = dirs.size(); j-- > 0;) {
      long c = static_cast<long>(idx % uint64_t(orders[j]));
      idx /= uint64_t(orders[j]);
      for (std::size_t i = 0; i < k; ++i)
        y[i] += dirs[j][i] * c;
    }
    return y;
  };
  auto solve = [&](IntVec const &y) { return integer_solve(sd.ce, u.a - spec.phi(y) * w.a); };

  uint64_t hit = total;
  if (exec == Exec::Serial) {
    for (uint64_t i = 0; i < total; ++i)
      if (solve(candidate_y(i))) {
        hit = i;
        break;
      }
  } else {
    std::atomic<uint64_t> best{total};
#pragma omp parallel for schedule(dynamic, 16)
    for (int64_t i = 0; i < static_cast<int64_t>(total); ++i) {
      auto ui = static_cast<uint64_t>(i);
      if (ui >= best.load(std::memory_order_relaxed))
        continue;
      if (solve(candidate_y(ui))) {
        uint64_t cur = best.load();
        while (ui < cur && !best.compare_exchange_weak(cur, ui)) {
        }
      }
    }
    hit = best.load();
  }
  // Rank of the hit in lexicographic order, identical for both paths.
  out.stats.candidates += hit == total ? total : hit + 1;
  if (hit == total)
    return out;

  IntVec y = candidate_y(hit);
  if (k == 1) {
    // v lies in the centraliser projection, so y can be reduced into [0, |v|).
    mpz_class av = abs(u.b[0]);
    mpz_class r = y[0] % av;
    if (r < 0)
      r += av;
    y[0] = r;
  }
  auto x = solve(y);
  if (!x)
    throw std::logic_error("pc_conj_nonzero: reduced candidate lost integrality");
  out.certificate.checks.push_back("(I - phi(v)) x == u - phi(y) w");
  if (k == 1)
    out.certificate.checks.push_back("0 <= y < |v|");
  finish(out, u, w, PCElement(*x, y), spec);
  return out;
}

PCOutcome pc_conjugacy(PCElement const &u, PCElement const &v, PCGroupSpec const &spec, Exec exec)
{
  if (!dims_ok(u, spec) || !dims_ok(v, spec))
    throw std::invalid_argument("pc_conjugacy: dimension mismatch");
  if (u.b != v.b) {
    PCOutcome out;
    out.lengths.u = pc_length_est(u, spec);
    out.lengths.v = pc_length_est(v, spec);
    out.stats.window = "shift parts differ";
    return out;
  }
  if (is_zero(u.b))
    return pc_conj_translation(u, v, spec);
  return pc_conj_nonzero(u, v, spec, exec);
}

} // namespace conjforge::polycyclic
