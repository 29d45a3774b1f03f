#ifndef CONJFORGE_ORACLE_POLYCYCLIC_HPP
#define CONJFORGE_ORACLE_POLYCYCLIC_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "conjforge/oracle/bfs.hpp"
#include "conjforge/polycyclic/element.hpp"

namespace conjforge::oracle {

inline GeneratingSet<polycyclic::PCElement>
pc_generating_set(polycyclic::PCGroupSpec const &spec)
{
  using polycyclic::PCElement;
  GeneratingSet<PCElement> gs;
  gs.family = "pc";
  gs.gens = polycyclic::pc_generators(spec);
  gs.identity = PCElement::identity(spec);
  gs.mul = [spec](PCElement const &a, PCElement const &b) { return polycyclic::pc_mul(a, b, spec); };
  gs.inv = [spec](PCElement const &a) { return polycyclic::pc_inv(a, spec); };
  gs.footprint = [](PCElement const &a) { return (a.a.size() + a.b.size()) * sizeof(mpz_class); };
  return gs;
}

struct PCBox
{
  int64_t max_x = 60;
  int64_t max_y = 6;
};

/**
 * Exhaustive search for gamma = (x, y) with ||x||_inf <= max_x and
 * ||y||_inf <= max_y solving u gamma = gamma v, y-major then x, both
 * lexicographic from the most negative corner. Runs in int64.
 */
inline BruteResult<polycyclic::PCElement> pc_box_conjugator(polycyclic::PCElement const &u,
                                                            polycyclic::PCElement const &v,
                                                            polycyclic::PCGroupSpec const &spec,
                                                            PCBox const &box = {})
{
  using polycyclic::PCElement;
  std::size_t n = spec.n, k = spec.k;
  constexpr long kSafe = 1L << 20;
  auto small = [](mpz_class const &z) { return z.fits_slong_p() && std::labs(z.get_si()) <= kSafe; };
  auto to64 = [&](exactnum::IntVec const &x) {
    std::vector<int64_t> r;
    for (auto const &z : x) {
      if (!small(z))
        throw std::invalid_argument("pc_box_conjugator: entry exceeds int64 fast path");
      r.push_back(z.get_si());
    }
    return r;
  };
  auto mat64 = [&](exactnum::IntMat const &m) {
    std::vector<int64_t> r;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!small(m(i, j)))
          throw std::invalid_argument("pc_box_conjugator: matrix entry exceeds int64 fast path");
        r.push_back(m(i, j).get_si());
      }
    return r;
  };
  if (box.max_x > kSafe)
    throw std::invalid_argument("pc_box_conjugator: box exceeds int64 fast path");

  auto ua = to64(u.a), va = to64(v.a), ub = to64(u.b), vb = to64(v.b);
  auto mu = mat64(spec.phi(u.b));

  BruteResult<PCElement> r;
  r.radius = box.max_x;
  std::vector<int64_t> y(k, -box.max_y), x(n), lhs(n), rhs(n);
  while (true) {
    // Shift components: u.b + y == y + v.b.
    if (ub == vb) {
      exactnum::IntVec yz(y.begin(), y.end());
      auto py = mat64(spec.phi(yz));
      std::vector<int64_t> pv(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          pv[i] += py[i * n + j] * va[j];
      std::fill(x.begin(), x.end(), -box.max_x);
      while (true) {
        ++r.examined;
        bool eq = true;
        for (std::size_t i = 0; i < n && eq; ++i) {
          int64_t s = ua[i];
          for (std::size_t j = 0; j < n; ++j)
            s += mu[i * n + j] * x[j];
          eq = s == x[i] + pv[i];
        }
        if (eq) {
          r.witness = PCElement(exactnum::IntVec(x.begin(), x.end()), yz);
          return r;
        }
        std::size_t p = n;
        while (p-- > 0) {
          if (x[p] < box.max_x) {
            ++x[p];
            break;
          }
          x[p] = -box.max_x;
        }
        if (p == std::size_t(-1))
          break;
      }
    } else {
      ++r.examined;
    }
    std::size_t p = k;
    while (p-- > 0) {
      if (y[p] < box.max_y) {
        ++y[p];
        break;
      }
      y[p] = -box.max_y;
    }
    if (p == std::size_t(-1))
      break;
  }
  return r;
}

} // namespace conjforge::oracle

#endif
