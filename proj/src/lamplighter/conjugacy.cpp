#include "conjforge/lamplighter/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "conjforge/lamplighter/metric.hpp"

namespace conjforge::lamplighter {

namespace {

constexpr char const *kIdentityCheck = "u*g == g*v";
constexpr char const *kBoundCheck = "length-bound";

// Solves P + t^s f = f + t^n Q for f with s > 0, or reports no solution.
//
// Comparing coefficients of t^k gives the recurrence
//   lambda_k - lambda_{k-s} = a_k - b_{k-n} =: c_k
// where f = sum lambda_k t^k, P = sum a_k t^k, Q = sum b_k t^k. Since f has
// finite support, lambda vanishes for k far to the left, so telescoping the
// recurrence down each residue class mod s gives
//   lambda_k = sum_{m >= 0} c_{k - m s}.
// lambda also has to vanish far to the right, which happens exactly when the
// full sum of c over every residue class mod s is zero in Z_q.
std::optional<LaurentPoly> telescope(LaurentPoly const &p, LaurentPoly const &q_poly,
                                     int64_t s, int64_t n)
{
  uint32_t q = p.modulus();
  LaurentPoly c = p.add_shifted(q_poly, n, -1);

  // Residue class -> ascending exponents with their coefficients.
  std::map<int64_t, std::vector<LaurentPoly::Term>> classes;
  for (auto const &t : c.terms()) {
    int64_t r = ((t.first % s) + s) % s;
    classes[r].push_back(t);
  }

  std::vector<std::pair<int64_t, int64_t>> lambda;
  for (auto const &[r, terms] : classes) {
    uint64_t running = 0;
    std::size_t idx = 0;
    for (int64_t k = terms.front().first; idx < terms.size(); k += s) {
      if (terms[idx].first == k)
        running = (running + terms[idx++].second) % q;
      if (running)
        lambda.emplace_back(k, static_cast<int64_t>(running));
    }
    if (running != 0)
      return std::nullopt;
  }
  return LaurentPoly(q, lambda);
}

void finish(LLOutcome &out, LLElement const &u, LLElement const &v)
{
  out.lengths.u = double(ll_word_length(u));
  out.lengths.v = double(ll_word_length(v));
  if (!out.witness)
    return;
  LLElement const &g = *out.witness;
  if (ll_mul(u, g) != ll_mul(g, v))
    throw std::logic_error("ll_conjugacy: witness failed exact verification");
  out.certificate.verified = true;
  out.certificate.checks.push_back(kIdentityCheck);
  int64_t lg = ll_word_length(g);
  out.lengths.witness = double(lg);
  if (lg <= kLLBoundConstant * (int64_t(out.lengths.u) + int64_t(out.lengths.v)))
    out.certificate.checks.push_back(kBoundCheck);
}

} // namespace

bool ll_within_bound(LLOutcome const &o)
{
  return std::find(o.certificate.checks.begin(), o.certificate.checks.end(),
                   std::string(kBoundCheck)) != o.certificate.checks.end();
}

LLOutcome ll_conjugacy(LLElement const &u, LLElement const &v)
{
  if (u.q() != v.q())
    throw std::invalid_argument("ll_conjugacy: mismatched q");
  uint32_t q = u.q();
  LLOutcome out;

  if (u.n != v.n) {
    out.stats.window = "shifts differ";
    finish(out, u, v);
    return out;
  }

  if (u.n == 0) {
    // P = t^n Q; supports must align, which pins n = v0(P) - v0(Q).
    LaurentPoly const &p = u.f, &qq = v.f;
    if (p.is_zero() || qq.is_zero()) {
      out.stats.window = "n=0";
      out.stats.candidates = 1;
      if (p.is_zero() && qq.is_zero()) {
        out.conjugate = true;
        out.witness = LLElement::identity(q);
      }
    } else {
      int64_t n = p.v0().value() - qq.v0().value();
      out.stats.window = "n=" + std::to_string(n);
      out.stats.candidates = 1;
      if (qq.shifted(n) == p) {
        out.conjugate = true;
        out.witness = LLElement(n, LaurentPoly(q));
      }
    }
    finish(out, u, v);
    return out;
  }

  // A conjugator of the inverses conjugates the originals.
  LLElement uu = u.n > 0 ? u : ll_inv(u);
  LLElement vv = v.n > 0 ? v : ll_inv(v);
  int64_t s = uu.n;
  out.stats.window = "n in [0," + std::to_string(s) + ")";

  int64_t best_len = -1;
  for (int64_t n = 0; n < s; ++n) {
    ++out.stats.candidates;
    auto f = telescope(uu.f, vv.f, s, n);
    if (!f)
      continue;
    LLElement g(n, std::move(*f));
    int64_t len = ll_word_length(g);
    if (best_len < 0 || len < best_len) {
      best_len = len;
      out.witness = std::move(g);
    }
  }
  out.conjugate = out.witness.has_value();
  finish(out, u, v);
  return out;
}

} // namespace conjforge::lamplighter
