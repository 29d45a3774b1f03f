#include "conjforge/cli/audit.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "conjforge/bs/conjugacy.hpp"
#include "conjforge/lamplighter/conjugacy.hpp"
#include "conjforge/lamplighter/metric.hpp"
#include "conjforge/polycyclic/conjugacy.hpp"
#include "conjforge/polycyclic/eigen_frame.hpp"

namespace conjforge::cli {

using lamplighter::LLElement;
using bs::BSElement;
using polycyclic::PCElement;

uint64_t sample_seed(uint64_t seed, uint64_t index)
{
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

LLElement sample_ll(std::mt19937_64 &rng, uint32_t q, int64_t max_len)
{
  std::uniform_int_distribution<int64_t> pos(-max_len, max_len), count(0, max_len);
  std::uniform_int_distribution<int64_t> coeff(1, q - 1);
  std::vector<std::pair<int64_t, int64_t>> terms;
  int64_t c = count(rng);
  for (int64_t i = 0; i < c; ++i) {
    int64_t e = pos(rng);
    terms.emplace_back(e, coeff(rng));
  }
  int64_t n = pos(rng);
  return LLElement(n, exactnum::LaurentPoly(q, terms));
}

BSElement sample_bs(std::mt19937_64 &rng, uint32_t q, int64_t max_len)
{
  int64_t bits = std::min<int64_t>(max_len, 62);
  std::uniform_int_distribution<int64_t> shift(-max_len, max_len);
  std::uniform_int_distribution<int64_t> num(-(int64_t(1) << bits), int64_t(1) << bits);
  int64_t n = shift(rng);
  int64_t a = num(rng);
  int64_t k = shift(rng);
  return BSElement(n, exactnum::qfrac_normalize(mpz_class(static_cast<long>(a)), k, q));
}

PCElement sample_pc(std::mt19937_64 &rng, polycyclic::PCGroupSpec const &spec, int64_t max_len)
{
  int64_t half = (max_len + 1) / 2;
  int64_t amax = int64_t(1) << std::min<int64_t>(half, 62);
  std::uniform_int_distribution<int64_t> da(-amax, amax), db(-half, half);
  PCElement g = PCElement::identity(spec);
  for (auto &x : g.a)
    x = static_cast<long>(da(rng));
  for (auto &x : g.b)
    x = static_cast<long>(db(rng));
  return g;
}

namespace {

/// Undefined when both inputs have length (estimate) zero.
std::optional<double> ratio(double w, double u, double v)
{ return u + v > 0 ? std::optional<double>(w / (u + v)) : std::nullopt; }

json ratio_json(std::optional<double> r) { return r ? json(*r) : json(nullptr); }

/**
 * u = (s, P), v = (s, Q), gamma = (n, f) with s != 0: the normalised shift
 * 0 <= n < |s|, the identity f (q^s - 1) = q^n Q - P and
 * v0(f) >= min{v0(P), v0(Q) + n}.
 */
json bs_shift_checks(BSElement const &u, BSElement const &v, BSElement const &g)
{
  using exactnum::ExtInt;
  bool window = g.n >= 0 && g.n < std::llabs(u.n);
  auto lhs = g.f.times_power(u.n) - g.f;
  auto rhs = v.f.times_power(g.n) - u.f;
  ExtInt vq = v.f.valuation();
  ExtInt shifted = vq.is_finite() ? ExtInt(vq.value() + g.n) : vq;
  bool valuation = g.f.valuation() >= exactnum::min(u.f.valuation(), shifted);
  return json{{"n_window", window}, {"divisibility", lhs == rhs}, {"valuation", valuation}};
}

json checks_json(Certificate const &c)
{
  json a = json::array();
  for (auto const &s : c.checks)
    a.push_back(s);
  return a;
}

struct Record
{
  json data;
  std::optional<double> ratio;
  double witness = 0;
  bool violation = false;
};

Record ll_record(uint64_t i, AuditConfig const &cfg, std::mt19937_64 &rng)
{
  uint32_t q = cfg.ctx.q;
  auto u = sample_ll(rng, q, cfg.max_len);
  auto g = sample_ll(rng, q, cfg.max_len);
  auto v = lamplighter::ll_conjugate(u, g);
  auto o = lamplighter::ll_conjugacy(u, v);
  int64_t lu = lamplighter::ll_word_length(u), lv = lamplighter::ll_word_length(v);
  int64_t lw = o.witness ? lamplighter::ll_word_length(*o.witness) : -1;
  int64_t bound = lamplighter::kLLBoundConstant * (lu + lv);
  Record r;
  r.witness = double(lw);
  r.ratio = ratio(double(lw), double(lu), double(lv));
  bool verified = o.conjugate && o.certificate.verified;
  bool within = verified && lw <= bound;
  r.violation = !within;
  r.data = json{{"index", i},
                {"u", to_json(u)},
                {"gamma", to_json(g)},
                {"v", to_json(v)},
                {"witness", o.witness ? to_json(*o.witness) : json(nullptr)},
                {"len_u", lu},
                {"len_v", lv},
                {"len_witness", lw},
                {"bound", bound},
                {"ratio", ratio_json(r.ratio)},
                {"verified", verified},
                {"within_bound", within},
                {"checks", checks_json(o.certificate)}};
  return r;
}

Record bs_record(uint64_t i, AuditConfig const &cfg, std::mt19937_64 &rng)
{
  uint32_t q = cfg.ctx.q;
  auto u = sample_bs(rng, q, cfg.max_len);
  auto g = sample_bs(rng, q, cfg.max_len);
  auto v = bs::bs_conjugate(u, g);
  auto o = bs::bs_conjugacy(u, v);
  Record r;
  r.witness = o.lengths.witness;
  r.ratio = ratio(o.lengths.witness, o.lengths.u, o.lengths.v);
  bool verified = o.conjugate && o.certificate.verified;
  json shift = nullptr;
  bool internal = true;
  if (verified && u.n != 0) {
    shift = bs_shift_checks(u, v, *o.witness);
    for (auto const &[k, ok] : shift.items())
      internal = internal && ok.get<bool>();
  }
  r.violation = !verified || !internal;
  r.data = json{{"index", i},
                {"u", to_json(u)},
                {"gamma", to_json(g)},
                {"v", to_json(v)},
                {"witness", o.witness ? to_json(*o.witness) : json(nullptr)},
                {"lower_u", o.lengths.u},
                {"lower_v", o.lengths.v},
                {"upper_witness", o.lengths.witness},
                {"ratio", ratio_json(r.ratio)},
                {"verified", verified},
                {"internal_checks", internal},
                {"shift_checks", shift},
                {"checks", checks_json(o.certificate)}};
  return r;
}

Record pc_record(uint64_t i, AuditConfig const &cfg, std::mt19937_64 &rng)
{
  auto const &spec = *cfg.ctx.spec;
  auto u = sample_pc(rng, spec, cfg.max_len);
  auto g = sample_pc(rng, spec, cfg.max_len);
  auto v = polycyclic::pc_conjugate(u, g, spec);
  auto o = polycyclic::pc_conjugacy(u, v, spec, Exec::Serial);
  Record r;
  r.witness = o.lengths.witness;
  r.ratio = ratio(o.lengths.witness, o.lengths.u, o.lengths.v);
  bool verified = o.conjugate && o.certificate.verified;
  json extra = json::object();
  bool internal = true;
  if (verified && spec.k == 1 && u.b[0] != 0) {
    mpz_class y = o.witness->b[0];
    bool window = y >= 0 && y < abs(u.b[0]);
    extra["y_window"] = window;
    internal = window;
    if (spec.frame) {
      auto const &f = *spec.frame;
      double lambda = std::exp(f.log_eigenvalue(0, 0));
      double rhs = (std::pow(lambda, std::fabs(u.b[0].get_d())) + 1) *
                   (f.norm(u.a) + std::pow(lambda, y.get_d()) * f.norm(v.a));
      bool norm_ok = f.norm(o.witness->a) <= rhs + 1e-6;
      extra["norm_inequality"] = norm_ok;
      internal = internal && norm_ok;
    }
  }
  r.violation = !verified || !internal;
  r.data = json{{"index", i},
                {"u", to_json(u)},
                {"gamma", to_json(g)},
                {"v", to_json(v)},
                {"witness", o.witness ? to_json(*o.witness) : json(nullptr)},
                {"est_u", o.lengths.u},
                {"est_v", o.lengths.v},
                {"est_witness", o.lengths.witness},
                {"ratio", ratio_json(r.ratio)},
                {"verified", verified},
                {"internal_checks", internal},
                {"search", json{{"candidates", o.stats.candidates}, {"window", o.stats.window}}},
                {"checks", checks_json(o.certificate)}};
  for (auto const &[key, val] : extra.items())
    r.data[key] = val;
  return r;
}

Record make_record(uint64_t i, AuditConfig const &cfg)
{
  std::mt19937_64 rng(sample_seed(cfg.seed, i));
  try {
    switch (cfg.ctx.family) {
    case Family::Lamplighter:
      return ll_record(i, cfg, rng);
    case Family::BaumslagSolitar:
      return bs_record(i, cfg, rng);
    case Family::Polycyclic:
      return pc_record(i, cfg, rng);
    }
  } catch (std::logic_error const &e) {
    Record r;
    r.violation = true;
    r.data = json{{"index", i}, {"verified", false}, {"error", e.what()}};
    return r;
  }
  return {};
}

json bound_json(Family f)
{
  switch (f) {
  case Family::Lamplighter:
    return json{{"constant", lamplighter::kLLBoundConstant},
                {"form", "|gamma| <= K (|u| + |v|)"},
                {"asserted", true},
                {"metric", "exact word length"}};
  case Family::BaumslagSolitar:
    return json{{"constant", bs::bs_bound_constant()},
                {"form", "|gamma| <= K (|u| + |v|)"},
                {"asserted", false},
                {"metric", "upper estimate for gamma, lower estimates for u and v"}};
  case Family::Polycyclic:
    return json{{"constant", nullptr},
                {"form", "no computable constant"},
                {"asserted", false},
                {"metric", "||b||_1 + log2(1 + ||a||_inf)"}};
  }
  return {};
}

} // namespace

AuditResult run_audit(AuditConfig const &cfg)
{
  if (cfg.max_len < 0)
    throw CliError(ExitCode::Domain, "--max-len must be non-negative");
  if (cfg.ctx.family == Family::Polycyclic && !cfg.ctx.spec)
    throw CliError(ExitCode::Usage, "pc audit needs a spec");

  std::vector<Record> records(cfg.samples);
  auto total = static_cast<int64_t>(cfg.samples);
  if (cfg.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (int64_t i = 0; i < total; ++i)
      records[i] = make_record(uint64_t(i), cfg);
  } else {
    for (int64_t i = 0; i < total; ++i)
      records[i] = make_record(uint64_t(i), cfg);
  }

  AuditResult out;
  double max_ratio = 0, sum_ratio = 0, max_witness = 0;
  uint64_t with_ratio = 0;
  json recs = json::array();
  for (auto &r : records) {
    out.violations += r.violation;
    max_witness = std::max(max_witness, r.witness);
    if (r.ratio) {
      max_ratio = std::max(max_ratio, *r.ratio);
      sum_ratio += *r.ratio;
      ++with_ratio;
    }
    recs.push_back(std::move(r.data));
  }
  double mean = with_ratio ? sum_ratio / double(with_ratio) : 0.0;

  json rep;
  rep["schema"] = 1;
  rep["command"] = "audit";
  rep["group"] = cfg.ctx.descriptor();
  rep["samples"] = cfg.samples;
  rep["seed"] = cfg.seed;
  rep["max_len"] = cfg.max_len;
  rep["bound"] = bound_json(cfg.ctx.family);
  rep["aggregate"] = json{{"max_ratio", max_ratio},
                          {"mean_ratio", mean},
                          {"ratio_samples", with_ratio},
                          {"max_witness_length", max_witness}};
  rep["violations"] = out.violations;
  rep["records"] = std::move(recs);
  out.report = std::move(rep);

  std::ostringstream s;
  s << "audit " << family_tag(cfg.ctx.family) << ": " << cfg.samples << " samples, seed "
    << cfg.seed << ", max ratio " << max_ratio << ", mean ratio " << mean << ", violations "
    << out.violations;
  out.summary = s.str();
  return out;
}

} // namespace conjforge::cli
