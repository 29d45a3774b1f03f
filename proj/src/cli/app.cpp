#include "conjforge/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "conjforge/bs/conjugacy.hpp"
#include "conjforge/bs/metric.hpp"
#include "conjforge/cli/audit.hpp"
#include "conjforge/cli/group.hpp"
#include "conjforge/lamplighter/conjugacy.hpp"
#include "conjforge/lamplighter/dl.hpp"
#include "conjforge/lamplighter/metric.hpp"
#include "conjforge/oracle/bs.hpp"
#include "conjforge/oracle/lamplighter.hpp"
#include "conjforge/oracle/polycyclic.hpp"
#include "conjforge/polycyclic/conjugacy.hpp"

namespace conjforge::cli {

using lamplighter::LLElement;
using bs::BSElement;
using polycyclic::PCElement;

namespace {

struct GroupFlags
{
  std::string group = "ll";
  uint32_t q = 2;
  std::string spec;

  void attach(CLI::App *cmd)
  {
    cmd->add_option("--group", group, "ll, bs or pc")->check(CLI::IsMember({"ll", "bs", "pc"}));
    cmd->add_option("--q", q, "modulus / base for ll and bs");
    cmd->add_option("--spec", spec, "JSON spec file for pc");
  }
};

struct EvalFlags
{
  std::string op;
  std::optional<std::string> elem, lhs, rhs, f;
  std::optional<int64_t> n;
  std::optional<int64_t> radius;
};

struct ConjFlags
{
  std::string u, v;
  bool oracle = false;
};

struct AuditFlags
{
  uint64_t samples = 100;
  uint64_t seed = 0;
  int64_t max_len = 12;
  std::string out;
  bool serial = false;
};

std::optional<int64_t> exact_of(std::optional<long> const &x)
{ return x ? std::optional<int64_t>(*x) : std::nullopt; }

json opt(std::optional<int64_t> const &x) { return x ? json(*x) : json(nullptr); }

AnyElement single_element(EvalFlags const &ef, GroupContext const &ctx)
{
  if (ef.elem)
    return parse_element(*ef.elem, ctx);
  if (ef.n && ctx.family != Family::Polycyclic) {
    std::string f = ef.f.value_or(ctx.family == Family::BaumslagSolitar ? "0" : "");
    return parse_element(std::to_string(*ef.n) + ";" + f, ctx);
  }
  throw CliError(ExitCode::Usage, "eval " + ef.op + ": give --elem, or --n/--f for ll and bs");
}

std::pair<AnyElement, AnyElement> two_elements(EvalFlags const &ef, GroupContext const &ctx)
{
  if (!ef.lhs || !ef.rhs)
    throw CliError(ExitCode::Usage, "eval " + ef.op + ": needs --lhs and --rhs");
  return {parse_element(*ef.lhs, ctx), parse_element(*ef.rhs, ctx)};
}

int64_t default_radius(Family f)
{
  switch (f) {
  case Family::Lamplighter:
    return 6;
  case Family::BaumslagSolitar:
    return 8;
  case Family::Polycyclic:
    return 6;
  }
  return 6;
}

json eval_ll(EvalFlags const &ef, GroupContext const &ctx)
{
  auto ll = [](AnyElement const &a) { return std::get<LLElement>(a); };
  if (ef.op == "mul") {
    auto [a, b] = two_elements(ef, ctx);
    return to_json(lamplighter::ll_mul(ll(a), ll(b)));
  }
  if (ef.op == "dl-dist") {
    auto [a, b] = two_elements(ef, ctx);
    auto x = lamplighter::dl_basepoint(ctx.q);
    return json{{"distance", lamplighter::dl_distance(lamplighter::dl_action(ll(a), x),
                                                      lamplighter::dl_action(ll(b), x))}};
  }
  LLElement g = ll(single_element(ef, ctx));
  if (ef.op == "inv")
    return to_json(lamplighter::ll_inv(g));
  if (ef.op == "len")
    return json{{"length", lamplighter::ll_word_length(g)}};
  if (ef.op == "bounds") {
    auto b = lamplighter::ll_length_bounds(g);
    return json{{"length", lamplighter::ll_word_length(g)},
                {"lower_shift", b.lower_shift},
                {"lower_support", b.lower_support},
                {"lower_support_gap", b.lower_support_gap},
                {"exact_unipotent", opt(b.exact_unipotent)},
                {"exact_semisimple", opt(b.exact_semisimple)},
                {"upper_closed_form", b.upper_closed_form},
                {"upper_triangle", b.upper_triangle}};
  }
  int64_t r = ef.radius.value_or(default_radius(ctx.family));
  return json{{"length", oracle::bfs_word_length(oracle::ll_generating_set(ctx.q), g, r)},
              {"radius", r}};
}

json eval_bs(EvalFlags const &ef, GroupContext const &ctx)
{
  auto el = [](AnyElement const &a) { return std::get<BSElement>(a); };
  if (ef.op == "mul") {
    auto [a, b] = two_elements(ef, ctx);
    return to_json(bs::bs_mul(el(a), el(b)));
  }
  if (ef.op == "dl-dist")
    throw CliError(ExitCode::Domain, "dl-dist is defined for the lamplighter only");
  BSElement g = el(single_element(ef, ctx));
  if (ef.op == "inv")
    return to_json(bs::bs_inv(g));
  if (ef.op == "len" || ef.op == "bounds") {
    auto e = bs::bs_length_bounds(g);
    json j{{"lower", e.lower}, {"upper", e.upper}, {"exact", opt(exact_of(e.exact))}};
    if (ef.op == "bounds")
      j["upper_closed_form"] = bs::bs_upper_closed_form(g);
    return j;
  }
  int64_t r = ef.radius.value_or(default_radius(ctx.family));
  return json{{"length", oracle::bfs_word_length(oracle::bs_generating_set(ctx.q), g, r)},
              {"radius", r}};
}

json eval_pc(EvalFlags const &ef, GroupContext const &ctx)
{
  auto const &spec = *ctx.spec;
  auto el = [](AnyElement const &a) { return std::get<PCElement>(a); };
  if (ef.op == "mul") {
    auto [a, b] = two_elements(ef, ctx);
    return to_json(polycyclic::pc_mul(el(a), el(b), spec));
  }
  if (ef.op == "dl-dist")
    throw CliError(ExitCode::Domain, "dl-dist is defined for the lamplighter only");
  PCElement g = el(single_element(ef, ctx));
  if (ef.op == "inv")
    return to_json(polycyclic::pc_inv(g, spec));
  if (ef.op == "len" || ef.op == "bounds")
    return json{{"estimate", polycyclic::pc_length_est(g, spec)}};
  int64_t r = ef.radius.value_or(default_radius(ctx.family));
  return json{{"length", oracle::bfs_word_length(oracle::pc_generating_set(spec), g, r)},
              {"radius", r}};
}

json certificate_json(Certificate const &c)
{ return json{{"verified", c.verified}, {"checks", c.checks}}; }

template <class Outcome>
json outcome_json(Outcome const &o)
{
  json j;
  j["conjugate"] = o.conjugate;
  j["witness"] = o.witness ? to_json(*o.witness) : json(nullptr);
  return j;
}

/// Returns the result and whether the oracle (if requested) disagreed.
std::pair<json, bool> conj_ll(ConjFlags const &cf, GroupContext const &ctx)
{
  auto u = std::get<LLElement>(parse_element(cf.u, ctx));
  auto v = std::get<LLElement>(parse_element(cf.v, ctx));
  auto o = lamplighter::ll_conjugacy(u, v);
  int64_t lu = lamplighter::ll_word_length(u), lv = lamplighter::ll_word_length(v);
  json j = outcome_json(o);
  j["witness_length"] = o.witness ? json(lamplighter::ll_word_length(*o.witness)) : json(nullptr);
  j["bound"] = lamplighter::kLLBoundConstant * (lu + lv);
  j["within_bound"] = o.witness ? json(lamplighter::ll_within_bound(o)) : json(nullptr);
  j["lengths"] = json{{"u", lu}, {"v", lv}};
  j["certificate"] = certificate_json(o.certificate);
  bool disagree = false;
  if (cf.oracle) {
    int64_t radius = lamplighter::kLLBoundConstant * (lu + lv);
    auto b = oracle::brute_conjugator_split(oracle::ll_generating_set(ctx.q), u, v, radius);
    disagree = b.witness.has_value() != o.conjugate;
    j["oracle"] = json{{"conjugate", b.witness.has_value()},
                       {"radius", radius},
                       {"complete", true},
                       {"examined", b.examined},
                       {"agrees", !disagree}};
  }
  return {j, disagree};
}

std::pair<json, bool> conj_bs(ConjFlags const &cf, GroupContext const &ctx)
{
  auto u = std::get<BSElement>(parse_element(cf.u, ctx));
  auto v = std::get<BSElement>(parse_element(cf.v, ctx));
  auto o = bs::bs_conjugacy(u, v);
  double bound = bs::bs_bound_constant() * (o.lengths.u + o.lengths.v);
  json j = outcome_json(o);
  j["witness_length"] = o.witness ? json(o.lengths.witness) : json(nullptr);
  j["bound"] = bound;
  j["within_bound"] = o.witness ? json(o.lengths.witness <= bound) : json(nullptr);
  j["lengths"] = json{{"u", o.lengths.u}, {"v", o.lengths.v}, {"estimates", true}};
  j["certificate"] = certificate_json(o.certificate);
  bool disagree = false;
  if (cf.oracle) {
    oracle::BSBox box;
    auto b = oracle::bs_box_conjugator(u, v, box);
    // A box search is only a semi-decision: a miss does not refute a witness.
    disagree = b.witness.has_value() && !o.conjugate;
    j["oracle"] = json{{"conjugate", b.witness.has_value()},
                       {"complete", false},
                       {"examined", b.examined},
                       {"agrees", !disagree}};
  }
  return {j, disagree};
}

std::pair<json, bool> conj_pc(ConjFlags const &cf, GroupContext const &ctx)
{
  auto const &spec = *ctx.spec;
  auto u = std::get<PCElement>(parse_element(cf.u, ctx));
  auto v = std::get<PCElement>(parse_element(cf.v, ctx));
  auto o = polycyclic::pc_conjugacy(u, v, spec);
  json j = outcome_json(o);
  j["witness_length"] = o.witness ? json(o.lengths.witness) : json(nullptr);
  j["bound"] = nullptr;
  j["within_bound"] = nullptr;
  j["lengths"] = json{{"u", o.lengths.u}, {"v", o.lengths.v}, {"estimates", true}};
  j["certificate"] = certificate_json(o.certificate);
  j["search"] = json{{"candidates", o.stats.candidates}, {"window", o.stats.window}};
  bool disagree = false;
  if (cf.oracle) {
    auto b = oracle::pc_box_conjugator(u, v, spec);
    disagree = b.witness.has_value() && !o.conjugate;
    j["oracle"] = json{{"conjugate", b.witness.has_value()},
                       {"complete", false},
                       {"examined", b.examined},
                       {"agrees", !disagree}};
  }
  return {j, disagree};
}

int dispatch(CLI::App &app, GroupFlags const &gf, EvalFlags const &ef, ConjFlags const &cf,
             AuditFlags const &af, std::ostream &out, std::ostream &err)
{
  GroupContext ctx = make_context(gf.group, gf.q, gf.spec);
  if (app.got_subcommand("eval")) {
    json j;
    switch (ctx.family) {
    case Family::Lamplighter:
      j = eval_ll(ef, ctx);
      break;
    case Family::BaumslagSolitar:
      j = eval_bs(ef, ctx);
      break;
    case Family::Polycyclic:
      j = eval_pc(ef, ctx);
      break;
    }
    out << j.dump() << "\n";
    return 0;
  }
  if (app.got_subcommand("conj")) {
    std::pair<json, bool> r;
    switch (ctx.family) {
    case Family::Lamplighter:
      r = conj_ll(cf, ctx);
      break;
    case Family::BaumslagSolitar:
      r = conj_bs(cf, ctx);
      break;
    case Family::Polycyclic:
      r = conj_pc(cf, ctx);
      break;
    }
    out << r.first.dump() << "\n";
    if (r.second) {
      err << "oracle disagrees with the decision procedure\n";
      return static_cast<int>(ExitCode::Failed);
    }
    return 0;
  }

  std::ofstream file;
  if (!af.out.empty()) {
    file.open(af.out, std::ios::binary | std::ios::trunc);
    if (!file)
      throw CliError(ExitCode::Io, "cannot write " + af.out);
  }
  AuditConfig cfg{ctx, af.samples, af.seed, af.max_len, af.serial ? Exec::Serial : Exec::Parallel};
  AuditResult res = run_audit(cfg);
  std::string text = res.report.dump(2) + "\n";
  if (file.is_open()) {
    file << text;
    file.flush();
    if (!file)
      throw CliError(ExitCode::Io, "failed writing " + af.out);
  } else {
    out << text;
  }
  err << res.summary << "\n";
  return res.violations ? static_cast<int>(ExitCode::Failed) : 0;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Conjugacy decisions, short conjugators and bound audits in solvable groups",
               "conj-forge"};
  app.require_subcommand(1);

  GroupFlags gf;
  EvalFlags ef;
  ConjFlags cf;
  AuditFlags af;

  auto *eval = app.add_subcommand("eval", "group arithmetic and metrics");
  gf.attach(eval);
  eval->add_option("op", ef.op, "mul, inv, len, bounds, dl-dist or oracle-len")
      ->required()
      ->check(CLI::IsMember({"mul", "inv", "len", "bounds", "dl-dist", "oracle-len"}));
  eval->add_option("--elem", ef.elem, "element in the group grammar");
  eval->add_option("--n", ef.n, "shift part (ll, bs)");
  eval->add_option("--f", ef.f, "translation part (ll, bs)");
  eval->add_option("--lhs", ef.lhs, "left operand");
  eval->add_option("--rhs", ef.rhs, "right operand");
  eval->add_option("--radius", ef.radius, "BFS radius for oracle-len");

  auto *conj = app.add_subcommand("conj", "decide conjugacy and return a witness");
  gf.attach(conj);
  conj->add_option("--u", cf.u, "first element")->required();
  conj->add_option("--v", cf.v, "second element")->required();
  conj->add_flag("--oracle", cf.oracle, "cross-check with brute-force search");

  auto *audit = app.add_subcommand("audit", "randomised conjugator-length audit");
  gf.attach(audit);
  audit->add_option("--samples", af.samples, "number of samples");
  audit->add_option("--seed", af.seed, "RNG seed");
  audit->add_option("--max-len", af.max_len, "sampling budget L");
  audit->add_option("--out", af.out, "report file (stdout when absent)");
  audit->add_flag("--serial", af.serial, "run samples on one thread");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
  }

  try {
    return dispatch(app, gf, ef, cf, af, out, err);
  } catch (CliError const &e) {
    err << "conj-forge: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (oracle::ResourceLimit const &e) {
    err << "conj-forge: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Domain);
  } catch (std::invalid_argument const &e) {
    err << "conj-forge: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Domain);
  } catch (std::domain_error const &e) {
    err << "conj-forge: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Domain);
  } catch (std::out_of_range const &e) {
    err << "conj-forge: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Domain);
  } catch (std::logic_error const &e) {
    err << "conj-forge: internal check failed: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Failed);
  } catch (std::runtime_error const &e) {
    err << "conj-forge: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Domain);
  }
}

} // namespace conjforge::cli
