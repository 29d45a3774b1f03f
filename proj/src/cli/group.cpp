#include "conjforge/cli/group.hpp"

#include <fstream>

namespace conjforge::cli {

using lamplighter::LLElement;
using bs::BSElement;
using polycyclic::PCElement;

Family parse_family(std::string const &tag)
{
  if (tag == "ll")
    return Family::Lamplighter;
  if (tag == "bs")
    return Family::BaumslagSolitar;
  if (tag == "pc")
    return Family::Polycyclic;
  throw CliError(ExitCode::Usage, "unknown group '" + tag + "' (expected ll, bs or pc)");
}

std::string family_tag(Family f)
{
  switch (f) {
  case Family::Lamplighter:
    return "ll";
  case Family::BaumslagSolitar:
    return "bs";
  case Family::Polycyclic:
    return "pc";
  }
  return "?";
}

namespace {

json int_json(mpz_class const &x)
{
  if (x.fits_slong_p())
    return json(x.get_si());
  return json(x.get_str());
}

mpz_class int_from_json(json const &j)
{
  if (j.is_number_integer())
    return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class x;
    if (x.set_str(j.get<std::string>(), 10) == 0)
      return x;
  }
  throw CliError(ExitCode::Usage, "expected an integer, got " + j.dump());
}

exactnum::IntVec vec_from_json(json const &j)
{
  if (!j.is_array())
    throw CliError(ExitCode::Usage, "expected an integer array, got " + j.dump());
  exactnum::IntVec v;
  for (auto const &x : j)
    v.push_back(int_from_json(x));
  return v;
}

} // namespace

json GroupContext::descriptor() const
{
  json d;
  d["family"] = family_tag(family);
  if (family != Family::Polycyclic) {
    d["q"] = q;
    return d;
  }
  d["n"] = spec->n;
  d["k"] = spec->k;
  json gens = json::array();
  for (auto const &g : spec->generators) {
    json m = json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < g.cols(); ++c)
        row.push_back(int_json(g(i, c)));
      m.push_back(row);
    }
    gens.push_back(m);
  }
  d["generators"] = gens;
  return d;
}

polycyclic::PCGroupSpec spec_from_json(json const &j)
{
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw CliError(ExitCode::Usage, R"(spec: expected {"n":..,"k":..,"generators":[..]})");
  std::vector<exactnum::IntMat> gens;
  for (auto const &m : j["generators"]) {
    if (!m.is_array() || m.empty())
      throw CliError(ExitCode::Usage, "spec: generator must be a nonempty matrix");
    exactnum::IntMat g(m.size(), m[0].is_array() ? m[0].size() : 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto row = vec_from_json(m[i]);
      if (row.size() != g.cols())
        throw CliError(ExitCode::Usage, "spec: ragged generator matrix");
      for (std::size_t c = 0; c < row.size(); ++c)
        g(i, c) = row[c];
    }
    gens.push_back(std::move(g));
  }
  if (j.contains("k") && j["k"] != json(gens.size()))
    throw CliError(ExitCode::Usage, "spec: k does not match the number of generators");
  if (j.contains("n") && !gens.empty() && j["n"] != json(gens[0].rows()))
    throw CliError(ExitCode::Usage, "spec: n does not match the generator size");
  try {
    return polycyclic::pc_validate_spec(gens);
  } catch (polycyclic::SpecError const &e) {
    throw CliError(ExitCode::Domain, e.what());
  }
}

GroupContext make_context(std::string const &family, uint32_t q, std::string const &spec_path)
{
  GroupContext ctx;
  ctx.family = parse_family(family);
  ctx.q = q;
  if (ctx.family != Family::Polycyclic) {
    if (q < 2)
      throw CliError(ExitCode::Domain, "q must be at least 2");
    return ctx;
  }
  if (spec_path.empty())
    throw CliError(ExitCode::Usage, "--group pc requires --spec FILE");
  std::ifstream in(spec_path);
  if (!in)
    throw CliError(ExitCode::Usage, "cannot read spec file " + spec_path);
  json j;
  try {
    j = json::parse(in);
  } catch (json::parse_error const &e) {
    throw CliError(ExitCode::Usage, std::string("spec file: ") + e.what());
  }
  ctx.spec = std::make_shared<polycyclic::PCGroupSpec const>(spec_from_json(j));
  return ctx;
}

AnyElement parse_element(std::string const &text, GroupContext const &ctx)
{
  std::string body = text;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    Family tagged = parse_family(text.substr(0, colon));
    if (tagged != ctx.family)
      throw CliError(ExitCode::Usage, "mixed groups: element tagged " + family_tag(tagged) +
                                          " in a " + family_tag(ctx.family) + " command");
    body = text.substr(colon + 1);
  }
  try {
    switch (ctx.family) {
    case Family::Lamplighter:
      return LLElement::parse(body, ctx.q);
    case Family::BaumslagSolitar:
      return BSElement::parse(body, ctx.q);
    case Family::Polycyclic: {
      auto g = PCElement::parse(body);
      if (g.a.size() != ctx.spec->n || g.b.size() != ctx.spec->k)
        throw std::invalid_argument("element has dimensions (" + std::to_string(g.a.size()) +
                                    "," + std::to_string(g.b.size()) + "), spec needs (" +
                                    std::to_string(ctx.spec->n) + "," +
                                    std::to_string(ctx.spec->k) + ")");
      return g;
    }
    }
  } catch (std::invalid_argument const &e) {
    static char const *grammar[] = {"n;c@e,c@e,...", "n;a/q^k", "a1,..,an;b1,..,bk"};
    throw CliError(ExitCode::Usage, std::string(e.what()) + " [grammar: " +
                                        grammar[static_cast<int>(ctx.family)] + "]");
  }
  throw CliError(ExitCode::Usage, "unreachable family");
}

json to_json(AnyElement const &g)
{
  return std::visit(
      [](auto const &e) -> json {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, PCElement>) {
          json a = json::array(), b = json::array();
          for (auto const &x : e.a)
            a.push_back(int_json(x));
          for (auto const &x : e.b)
            b.push_back(int_json(x));
          return json{{"a", a}, {"b", b}};
        } else {
          return json{{"n", e.n}, {"f", e.f.to_string()}};
        }
      },
      g);
}

AnyElement element_from_json(json const &j, GroupContext const &ctx)
{
  if (j.is_string())
    return parse_element(j.get<std::string>(), ctx);
  if (!j.is_object())
    throw CliError(ExitCode::Usage, "element: expected an object or a string");
  if (ctx.family == Family::Polycyclic) {
    if (!j.contains("a") || !j.contains("b"))
      throw CliError(ExitCode::Usage, R"(pc element: expected {"a":[..],"b":[..]})");
    PCElement g(vec_from_json(j["a"]), vec_from_json(j["b"]));
    if (g.a.size() != ctx.spec->n || g.b.size() != ctx.spec->k)
      throw CliError(ExitCode::Usage, "pc element: dimensions do not match spec");
    return g;
  }
  if (!j.contains("n") || !j.contains("f") || !j["n"].is_number_integer() || !j["f"].is_string())
    throw CliError(ExitCode::Usage, R"(element: expected {"n":int,"f":string})");
  return parse_element(std::to_string(j["n"].get<int64_t>()) + ";" + j["f"].get<std::string>(), ctx);
}

std::string to_text(AnyElement const &g)
{ return std::visit([](auto const &e) { return e.to_string(); }, g); }

} // namespace conjforge::cli
