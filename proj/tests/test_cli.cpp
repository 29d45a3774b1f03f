#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "conjforge/cli/app.hpp"
#include "conjforge/cli/audit.hpp"
#include "conjforge/cli/group.hpp"
#include "conjforge/lamplighter/element.hpp"
#include "conjforge/polycyclic/element.hpp"

using namespace conjforge;
using namespace conjforge::cli;

namespace {

struct Run
{
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(std::string const &name, std::string const &body)
{
  auto p = std::filesystem::temp_directory_path() / ("conjforge_test_" + name);
  std::ofstream(p) << body;
  return p;
}

std::string sol_spec() { return temp_file("sol.json", R"({"n":2,"k":1,"generators":[[[2,1],[1,1]]]})"); }

std::string sl4_spec()
{
  return temp_file("sl4.json", R"({"n":4,"k":2,"generators":[
    [[2,1,0,0],[1,1,0,0],[0,0,1,0],[0,0,0,1]],
    [[1,0,0,0],[0,1,0,0],[0,0,2,1],[0,0,1,1]]]})");
}

json parse_out(Run const &r) { return json::parse(r.out); }

} // namespace

TEST(CliEval, Examples)
{
  auto a = run_cli({"eval", "len", "--group", "ll", "--q", "2", "--n", "0", "--f", "1@0,1@2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "{\"length\":6}\n");

  auto b = run_cli({"eval", "mul", "--group", "bs", "--q", "2", "--lhs", "1;0", "--rhs", "0;1"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out, "{\"n\":1,\"f\":\"2\"}\n");

  auto c = run_cli({"eval", "len", "--group", "ll", "--q", "2", "--n", "0", "--f", ""});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "{\"length\":0}\n");
}

TEST(CliEval, OracleLengthAgreesWithFormula)
{
  auto a = run_cli({"eval", "oracle-len", "--group", "ll", "--elem", "2;1@0,1@1"});
  auto b = run_cli({"eval", "len", "--group", "ll", "--elem", "2;1@0,1@1"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(parse_out(a)["length"], parse_out(b)["length"]);

  auto d = run_cli({"eval", "dl-dist", "--group", "ll", "--lhs", "0;", "--rhs", "0;1@0,1@2"});
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(parse_out(d)["distance"], 6);
}

TEST(CliEval, PolycyclicArithmetic)
{
  auto s = sol_spec();
  auto m = run_cli({"eval", "mul", "--group", "pc", "--spec", s, "--lhs", "0,0;1", "--rhs", "1,0;0"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(m.out, "{\"a\":[2,1],\"b\":[1]}\n");
  auto i = run_cli({"eval", "inv", "--group", "pc", "--spec", s, "--elem", "pc:1,0;1"});
  ASSERT_EQ(i.code, 0);
  EXPECT_EQ(i.out, "{\"a\":[-1,1],\"b\":[-1]}\n");
}

TEST(CliConj, Examples)
{
  auto a = run_cli({"conj", "--group", "ll", "--q", "2", "--u", "1;1@0", "--v", "1;1@1", "--oracle"});
  ASSERT_EQ(a.code, 0) << a.err;
  auto ja = parse_out(a);
  EXPECT_TRUE(ja["conjugate"].get<bool>());
  EXPECT_EQ(ja["witness"], json::parse(R"({"n":0,"f":"1@0"})"));
  EXPECT_TRUE(ja["within_bound"].get<bool>());
  EXPECT_TRUE(ja["oracle"]["agrees"].get<bool>());

  auto b = run_cli({"conj", "--group", "bs", "--q", "2", "--u", "2;0", "--v", "2;1", "--oracle"});
  ASSERT_EQ(b.code, 0);
  EXPECT_FALSE(parse_out(b)["conjugate"].get<bool>());

  for (auto const &g : {std::vector<std::string>{"ll", "3;1@-1,2@4"}, {"bs", "-2;5/3^3"}}) {
    auto c = run_cli({"conj", "--group", g[0], "--q", "3", "--u", g[1], "--v", g[1]});
    ASSERT_EQ(c.code, 0) << c.err;
    auto jc = parse_out(c);
    EXPECT_TRUE(jc["conjugate"].get<bool>());
    EXPECT_EQ(jc["witness"]["n"], 0);
    EXPECT_EQ(jc["witness"]["f"], g[0] == "ll" ? "" : "0");
    EXPECT_EQ(jc["witness_length"], 0);
  }

  auto s = sol_spec();
  auto p = run_cli({"conj", "--group", "pc", "--spec", s, "--u", "1,0;1", "--v", "1,0;1"});
  ASSERT_EQ(p.code, 0);
  auto jp = parse_out(p);
  EXPECT_EQ(jp["witness"], json::parse(R"({"a":[0,0],"b":[0]})"));
  EXPECT_TRUE(jp["bound"].is_null());
}

TEST(CliConj, PolycyclicWithOracle)
{
  auto s = sol_spec();
  auto r = run_cli({"conj", "--group", "pc", "--spec", s, "--u", "0,0;1", "--v", "5,3;1", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse_out(r);
  EXPECT_TRUE(j["conjugate"].get<bool>());
  EXPECT_TRUE(j["certificate"]["verified"].get<bool>());
  EXPECT_TRUE(j["oracle"]["agrees"].get<bool>());
}

TEST(CliExitCodes, Mapping)
{
  // 2: parse errors, unknown flags, mixed groups, unreadable spec.
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"eval"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "frobnicate", "--elem", "0;"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "len", "--group", "zz", "--elem", "0;"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "len", "--group", "ll", "--elem", "x;1@0"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "len", "--group", "bs", "--elem", "0;1/3^2"}).code, 2);
  auto bad = run_cli({"eval", "len", "--group", "ll", "--elem", "0;1@"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("n;c@e"), std::string::npos) << bad.err;
  EXPECT_EQ(run_cli({"conj", "--group", "ll", "--u", "ll:0;", "--v", "bs:0;0"}).code, 2);
  EXPECT_EQ(run_cli({"conj", "--group", "ll", "--u", "0;"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "len", "--group", "pc", "--elem", "0,0;0"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "len", "--group", "pc", "--spec", "/nonexistent/spec.json", "--elem", "0,0;0"})
                .code,
            2);
  auto junk = temp_file("junk.json", "{not json");
  EXPECT_EQ(run_cli({"eval", "len", "--group", "pc", "--spec", junk, "--elem", "0,0;0"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "len", "--group", "pc", "--spec", sol_spec(), "--elem", "0,0,0;0"}).code,
            2);

  // 3: domain errors.
  EXPECT_EQ(run_cli({"eval", "dl-dist", "--group", "bs", "--lhs", "0;0", "--rhs", "0;1"}).code, 3);
  EXPECT_EQ(run_cli({"eval", "len", "--group", "ll", "--q", "1", "--elem", "0;"}).code, 3);
  auto nonuni = temp_file("nonuni.json", R"({"n":2,"k":1,"generators":[[[2,0],[0,1]]]})");
  EXPECT_EQ(run_cli({"eval", "len", "--group", "pc", "--spec", nonuni, "--elem", "0,0;0"}).code, 3);
  EXPECT_EQ(
      run_cli({"eval", "oracle-len", "--group", "ll", "--elem", "0;1@9", "--radius", "3"}).code, 3);

  // 4: unwritable report path.
  EXPECT_EQ(run_cli({"audit", "--group", "ll", "--samples", "2", "--out", "/nonexistent/dir/r.json"})
                .code,
            4);

  // 0: help.
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(CliRoundTrip, PrintedElementsReparseProperty)
{
  std::mt19937_64 rng(31);
  GroupContext pc_ctx = make_context("pc", 2, sl4_spec());
  for (int it = 0; it < 10000; ++it) {
    uint32_t q = 2 + it % 5;
    GroupContext ll_ctx{Family::Lamplighter, q, nullptr};
    GroupContext bs_ctx{Family::BaumslagSolitar, q, nullptr};
    AnyElement es[] = {sample_ll(rng, q, 10), sample_bs(rng, q, 10),
                       sample_pc(rng, *pc_ctx.spec, 20)};
    GroupContext const *ctxs[] = {&ll_ctx, &bs_ctx, &pc_ctx};
    for (int f = 0; f < 3; ++f) {
      ASSERT_EQ(parse_element(to_text(es[f]), *ctxs[f]), es[f]) << to_text(es[f]);
      ASSERT_EQ(element_from_json(to_json(es[f]), *ctxs[f]), es[f]) << to_text(es[f]);
      ASSERT_EQ(element_from_json(json::parse(to_json(es[f]).dump()), *ctxs[f]), es[f]);
    }
  }
}

TEST(CliRoundTrip, CommandOutputReparses)
{
  std::mt19937_64 rng(32);
  GroupContext ctx{Family::BaumslagSolitar, 3, nullptr};
  for (int it = 0; it < 200; ++it) {
    auto a = sample_bs(rng, 3, 8), b = sample_bs(rng, 3, 8);
    auto r = run_cli({"eval", "mul", "--group", "bs", "--q", "3", "--lhs", a.to_string(), "--rhs",
                      b.to_string()});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_EQ(element_from_json(parse_out(r), ctx), AnyElement(bs::bs_mul(a, b)));
  }
}

TEST(CliAudit, ZeroSamples)
{
  auto r = run_cli({"audit", "--group", "bs", "--samples", "0"});
  ASSERT_EQ(r.code, 0);
  auto j = parse_out(r);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["samples"], 0);
  EXPECT_TRUE(j["records"].empty());
  EXPECT_EQ(j["violations"], 0);
}

TEST(CliAudit, LamplighterExample)
{
  auto r = run_cli({"audit", "--group", "ll", "--q", "2", "--samples", "1000", "--seed", "42",
                    "--max-len", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse_out(r);
  EXPECT_EQ(j["violations"], 0);
  EXPECT_LE(j["aggregate"]["max_ratio"].get<double>(), 3.0);
  EXPECT_EQ(j["records"].size(), 1000u);
  for (auto const &rec : j["records"])
    ASSERT_TRUE(rec["verified"].get<bool>());
}

TEST(CliAudit, PolycyclicExample)
{
  auto r = run_cli({"audit", "--group", "pc", "--spec", sol_spec(), "--samples", "500", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse_out(r);
  EXPECT_EQ(j["violations"], 0);
  for (auto const &rec : j["records"]) {
    ASSERT_TRUE(rec["verified"].get<bool>());
    if (rec.contains("y_window")) {
      ASSERT_TRUE(rec["y_window"].get<bool>());
    }
  }
}

TEST(CliAudit, ReportFileMatchesStdout)
{
  auto p = std::filesystem::temp_directory_path() / "conjforge_test_report.json";
  auto a = run_cli({"audit", "--group", "bs", "--q", "3", "--samples", "50", "--seed", "5",
                    "--out", p.string()});
  ASSERT_EQ(a.code, 0);
  EXPECT_TRUE(a.out.empty());
  std::stringstream file;
  file << std::ifstream(p).rdbuf();
  auto b = run_cli({"audit", "--group", "bs", "--q", "3", "--samples", "50", "--seed", "5"});
  EXPECT_EQ(file.str(), b.out);
}

TEST(CliAudit, ByteIdenticalAcrossRunsAndExecution)
{
  std::vector<std::vector<std::string>> groups = {
      {"--group", "ll", "--q", "3"},
      {"--group", "bs", "--q", "2"},
      {"--group", "pc", "--spec", sl4_spec()},
  };
  for (auto const &g : groups) {
    std::vector<std::string> args = {"audit", "--samples", "120", "--seed", "99", "--max-len", "10"};
    args.insert(args.end(), g.begin(), g.end());
    auto a = run_cli(args), b = run_cli(args);
    args.push_back("--serial");
    auto c = run_cli(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_EQ(a.err, c.err);
  }
  auto d = run_cli({"audit", "--group", "ll", "--samples", "40", "--seed", "1"});
  auto e = run_cli({"audit", "--group", "ll", "--samples", "40", "--seed", "2"});
  EXPECT_NE(d.out, e.out);
}
