#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lnd/registry.hpp"
#include "lnd/runner.hpp"
#include "support/fixtures.hpp"

using namespace lnd;
using namespace lnd::dsl;
using lnd::testing::P;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(LND_CORPUS_DIR))
    if (e.path().extension() == ".lnd") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

const char* kHeader = "ring B (x, s, t, u, v)\n";

TEST(Parse, DerivationWithUnlistedVariables) {
  CheckFile f = parse(std::string(kHeader) + "derivation D { s -> x^3 }\n");
  const Derivation& d = f.derivations.at("D");
  int zeros = 0;
  for (const auto& im : d.images()) zeros += im.is_zero();
  EXPECT_EQ(zeros, 4);
  EXPECT_EQ(d.image(1), P(f.rings.at("B"), "x^3"));
}

TEST(Parse, HeightDirective) {
  CheckFile f = parse(std::string(kHeader) + "check height (x, s) >= 2\n");
  auto cs = f.checks();
  ASSERT_EQ(cs.size(), 1u);
  const auto* h = std::get_if<HeightCheck>(&cs[0]->body);
  ASSERT_NE(h, nullptr);
  EXPECT_EQ(h->op, ">=");
  EXPECT_EQ(h->value, 2u);
  EXPECT_EQ(h->ideal.size(), 2u);
  EXPECT_EQ(kind(*cs[0]), "height");
  EXPECT_EQ(cs[0]->line, 2);
  EXPECT_EQ(describe(*cs[0]), "height on B (x, s) >= 2");
}

TEST(Parse, CommentsAndBlankLines) {
  CheckFile f = parse("# header\n\nring B (x, s)  # trailing\n\n  check height (x) == 1\n");
  ASSERT_EQ(f.checks().size(), 1u);
  EXPECT_EQ(f.checks()[0]->line, 5);
}

struct BadInput {
  const char* text;
  int line;
};

TEST(Parse, ErrorsCarryPositions) {
  std::vector<BadInput> bad{
      {"ring B (x, s)\ncheck frobnicate D\n", 2},
      {"ring B (x, s)\npoly p = x + q\n", 2},
      {"ring B (x, s)\nderivation D { s -> x^ }\n", 2},
      {"ring B (x, x)\n", 1},
      {"check height (x) == 1\n", 1},
      {"ring B (x, s)\nderivation D { s -> x }\nderivation D { s -> 1 }\n", 3},
      {"ring B (x, s)\npoly p = x / s\n", 2},
      {"ring B (x, s)\n\n\ncheck height (x, s == 2\n", 4},
  };
  for (const auto& b : bad) {
    try {
      parse(b.text);
      ADD_FAILURE() << "accepted: " << b.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), b.line) << b.text << " -> " << e.what();
      EXPECT_GE(e.column(), 1);
    }
  }
}

TEST(Parse, ExpectedTokensListed) {
  try {
    parse("ring B (x, s)\ncheck height (x, s) 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(Print, CorpusRoundTrips) {
  auto files = corpus();
  ASSERT_EQ(files.size(), 11u);
  for (const auto& p : files) {
    std::string text = slurp(p);
    CheckFile f = parse(text);
    EXPECT_EQ(print(f), text) << p;
    EXPECT_EQ(print(parse(print(f))), print(f)) << p;
  }
}

TEST(Print, NormalizesSpacing) {
  std::string messy = "ring   B(x,s,t,u,v)\nderivation D{s->x^3,t->s}\ncheck   lnd D\n";
  std::string canon = print(parse(messy));
  EXPECT_EQ(canon, "ring B (x, s, t, u, v)\n\nderivation D {\n  s -> x^3,\n  t -> s\n}\n\ncheck lnd D\n");
  EXPECT_EQ(print(parse(canon)), canon);
}

TEST(Registry, MatchesCorpusBytes) {
  std::vector<std::pair<std::string, Params>> all{
      {"df5", {}},
      {"f6", {}},
      {"roberts", {{"m", 2}}},
      {"roberts", {{"m", 3}}},
      {"maubach", {{"b", 1}}},
      {"maubach", {{"b", 2}}},
      {"maubach", {{"b", 3}}},
  };
  for (long a = 1; a <= 2; ++a)
    for (long b = 1; b <= 2; ++b) all.push_back({"new7", {{"a", a}, {"b", b}}});
  for (const auto& [name, params] : all) {
    std::filesystem::path file = std::filesystem::path(LND_CORPUS_DIR) / builtin_file_name(name, params);
    ASSERT_TRUE(std::filesystem::exists(file)) << file;
    EXPECT_EQ(builtin_text(name, params), slurp(file)) << file;
  }
}

TEST(Registry, Contents) {
  CheckFile rob = builtin("roberts", {{"m", 2}});
  const Derivation& d = rob.derivations.begin()->second;
  auto r = d.ring();
  EXPECT_EQ(d.image(r->require_index("y1")), P(r, "x1^3"));
  EXPECT_EQ(d.image(r->require_index("v")), P(r, "(x1*x2*x3)^2"));

  CheckFile df5 = builtin("df5");
  for (int i = 1; i <= 6; ++i) EXPECT_TRUE(df5.polys.count("f" + std::to_string(i)));

  CheckFile n7 = builtin("new7", {{"a", 1}, {"b", 1}});
  EXPECT_EQ(n7.algebras.at("A").generators().size(), 9u);

  EXPECT_EQ(builtin_names().size(), 5u);
  EXPECT_EQ(builtin_defaults("new7"), (Params{{"a", 1}, {"b", 1}}));
  EXPECT_THROW(builtin_text("roberts", {{"m", 1}}), std::invalid_argument);
  EXPECT_THROW(builtin_text("roberts", {{"k", 2}}), std::invalid_argument);
  EXPECT_THROW(builtin_text("nope"), std::invalid_argument);
}

TEST(Run, CorpusPasses) {
  for (const auto& p : corpus()) {
    RunReport rep = run(parse(slurp(p)));
    EXPECT_EQ(rep.exit_code(), 0) << p;
    for (const auto& c : rep.results)
      EXPECT_EQ(c.status, Outcome::Pass) << p << ":" << c.line << " " << c.name << " " << c.message;
  }
}

TEST(Run, KernelFailureHasWitness) {
  std::string text = slurp(std::filesystem::path(LND_CORPUS_DIR) / "df5.lnd") + "check kernel D s\n";
  RunReport rep = run(parse(text));
  EXPECT_EQ(rep.exit_code(), 1);
  const CheckResult& last = rep.results.back();
  EXPECT_EQ(last.status, Outcome::Fail);
  ASSERT_FALSE(last.witnesses.empty());
  EXPECT_EQ(last.witnesses.front().second, "x^3");
}

TEST(Run, CeilingGivesInconclusive) {
  std::string text = "ring B (x, y, z)\n"
                     "check height (x^3 - y*z + 1, y^3 - x*z^2, z^3 - x^2*y + 2) == 3\n";
  RunReport rep = run(parse(text), RunOptions{8, 2});
  ASSERT_EQ(rep.results.size(), 1u);
  EXPECT_EQ(rep.results[0].status, Outcome::Inconclusive);
  EXPECT_EQ(rep.exit_code(), 2);
}

TEST(Run, LocalizedSearchExhaustion) {
  std::string text = slurp(std::filesystem::path(LND_CORPUS_DIR) / "df5.lnd") +
                     "check localized-member A s at x == 0\n";
  RunReport rep = run(parse(text));
  EXPECT_EQ(rep.results.back().status, Outcome::Inconclusive);
}

nlohmann::json strip_timing(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

TEST(Report, DeterministicAndVersioned) {
  std::string text = builtin_text("roberts", {{"m", 2}});
  RunOptions opts;
  std::string a = report_json(run(parse(text)), "roberts_m2.lnd", text, opts);
  std::string b = report_json(run(parse(text)), "roberts_m2.lnd", text, opts);
  auto ja = nlohmann::json::parse(a), jb = nlohmann::json::parse(b);
  EXPECT_EQ(strip_timing(ja).dump(), strip_timing(jb).dump());
  EXPECT_EQ(ja["schema_version"], kSchemaVersion);
  EXPECT_EQ(ja["tool"], "lndcheck");
  EXPECT_EQ(ja["input"]["bytes"], text.size());
  EXPECT_EQ(ja["input"]["fnv1a64"], digest(text));
  EXPECT_EQ(ja["summary"]["fail"], 0);
  EXPECT_EQ(ja["checks"].size(), ja["summary"]["total"]);
  EXPECT_EQ(digest(""), "cbf29ce484222325");
}

TEST(Report, MaubachJson) {
  auto j = nlohmann::json::parse(maubach_json(1));
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["alpha"]["summation"], "1/3");
  EXPECT_EQ(j["alpha"]["ratio"], "2");
  EXPECT_EQ(j["reading"], "transposed");
  EXPECT_EQ(j["n"], 2);
}

TEST(ParseDerivation, Standalone) {
  auto r = Ring::make({"x", "s", "t"});
  Derivation d = parse_derivation(r, "{ s -> x^3, t -> s }");
  EXPECT_EQ(d.image(2), P(r, "s"));
  EXPECT_THROW(parse_derivation(r, "{ q -> x }"), ParseError);
}

}  // namespace
